#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "braidfaces/arrangement.hpp"
#include "braidfaces/marked_trees.hpp"
#include "braidfaces/rational.hpp"

namespace braidfaces {

// One sign per canonical triple of an arrangement, aligned with A.triples():
// -1, 0, +1 mean x_i - x_j is below, on, above the hyperplane offset.
struct SignVector {
    std::vector<std::int8_t> signs;
    auto operator<=>(const SignVector&) const = default;
};

// T lies in the tree family of A: no cadet edge uses an absent canonical triple.
bool tree_in_region_family(const Arrangement& A, const Tree& T);

// The region map: full sign vector (no zeros) of the region indexed by T.
SignVector region_sign_vector(const Arrangement& A, const Tree& T);

// The face map: zero exactly on triples joining marked-equivalent nodes at
// their drift difference; strict signs from the vertex order elsewhere.
SignVector face_sign_vector(const Arrangement& A, const MTree& t);

// Number of connected components of the zero-set equality graph = face dimension.
int face_dim(const Arrangement& A, const SignVector& sv);

// Difference constraints x_i - x_j = s and x_i - x_j < s.
struct DiffConstraint {
    int i = 0;
    int j = 0;
    long s = 0;
    bool strict = false;  // false: equality (stored once, enforced both ways)
};

struct DiffSystem {
    int n = 0;
    std::vector<DiffConstraint> constraints;

    static DiffSystem from_sign_vector(const Arrangement& A, const SignVector& sv);
};

// Exact feasibility: strict inequalities carry lexicographic weight (s, -1);
// shortest-path potentials realize x_i = a_i + b_i/(n+1), shifted so each
// component's minimum is zero. Returns nothing when a negative cycle exists.
std::optional<std::vector<Rat>> solve_diff_system(const DiffSystem& sys);

std::optional<std::vector<Rat>> feasible_witness(const SignVector& sv, const Arrangement& A);

// Direct re-evaluation of a point against every signed constraint.
bool witness_satisfies(const std::vector<Rat>& x, const SignVector& sv, const Arrangement& A);

}  // namespace braidfaces
