#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "braidfaces/arrangement.hpp"
#include "braidfaces/face_map.hpp"

namespace braidfaces {

struct BudgetExceeded : std::runtime_error {
    long long required;
    explicit BudgetExceeded(long long req)
        : std::runtime_error("grid budget exceeded; need cap >= " + std::to_string(req)),
          required(req) {}
};

// Per-coordinate exact grid a + b/(n+1), a in [0, (n-1)*max(m,1)], b in [0, n-1].
// Every face of an arrangement within A_m^n contains such a point: the
// shortest-path witness normal form lands in this window after shifting.
struct GridSpec {
    int n = 0;
    long a_max = 0;
    int b_count = 0;

    static GridSpec for_arrangement(const Arrangement& A);
    long long values_per_coordinate() const { return (a_max + 1) * b_count; }
    long long point_count() const;  // values^n, saturating at LLONG_MAX
};

inline constexpr long long kDefaultGridBudget = 100'000'000;

// Ground truth: evaluates every triple's sign at every grid point and returns
// the deduplicated set of sign vectors, i.e. the set of faces.
std::set<SignVector> enumerate_faces_grid(const Arrangement& A,
                                          long long budget_cap = kDefaultGridBudget,
                                          int jobs = 1);

// Faces by dimension: (c_{n,1}, ..., c_{n,n}).
std::vector<long long> face_counts(const Arrangement& A,
                                   long long budget_cap = kDefaultGridBudget, int jobs = 1);

// Number of full-dimensional faces (sign vectors without zeros).
long long region_count(const Arrangement& A, long long budget_cap = kDefaultGridBudget,
                       int jobs = 1);

}  // namespace braidfaces
