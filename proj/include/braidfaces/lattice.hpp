#pragma once

#include <utility>
#include <vector>

#include "braidfaces/arrangement.hpp"
#include "braidfaces/face_map.hpp"
#include "braidfaces/marked_trees.hpp"

namespace braidfaces {

// A flat of the intersection lattice encoded as (set partition of [n], delta),
// with per-block minimum delta equal to 0 and every block connected through
// hyperplanes of the arrangement. Blocks are ordered by minimum element;
// members within a block are sorted by (delta, label).
struct Flat {
    std::vector<std::vector<int>> blocks;
    std::vector<long> delta;  // label-indexed, delta[0] unused

    int dim() const { return static_cast<int>(blocks.size()); }
    int block_of(int label) const;
    bool operator==(const Flat&) const = default;
};

// The arrangement induced on a flat, in the flat's own coordinates: block k
// becomes coordinate x_k, anchored at the block's first member.
struct Restriction {
    Flat flat;
    Arrangement sub;
    std::vector<int> anchors;
};

// All flats, the ambient space included (every block a singleton, delta = 0).
std::vector<Flat> enumerate_flats(const Arrangement& A);

Restriction restrict_to(const Arrangement& A, const Flat& L);

// Contraction: collapse each marked path to a node, keeping child slots offset
// by the member's delta; the result is a (mn, d)-tree of the restriction.
std::pair<Flat, Tree> contract(const MTree& t, const Arrangement& A);

// Expansion: inverse of contract. m is the arity of the produced marked tree.
MTree expand(const Flat& L, const Tree& wt, const Arrangement& A, int m);

// Pull a region sign vector of restrict_to(A, L) back to a face sign vector of A.
SignVector theta(const Arrangement& A, const Flat& L, const SignVector& region_signs);

}  // namespace braidfaces
