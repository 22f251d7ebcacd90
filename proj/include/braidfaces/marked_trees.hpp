#pragma once

#include <utility>
#include <vector>

#include "braidfaces/arrangement.hpp"
#include "braidfaces/trees.hpp"

namespace braidfaces {

// A tree with a set of marked cadet edges; an edge marked at slot 0 must have
// an increasing label pair (parent < child).
struct MTree {
    Tree tree;
    std::vector<std::pair<int, int>> marks;  // sorted (parent label, slot)

    bool is_marked(int parent, int slot) const;
    bool operator==(const MTree&) const = default;
};

// Blocks of the marked-edge equivalence; each block is a path of marked cadet
// edges listed from its anchor (the node ancestral to all others) downwards.
struct BlockData {
    std::vector<std::vector<int>> blocks;  // ordered by min element; members in path order
    std::vector<int> anchor;               // per block
    std::vector<int> block_of;             // label -> block index (0-based)
    std::vector<long> delta;               // label -> drift(i) - drift(anchor of block)
    std::vector<std::vector<long>> shadow;  // per block, sorted distinct delta values
};

BlockData block_data(const MTree& t);

std::vector<MTree> enumerate_marked(int m, int n);

bool is_A_connected(const MTree& t, const Arrangement& A);
bool satisfies_cadet_condition(const MTree& t, const Arrangement& A);
bool is_admissible(const MTree& t, const Arrangement& A);

// Marked (m,n)-trees indexing the faces of A. Refuses non-strongly-transitive
// arrangements unless allow_any is set (the bijection theorem then gives no
// guarantee and results carry no meaning beyond the raw predicates).
std::vector<MTree> enumerate_admissible(const Arrangement& A, int m, bool allow_any = false);

// Characterization for B_{m,I}^n: every node in slot m must form a pair in I with its parent.
bool cat2shi_filter(const MTree& t, const Ideal& I, int m);

// Reach of node j in a multi-Catalan arrangement: max of m_k + drift(k) - drift(j)
// over marked ancestors k of j in its block (including j itself).
long multi_reach(const MTree& t, const std::vector<int>& mvec, int j);
// Every slot beyond the reach of its parent node must hold a leaf.
bool multi_admissible(const MTree& t, const std::vector<int>& mvec);

}  // namespace braidfaces
