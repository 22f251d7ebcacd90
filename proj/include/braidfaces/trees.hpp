#pragma once

#include <string>
#include <vector>

#include "braidfaces/rational.hpp"

namespace braidfaces {

// A vertex of a tree: either the labeled node itself (leaf_slot = -1),
// or the unlabeled leaf occupying child slot leaf_slot of that node.
struct Vertex {
    int node = 0;
    int leaf_slot = -1;

    bool is_leaf() const { return leaf_slot >= 0; }
    bool operator==(const Vertex&) const = default;
};

struct CadetEdge {
    int parent = 0;
    int slot = 0;
    int child = 0;
    bool operator==(const CadetEdge&) const = default;
    auto operator<=>(const CadetEdge&) const = default;
};

// Rooted (m+1)-ary tree with n nodes labeled by [n]; unlabeled leaves fill the
// remaining child slots. Immutable value with structural equality.
class Tree {
public:
    Tree() = default;  // the empty tree (n = 0)
    // kids[label-1][slot] is the child label in that slot, 0 for a leaf.
    Tree(int m, int n, int root, std::vector<std::vector<int>> kids);

    int m() const { return m_; }
    int n() const { return n_; }
    int root() const { return root_; }
    int child(int node, int slot) const { return kids_[node - 1][slot]; }
    int parent(int node) const { return parent_[node - 1]; }      // 0 for the root
    int parent_slot(int node) const { return pslot_[node - 1]; }  // -1 for the root

    Vertex node_vertex(int label) const { return Vertex{label, -1}; }
    Vertex child_vertex(int node, int slot) const {
        int c = child(node, slot);
        return c ? Vertex{c, -1} : Vertex{node, slot};
    }

    std::vector<int> path_of(const Vertex& v) const;
    long drift(const Vertex& v) const;
    long drift_node(int label) const { return drift_[label - 1]; }

    // The total order on vertices: by drift, then right-to-left at the first
    // divergence, ancestors first. Returns -1, 0 or +1.
    int cmp(const Vertex& v, const Vertex& w) const;

    // One entry per node whose rightmost node-child exists; later slots are all leaves.
    std::vector<CadetEdge> cadet_edges() const;

    bool operator==(const Tree& other) const {
        return m_ == other.m_ && n_ == other.n_ && root_ == other.root_ && kids_ == other.kids_;
    }

    std::string to_text() const;  // compact bracket form, leaf = "."

private:
    int m_ = 0;
    int n_ = 0;
    int root_ = 0;
    std::vector<std::vector<int>> kids_;
    std::vector<int> parent_;
    std::vector<int> pslot_;
    std::vector<long> drift_;
    std::vector<std::vector<int>> path_;
};

// All (m,n)-trees, each exactly once: unlabeled shapes by depth-first slot
// filling, then every labeling.
std::vector<Tree> enumerate_trees(int m, int n);

// n!/(mn+1) * C((m+1)n, n)
Int tree_count_formula(int m, int n);

}  // namespace braidfaces
