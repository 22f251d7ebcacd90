#include "braidfaces/marked_trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidfaces {

bool MTree::is_marked(int parent, int slot) const {
    return std::binary_search(marks.begin(), marks.end(), std::make_pair(parent, slot));
}

BlockData block_data(const MTree& t) {
    const Tree& T = t.tree;
    const int n = T.n();
    BlockData bd;
    bd.block_of.assign(n + 1, -1);
    bd.delta.assign(n + 1, 0);

    // marked children per node; marked edges form vertex-disjoint downward paths
    std::vector<int> marked_child(n + 1, 0);
    std::vector<bool> has_marked_parent(n + 1, false);
    for (auto [j, s] : t.marks) {
        int i = T.child(j, s);
        if (i == 0) throw std::invalid_argument("mark on a leaf slot");
        marked_child[j] = i;
        has_marked_parent[i] = true;
    }

    std::vector<std::vector<int>> blocks;
    for (int a = 1; a <= n; ++a) {
        if (has_marked_parent[a]) continue;  // not an anchor
        std::vector<int> path;
        for (int v = a; v != 0; v = marked_child[v]) path.push_back(v);
        blocks.push_back(std::move(path));
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) {
        return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
    });

    bd.blocks = std::move(blocks);
    bd.anchor.resize(bd.blocks.size());
    bd.shadow.resize(bd.blocks.size());
    for (std::size_t k = 0; k < bd.blocks.size(); ++k) {
        const auto& blk = bd.blocks[k];
        bd.anchor[k] = blk.front();
        long d0 = T.drift_node(blk.front());
        std::vector<long> sh;
        for (int v : blk) {
            bd.block_of[v] = static_cast<int>(k);
            bd.delta[v] = T.drift_node(v) - d0;
            sh.push_back(bd.delta[v]);
        }
        std::sort(sh.begin(), sh.end());
        sh.erase(std::unique(sh.begin(), sh.end()), sh.end());
        bd.shadow[k] = std::move(sh);
    }
    return bd;
}

std::vector<MTree> enumerate_marked(int m, int n) {
    std::vector<MTree> out;
    for (Tree& T : enumerate_trees(m, n)) {
        std::vector<CadetEdge> cadets = T.cadet_edges();
        std::vector<CadetEdge> markable;
        for (const CadetEdge& e : cadets)
            if (e.slot > 0 || e.parent < e.child) markable.push_back(e);
        const std::size_t k = markable.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            std::vector<std::pair<int, int>> marks;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b))
                    marks.push_back({markable[b].parent, markable[b].slot});
            std::sort(marks.begin(), marks.end());
            out.push_back(MTree{T, std::move(marks)});
        }
    }
    return out;
}

bool is_A_connected(const MTree& t, const Arrangement& A) {
    const Tree& T = t.tree;
    BlockData bd = block_data(t);
    for (const auto& blk : bd.blocks) {
        const int sz = static_cast<int>(blk.size());
        if (sz == 1) continue;
        // connectivity of the graph with edges {a,b} when {x_a - x_b = drift diff} is in A
        std::vector<int> comp(sz);
        for (int i = 0; i < sz; ++i) comp[i] = i;
        auto find = [&](int x) {
            while (comp[x] != x) x = comp[x] = comp[comp[x]];
            return x;
        };
        for (int p = 0; p < sz; ++p)
            for (int q = p + 1; q < sz; ++q) {
                long d = T.drift_node(blk[p]) - T.drift_node(blk[q]);
                if (A.contains_hyperplane(blk[p], blk[q], d)) comp[find(p)] = find(q);
            }
        int root = find(0);
        for (int p = 1; p < sz; ++p)
            if (find(p) != root) return false;
    }
    return true;
}

bool satisfies_cadet_condition(const MTree& t, const Arrangement& A) {
    const Tree& T = t.tree;
    BlockData bd = block_data(t);
    for (const CadetEdge& e : T.cadet_edges()) {
        if (t.is_marked(e.parent, e.slot)) continue;
        const int i = e.child, j = e.parent, s = e.slot;
        if (s == 0 && i < j) continue;
        bool witness = false;
        for (int i2 : bd.blocks[bd.block_of[i]]) {
            for (int j2 : bd.blocks[bd.block_of[j]]) {
                long d = T.drift_node(i2) - T.drift_node(j2);
                if (A.contains_hyperplane(i2, j2, d)) {
                    witness = true;
                    break;
                }
            }
            if (witness) break;
        }
        if (!witness) return false;
    }
    return true;
}

bool is_admissible(const MTree& t, const Arrangement& A) {
    return is_A_connected(t, A) && satisfies_cadet_condition(t, A);
}

std::vector<MTree> enumerate_admissible(const Arrangement& A, int m, bool allow_any) {
    if (m < A.m())
        throw std::invalid_argument("tree arity m must cover the arrangement offsets");
    if (!allow_any && !is_strongly_transitive(A))
        throw std::invalid_argument(
            "arrangement is not strongly transitive; the face bijection does not apply "
            "(pass allow_any to enumerate regardless)");
    std::vector<MTree> out;
    for (MTree& t : enumerate_marked(m, A.n()))
        if (is_admissible(t, A)) out.push_back(std::move(t));
    return out;
}

bool cat2shi_filter(const MTree& t, const Ideal& I, int m) {
    const Tree& T = t.tree;
    for (int j = 1; j <= T.n(); ++j) {
        int c = T.child(j, m);
        if (c != 0 && !I.contains(c, j)) return false;
    }
    return true;
}

long multi_reach(const MTree& t, const std::vector<int>& mvec, int j) {
    const Tree& T = t.tree;
    if (j < 1 || j > T.n()) throw std::invalid_argument("multi_reach: not a node");
    BlockData bd = block_data(t);
    const auto& blk = bd.blocks[bd.block_of[j]];
    long r = mvec[j - 1];
    for (int k : blk) {
        if (k == j) break;  // path order: everything before j is an ancestor
        r = std::max(r, mvec[k - 1] + T.drift_node(k) - T.drift_node(j));
    }
    return r;
}

bool multi_admissible(const MTree& t, const std::vector<int>& mvec) {
    const Tree& T = t.tree;
    for (int j = 1; j <= T.n(); ++j) {
        long r = multi_reach(t, mvec, j);
        for (int s = static_cast<int>(r) + 1; s <= T.m(); ++s)
            if (T.child(j, s) != 0) return false;
    }
    return true;
}

}  // namespace braidfaces
