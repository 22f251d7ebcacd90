#include "braidfaces/trees.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace braidfaces {

Tree::Tree(int m, int n, int root, std::vector<std::vector<int>> kids)
    : m_(m), n_(n), root_(root), kids_(std::move(kids)) {
    if (m < 0 || n < 0) throw std::invalid_argument("tree parameters must be non-negative");
    if (n == 0) {
        if (root != 0 || !kids_.empty()) throw std::invalid_argument("empty tree is (0, {}, {})");
        return;
    }
    if (root < 1 || root > n || static_cast<int>(kids_.size()) != n)
        throw std::invalid_argument("bad tree root or node count");
    parent_.assign(n, 0);
    pslot_.assign(n, -1);
    drift_.assign(n, 0);
    path_.assign(n, {});
    std::vector<bool> seen(n + 1, false);
    // walk from the root, filling parent, drift and path caches
    std::vector<int> stack = {root};
    seen[root] = true;
    int visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++visited;
        const auto& row = kids_[v - 1];
        if (static_cast<int>(row.size()) != m + 1)
            throw std::invalid_argument("every node needs m+1 child slots");
        for (int s = 0; s <= m; ++s) {
            int c = row[s];
            if (c == 0) continue;
            if (c < 1 || c > n || seen[c]) throw std::invalid_argument("bad child label");
            seen[c] = true;
            parent_[c - 1] = v;
            pslot_[c - 1] = s;
            drift_[c - 1] = drift_[v - 1] + s;
            path_[c - 1] = path_[v - 1];
            path_[c - 1].push_back(s);
            stack.push_back(c);
        }
    }
    if (visited != n) throw std::invalid_argument("labels are not a permutation of [n]");
}

std::vector<int> Tree::path_of(const Vertex& v) const {
    std::vector<int> p = path_[v.node - 1];
    if (v.is_leaf()) p.push_back(v.leaf_slot);
    return p;
}

long Tree::drift(const Vertex& v) const {
    return drift_[v.node - 1] + (v.is_leaf() ? v.leaf_slot : 0);
}

int Tree::cmp(const Vertex& v, const Vertex& w) const {
    if (v == w) return 0;
    long dv = drift(v), dw = drift(w);
    if (dv != dw) return dv < dw ? -1 : 1;
    std::vector<int> pv = path_of(v), pw = path_of(w);
    std::size_t c = 0;
    while (c < pv.size() && c < pw.size() && pv[c] == pw[c]) ++c;
    if (c == pv.size()) return -1;  // v is an ancestor of w
    if (c == pw.size()) return 1;
    return pv[c] > pw[c] ? -1 : 1;  // larger slot wins at the divergence
}

std::vector<CadetEdge> Tree::cadet_edges() const {
    std::vector<CadetEdge> out;
    for (int j = 1; j <= n_; ++j) {
        for (int s = m_; s >= 0; --s) {
            int c = kids_[j - 1][s];
            if (c != 0) {
                out.push_back(CadetEdge{j, s, c});
                break;  // the rightmost node-child; later slots are leaves
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Tree::to_text() const {
    if (n_ == 0) return ".";
    std::string out;
    auto rec = [&](auto&& self, int v) -> void {
        out += std::to_string(v);
        out += '(';
        for (int s = 0; s <= m_; ++s) {
            if (s) out += ',';
            int c = kids_[v - 1][s];
            if (c == 0)
                out += '.';
            else
                self(self, c);
        }
        out += ')';
    };
    rec(rec, root_);
    return out;
}

namespace {

// Unlabeled (m+1)-ary shapes with a given node count; nodes numbered in preorder.
// Each shape is a preorder list of child rows holding preorder indices (0 = leaf).
struct Shape {
    std::vector<std::vector<int>> rows;
};

void compositions(int total, int parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Shape> shapes(int m, int n) {
    if (n == 0) return {};
    if (n == 1) return {Shape{{std::vector<int>(m + 1, 0)}}};
    std::vector<Shape> out;
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(n - 1, m + 1, cur, comps);
    for (const auto& comp : comps) {
        // per-slot shape choices, then the Cartesian product
        std::vector<std::vector<Shape>> choices(m + 1);
        for (int s = 0; s <= m; ++s) choices[s] = shapes(m, comp[s]);
        std::vector<int> pick(m + 1, 0);
        while (true) {
            Shape sh;
            sh.rows.push_back(std::vector<int>(m + 1, 0));
            for (int s = 0; s <= m; ++s) {
                if (comp[s] == 0) continue;
                const Shape& sub = choices[s][pick[s]];
                int offset = static_cast<int>(sh.rows.size());
                sh.rows[0][s] = offset + 1;  // preorder index is 1-based
                for (const auto& row : sub.rows) {
                    std::vector<int> shifted = row;
                    for (int& x : shifted)
                        if (x) x += offset;
                    sh.rows.push_back(std::move(shifted));
                }
            }
            out.push_back(std::move(sh));
            int s = m;
            while (s >= 0) {
                if (comp[s] > 0 && ++pick[s] < static_cast<int>(choices[s].size())) break;
                pick[s] = 0;
                --s;
            }
            if (s < 0) break;
        }
    }
    return out;
}

}  // namespace

std::vector<Tree> enumerate_trees(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("enumerate_trees: bad parameters");
    if (n == 0) return {Tree()};
    std::vector<Tree> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (const Shape& sh : shapes(m, n)) {
        std::vector<int> p = perm;
        do {
            // node with preorder index q gets label p[q-1]
            std::vector<std::vector<int>> kids(n);
            for (int q = 1; q <= n; ++q) {
                std::vector<int> row(m + 1, 0);
                for (int s = 0; s <= m; ++s) {
                    int c = sh.rows[q - 1][s];
                    row[s] = c ? p[c - 1] : 0;
                }
                kids[p[q - 1] - 1] = std::move(row);
            }
            out.emplace_back(m, n, p[0], std::move(kids));
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

Int tree_count_formula(int m, int n) {
    if (n == 0) return 1;
    Int b = binomial(static_cast<long>(m + 1) * n, n);
    Int denom = static_cast<long>(m) * n + 1;
    return factorial(n) * b / denom;
}

}  // namespace braidfaces
