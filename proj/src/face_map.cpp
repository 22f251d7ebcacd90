#include "braidfaces/face_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidfaces {

bool tree_in_region_family(const Arrangement& A, const Tree& T) {
    if (T.n() != A.n() || T.m() < A.m()) return false;
    for (const CadetEdge& e : T.cadet_edges()) {
        if (e.slot == 0 && e.child < e.parent) continue;  // not a canonical triple
        if (!A.contains_hyperplane(e.child, e.parent, e.slot)) return false;
    }
    return true;
}

SignVector region_sign_vector(const Arrangement& A, const Tree& T) {
    if (!tree_in_region_family(A, T))
        throw std::invalid_argument("tree does not index a region of this arrangement");
    SignVector sv;
    sv.signs.reserve(A.size());
    for (const Triple& tr : A.triples()) {
        Vertex v = T.node_vertex(tr.i);
        Vertex w = T.child_vertex(tr.j, tr.s);
        sv.signs.push_back(T.cmp(v, w) < 0 ? -1 : 1);
    }
    return sv;
}

SignVector face_sign_vector(const Arrangement& A, const MTree& t) {
    if (t.tree.n() != A.n() || t.tree.m() < A.m())
        throw std::invalid_argument("marked tree does not match the arrangement");
    if (!is_admissible(t, A))
        throw std::invalid_argument("marked tree is not admissible for this arrangement");
    BlockData bd = block_data(t);
    const Tree& T = t.tree;
    SignVector sv;
    sv.signs.reserve(A.size());
    for (const Triple& tr : A.triples()) {
        if (bd.block_of[tr.i] == bd.block_of[tr.j]) {
            long v = T.drift_node(tr.i) - T.drift_node(tr.j) - tr.s;
            sv.signs.push_back(v < 0 ? -1 : (v > 0 ? 1 : 0));
        } else {
            Vertex v = T.node_vertex(tr.i);
            Vertex w = T.child_vertex(tr.j, tr.s);
            sv.signs.push_back(T.cmp(v, w) < 0 ? -1 : 1);
        }
    }
    return sv;
}

int face_dim(const Arrangement& A, const SignVector& sv) {
    const int n = A.n();
    std::vector<int> comp(n + 1);
    for (int i = 0; i <= n; ++i) comp[i] = i;
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (std::size_t k = 0; k < A.size(); ++k)
        if (sv.signs[k] == 0) {
            const Triple& tr = A.triples()[k];
            comp[find(tr.i)] = find(tr.j);
        }
    int components = 0;
    for (int i = 1; i <= n; ++i)
        if (find(i) == i) ++components;
    return components;
}

DiffSystem DiffSystem::from_sign_vector(const Arrangement& A, const SignVector& sv) {
    if (sv.signs.size() != A.size()) throw std::invalid_argument("sign vector size mismatch");
    DiffSystem sys;
    sys.n = A.n();
    for (std::size_t k = 0; k < A.size(); ++k) {
        const Triple& tr = A.triples()[k];
        switch (sv.signs[k]) {
            case 0:
                sys.constraints.push_back({tr.i, tr.j, tr.s, false});
                break;
            case -1:
                sys.constraints.push_back({tr.i, tr.j, tr.s, true});
                break;
            case 1:
                sys.constraints.push_back({tr.j, tr.i, -static_cast<long>(tr.s), true});
                break;
            default:
                throw std::invalid_argument("sign entries must be -1, 0 or 1");
        }
    }
    return sys;
}

std::optional<std::vector<Rat>> solve_diff_system(const DiffSystem& sys) {
    const int n = sys.n;
    struct Edge {
        int from, to;
        long a, b;  // weight a + b*eps, constraint x_to <= x_from + w
    };
    std::vector<Edge> edges;
    for (const DiffConstraint& c : sys.constraints) {
        // x_i - x_j <= s (strict: minus eps)
        edges.push_back({c.j, c.i, c.s, c.strict ? -1L : 0L});
        if (!c.strict) edges.push_back({c.i, c.j, -c.s, 0L});
    }
    // virtual source = initial zero potentials
    std::vector<long> a(n + 1, 0), b(n + 1, 0);
    auto less = [](long a1, long b1, long a2, long b2) {
        return a1 != a2 ? a1 < a2 : b1 < b2;
    };
    for (int pass = 0; pass < n + 1; ++pass) {
        bool changed = false;
        for (const Edge& e : edges) {
            long na = a[e.from] + e.a, nb = b[e.from] + e.b;
            if (less(na, nb, a[e.to], b[e.to])) {
                a[e.to] = na;
                b[e.to] = nb;
                changed = true;
            }
        }
        if (!changed) break;
        if (pass == n) return std::nullopt;  // still relaxing: negative cycle
    }
    long amin = 0, bmin = 0;
    for (int i = 1; i <= n; ++i) {
        amin = std::min(amin, a[i]);
        bmin = std::min(bmin, b[i]);
    }
    std::vector<Rat> x(n);
    for (int i = 1; i <= n; ++i) {
        Rat val(static_cast<long>((a[i] - amin)) * (n + 1) + (b[i] - bmin), n + 1);
        val.canonicalize();
        x[i - 1] = val;
    }
    return x;
}

std::optional<std::vector<Rat>> feasible_witness(const SignVector& sv, const Arrangement& A) {
    auto x = solve_diff_system(DiffSystem::from_sign_vector(A, sv));
    if (x && !witness_satisfies(*x, sv, A))
        throw std::logic_error("witness failed re-evaluation");
    return x;
}

bool witness_satisfies(const std::vector<Rat>& x, const SignVector& sv, const Arrangement& A) {
    if (x.size() != static_cast<std::size_t>(A.n()) || sv.signs.size() != A.size()) return false;
    for (std::size_t k = 0; k < A.size(); ++k) {
        const Triple& tr = A.triples()[k];
        Rat v = x[tr.i - 1] - x[tr.j - 1] - Rat(tr.s);
        if (sign_of(v) != sv.signs[k]) return false;
    }
    return true;
}

}  // namespace braidfaces
