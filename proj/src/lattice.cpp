#include "braidfaces/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidfaces {

int Flat::block_of(int label) const {
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (int v : blocks[k])
            if (v == label) return static_cast<int>(k);
    return -1;
}

namespace {

bool block_connected(const std::vector<int>& blk, const std::vector<long>& delta,
                     const Arrangement& A) {
    const int sz = static_cast<int>(blk.size());
    if (sz <= 1) return true;
    std::vector<int> comp(sz);
    for (int i = 0; i < sz; ++i) comp[i] = i;
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (int p = 0; p < sz; ++p)
        for (int q = p + 1; q < sz; ++q)
            if (A.contains_hyperplane(blk[p], blk[q], delta[p] - delta[q]))
                comp[find(p)] = find(q);
    int r = find(0);
    for (int p = 1; p < sz; ++p)
        if (find(p) != r) return false;
    return true;
}

void set_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
    // restricted growth strings; blocks come out ordered by minimum element
    std::vector<int> rgs(n, 0);
    while (true) {
        int nblocks = 0;
        for (int v : rgs) nblocks = std::max(nblocks, v + 1);
        std::vector<std::vector<int>> part(nblocks);
        for (int i = 0; i < n; ++i) part[rgs[i]].push_back(i + 1);
        out.push_back(std::move(part));
        int i = n - 1;
        while (i > 0) {
            int maxprev = 0;
            for (int k = 0; k < i; ++k) maxprev = std::max(maxprev, rgs[k]);
            if (rgs[i] <= maxprev) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                break;
            }
            --i;
        }
        if (i == 0) break;
    }
}

}  // namespace

std::vector<Flat> enumerate_flats(const Arrangement& A) {
    const int n = A.n();
    const int m = A.m();
    std::vector<Flat> flats;
    if (n == 0) return {Flat{}};
    std::vector<std::vector<std::vector<int>>> parts;
    set_partitions(n, parts);
    for (const auto& part : parts) {
        // valid delta assignments per block, then the Cartesian product
        std::vector<std::vector<std::vector<long>>> choices(part.size());
        bool any_empty = false;
        for (std::size_t k = 0; k < part.size(); ++k) {
            const auto& blk = part[k];
            const int sz = static_cast<int>(blk.size());
            const long bound = static_cast<long>(sz - 1) * m;
            std::vector<long> d(sz, 0);
            while (true) {
                if (*std::min_element(d.begin(), d.end()) == 0 && block_connected(blk, d, A))
                    choices[k].push_back(d);
                int p = sz - 1;
                while (p >= 0 && d[p] == bound) d[p--] = 0;
                if (p < 0) break;
                ++d[p];
            }
            if (choices[k].empty()) any_empty = true;
        }
        if (any_empty) continue;
        std::vector<std::size_t> pick(part.size(), 0);
        while (true) {
            Flat L;
            L.delta.assign(n + 1, 0);
            L.blocks.resize(part.size());
            for (std::size_t k = 0; k < part.size(); ++k) {
                const auto& blk = part[k];
                const auto& d = choices[k][pick[k]];
                std::vector<std::pair<long, int>> order;
                for (std::size_t p = 0; p < blk.size(); ++p) {
                    L.delta[blk[p]] = d[p];
                    order.push_back({d[p], blk[p]});
                }
                std::sort(order.begin(), order.end());
                for (auto& [dv, lbl] : order) L.blocks[k].push_back(lbl);
            }
            flats.push_back(std::move(L));
            int k = static_cast<int>(part.size()) - 1;
            while (k >= 0) {
                if (++pick[k] < choices[k].size()) break;
                pick[k] = 0;
                --k;
            }
            if (k < 0) break;
        }
    }
    return flats;
}

Restriction restrict_to(const Arrangement& A, const Flat& L) {
    const int d = L.dim();
    std::vector<int> block_of(A.n() + 1, -1);
    for (int k = 0; k < d; ++k)
        for (int v : L.blocks[k]) block_of[v] = k;
    std::vector<Triple> ts;
    for (const Triple& tr : A.triples()) {
        int k = block_of[tr.i], l = block_of[tr.j];
        if (k == l) continue;
        long t = tr.s - L.delta[tr.i] + L.delta[tr.j];
        ts.push_back(canonical_triple(k + 1, l + 1, t));
    }
    Restriction R;
    R.flat = L;
    R.sub = Arrangement(d, std::move(ts));
    for (int k = 0; k < d; ++k) R.anchors.push_back(L.blocks[k].front());
    return R;
}

std::pair<Flat, Tree> contract(const MTree& t, const Arrangement& A) {
    if (!is_admissible(t, A))
        throw std::invalid_argument("contract: marked tree is not admissible");
    const Tree& T = t.tree;
    BlockData bd = block_data(t);
    const int d = static_cast<int>(bd.blocks.size());

    Flat L;
    L.delta = bd.delta;
    L.blocks.resize(d);
    for (int k = 0; k < d; ++k) {
        std::vector<std::pair<long, int>> order;
        for (int v : bd.blocks[k]) order.push_back({bd.delta[v], v});
        std::sort(order.begin(), order.end());
        for (std::size_t p = 0; p < order.size(); ++p) {
            L.blocks[k].push_back(order[p].second);
            if (order[p].second != bd.blocks[k][p])
                throw std::logic_error("block path order disagrees with the delta order");
        }
    }

    const int M = T.m() * T.n();
    std::vector<std::vector<int>> kids(d, std::vector<int>(M + 1, 0));
    int root_block = bd.block_of[T.root()] + 1;
    for (int k = 0; k < d; ++k) {
        int a = bd.anchor[k];
        if (a == T.root()) continue;
        int j = T.parent(a), v = T.parent_slot(a);
        int l = bd.block_of[j];
        long slot = bd.delta[j] + v;
        if (slot > M || kids[l][slot] != 0) throw std::logic_error("contract: slot clash");
        kids[l][slot] = k + 1;
    }
    Tree wt(M, d, root_block, std::move(kids));
    for (int i = 1; i <= T.n(); ++i)
        if (T.drift_node(i) != wt.drift_node(bd.block_of[i] + 1) + bd.delta[i])
            throw std::logic_error("contract: drift identity violated");
    return {std::move(L), std::move(wt)};
}

MTree expand(const Flat& L, const Tree& wt, const Arrangement& A, int m) {
    const int d = L.dim();
    if (wt.n() != d) throw std::invalid_argument("expand: tree size does not match the flat");
    int n = 0;
    for (const auto& blk : L.blocks) n += static_cast<int>(blk.size());
    if (n != A.n() || wt.m() != m * n)
        throw std::invalid_argument("expand: arity mismatch");
    Restriction R = restrict_to(A, L);
    if (!tree_in_region_family(R.sub, wt))
        throw std::invalid_argument("expand: tree does not index a region of the restriction");

    std::vector<std::vector<int>> kids(n, std::vector<int>(m + 1, 0));
    std::vector<std::pair<int, int>> marks;
    for (int k = 1; k <= d; ++k) {
        const auto& members = L.blocks[k - 1];
        const int q = static_cast<int>(members.size());
        const long top = L.delta[members.back()];
        for (int slot = static_cast<int>(top) + m + 1; slot <= wt.m(); ++slot)
            if (wt.child(k, slot) != 0)
                throw std::invalid_argument("expand: node child beyond the block reach");
        for (int p = 0; p + 1 < q; ++p) {
            int sp = static_cast<int>(L.delta[members[p + 1]] - L.delta[members[p]]);
            kids[members[p] - 1][sp] = members[p + 1];
            marks.push_back({members[p], sp});
            if (sp == 0 && members[p] > members[p + 1])
                throw std::logic_error("expand: slot-0 mark with decreasing labels");
        }
        for (int slot = 0; slot <= static_cast<int>(top) + m; ++slot) {
            int c = wt.child(k, slot);
            if (c == 0) continue;
            // owner of this slot along the marked path
            int owner = -1;
            long v = -1;
            for (int p = 0; p < q; ++p) {
                long lo = L.delta[members[p]];
                long hi = (p + 1 < q) ? L.delta[members[p + 1]] - 1 : lo + m;
                if (slot >= lo && slot <= hi) {
                    owner = p;
                    v = slot - lo;
                    break;
                }
            }
            if (owner < 0) throw std::logic_error("expand: slot without an owner");
            int node = members[owner];
            if (kids[node - 1][v] != 0) throw std::logic_error("expand: slot clash");
            kids[node - 1][v] = L.blocks[c - 1].front();
        }
    }
    int root = L.blocks[wt.root() - 1].front();
    std::sort(marks.begin(), marks.end());
    return MTree{Tree(m, n, root, std::move(kids)), std::move(marks)};
}

SignVector theta(const Arrangement& A, const Flat& L, const SignVector& region_signs) {
    Restriction R = restrict_to(A, L);
    if (region_signs.signs.size() != R.sub.size())
        throw std::invalid_argument("theta: sign vector does not match the restriction");
    for (auto s : region_signs.signs)
        if (s == 0) throw std::invalid_argument("theta: expected a region sign vector");
    std::vector<int> block_of(A.n() + 1, -1);
    for (int k = 0; k < L.dim(); ++k)
        for (int v : L.blocks[k]) block_of[v] = k;
    SignVector out;
    out.signs.reserve(A.size());
    for (const Triple& tr : A.triples()) {
        int k = block_of[tr.i], l = block_of[tr.j];
        if (k == l) {
            long v = L.delta[tr.i] - L.delta[tr.j] - tr.s;
            out.signs.push_back(v < 0 ? -1 : (v > 0 ? 1 : 0));
        } else {
            long t = tr.s - L.delta[tr.i] + L.delta[tr.j];
            Triple ct = canonical_triple(k + 1, l + 1, t);
            int idx = R.sub.index_of(k + 1, l + 1, t);
            if (idx < 0) throw std::logic_error("theta: restricted hyperplane missing");
            bool flipped = !(ct.i == k + 1 && ct.j == l + 1 && ct.s == t);
            out.signs.push_back(flipped ? -region_signs.signs[idx] : region_signs.signs[idx]);
        }
    }
    return out;
}

}  // namespace braidfaces
