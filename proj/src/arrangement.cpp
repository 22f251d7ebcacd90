#include "braidfaces/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace braidfaces {

Triple canonical_triple(int i, int j, long s) {
    if (i == j) throw std::invalid_argument("hyperplane needs i != j");
    if (s < 0) {
        std::swap(i, j);
        s = -s;
    } else if (s == 0 && i < j) {
        std::swap(i, j);
    }
    return Triple{i, j, static_cast<int>(s)};
}

bool Ideal::is_up_closed() const {
    for (auto [i, j] : pairs) {
        for (int i2 = 1; i2 <= i; ++i2)
            for (int j2 = j; j2 <= n; ++j2)
                if (i2 != j2 && !contains(i2, j2)) return false;
    }
    return true;
}

Ideal Ideal::all_pairs(int n) {
    Ideal I{n, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) I.pairs.insert({i, j});
    return I;
}

Ideal Ideal::increasing_pairs(int n) {
    Ideal I{n, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) I.pairs.insert({i, j});
    return I;
}

Arrangement::Arrangement(int n, std::vector<Triple> triples) : n_(n) {
    if (n < 0) throw std::invalid_argument("dimension must be non-negative");
    std::vector<Triple> canon;
    canon.reserve(triples.size());
    for (const Triple& t : triples) {
        if (t.i < 1 || t.i > n || t.j < 1 || t.j > n)
            throw std::invalid_argument("triple index out of range");
        canon.push_back(canonical_triple(t.i, t.j, t.s));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    triples_ = std::move(canon);
    m_ = 0;
    for (const Triple& t : triples_) m_ = std::max(m_, t.s);
}

bool Arrangement::contains(const Triple& t) const {
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

bool Arrangement::contains_hyperplane(int i, int j, long s) const {
    if (i == j) return false;
    return contains(canonical_triple(i, j, s));
}

int Arrangement::index_of(int i, int j, long s) const {
    Triple t = canonical_triple(i, j, s);
    auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
    if (it == triples_.end() || !(*it == t)) return -1;
    return static_cast<int>(it - triples_.begin());
}

Arrangement braid(int n) {
    std::vector<Triple> ts;
    for (int i = 2; i <= n; ++i)
        for (int j = 1; j < i; ++j) ts.push_back({i, j, 0});
    return Arrangement(n, std::move(ts));
}

Arrangement catalan(int m, int n) {
    if (m < 0) throw std::invalid_argument("catalan: m must be non-negative");
    std::vector<Triple> ts;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int s = 0; s <= m; ++s)
                if (s > 0 || i > j) ts.push_back({i, j, s});
        }
    return Arrangement(n, std::move(ts));
}

Arrangement from_set(const std::set<int>& S, int n) {
    std::vector<Triple> ts;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int s : S) ts.push_back(canonical_triple(i, j, s));
    return Arrangement(n, std::move(ts));
}

Arrangement shi(int m, int n) {
    if (m < 1) throw std::invalid_argument("shi: m must be positive");
    std::set<int> S;
    for (int s = -m + 1; s <= m; ++s) S.insert(s);
    return from_set(S, n);
}

Arrangement semiorder(int m, int n) {
    if (m < 1) throw std::invalid_argument("semiorder: m must be positive");
    std::set<int> S;
    for (int s = 1; s <= m; ++s) {
        S.insert(s);
        S.insert(-s);
    }
    return from_set(S, n);
}

Arrangement linial(int n) { return from_set({1}, n); }

Arrangement ideal_arrangement(int m, const Ideal& I, int n) {
    if (m < 1) throw std::invalid_argument("ideal arrangement needs m >= 1");
    if (I.n != n || !I.is_up_closed())
        throw std::invalid_argument("pair set is not an ideal on [n]");
    Arrangement base = catalan(m - 1, n);
    std::vector<Triple> ts = base.triples();
    for (auto [i, j] : I.pairs) ts.push_back({i, j, m});
    return Arrangement(n, std::move(ts));
}

Arrangement multi_catalan(const std::vector<int>& mvec) {
    int n = static_cast<int>(mvec.size());
    for (int mi : mvec)
        if (mi < 0) throw std::invalid_argument("multi_catalan: entries must be non-negative");
    std::vector<Triple> ts;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int s = -mvec[i - 1]; s <= mvec[j - 1]; ++s)
                ts.push_back(canonical_triple(i, j, s));
    return Arrangement(n, std::move(ts));
}

bool is_transitive(const Arrangement& A) {
    const int n = A.n(), m = A.m();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                for (int s = 0; s <= m; ++s) {
                    if (s == 0 && i < j) continue;  // (i,j,s) must lie in tr_m^n
                    for (int t = 0; t <= m; ++t) {
                        if (t == 0 && j < k) continue;
                        if (!A.contains_hyperplane(i, j, s) && !A.contains_hyperplane(j, k, t) &&
                            A.contains_hyperplane(i, k, s + t))
                            return false;
                    }
                }
            }
    return true;
}

bool is_strongly_transitive(const Arrangement& A) {
    const int n = A.n(), m = A.m();
    // s,t > m make the hypotheses vacuous and the conclusion offset exceed m.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                for (int s = 0; s <= m; ++s)
                    for (int t = 0; t <= m; ++t)
                        if (!A.contains_hyperplane(i, j, s) && !A.contains_hyperplane(j, k, t) &&
                            A.contains_hyperplane(i, k, s + t))
                            return false;
            }
    return true;
}

bool set_condition(const std::set<int>& S) {
    int maxabs = 0;
    for (int s : S) maxabs = std::max(maxabs, std::abs(s));
    const int B = 2 * maxabs + 1;
    for (int s = -B; s <= B; ++s) {
        if (S.count(s)) continue;
        for (int t = -B; t <= B; ++t) {
            if (S.count(t)) continue;
            long st = static_cast<long>(s) * t;
            if (st >= 0 && S.count(s + t)) return false;
            if (st <= 0 && (S.count(s - t) || S.count(t - s))) return false;
        }
    }
    return true;
}

Arrangement permute(const Arrangement& A, const std::vector<int>& pi) {
    if (static_cast<int>(pi.size()) != A.n())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(A.n() + 1, false);
    for (int v : pi) {
        if (v < 1 || v > A.n() || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
    std::vector<Triple> ts;
    ts.reserve(A.size());
    for (const Triple& t : A.triples())
        ts.push_back(canonical_triple(pi[t.i - 1], pi[t.j - 1], t.s));
    return Arrangement(A.n(), std::move(ts));
}

std::vector<Ideal> ideal_chain(int n) {
    if (n < 1) throw std::invalid_argument("ideal_chain: n must be positive");
    std::vector<std::pair<int, int>> order;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) order.push_back({i, j});
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        int da = a.first - a.second, db = b.first - b.second;
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::vector<Ideal> chain;
    Ideal cur = Ideal::empty(n);
    chain.push_back(cur);
    for (auto p : order) {
        cur.pairs.insert(p);
        chain.push_back(cur);
    }
    return chain;
}

}  // namespace braidfaces
