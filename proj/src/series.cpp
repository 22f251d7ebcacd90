#include "braidfaces/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace braidfaces {

// ---------------------------------------------------------------- Poly

Poly Poly::constant(const Rat& v) {
    Poly p;
    if (v != 0) p.c = {v};
    return p;
}

Poly Poly::monomial(int k, const Rat& v) {
    Poly p;
    if (v != 0) {
        p.c.assign(k + 1, Rat(0));
        p.c[k] = v;
    }
    return p;
}

void Poly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) r.c[k] -= b.c[k];
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

Poly operator*(const Rat& s, const Poly& a) {
    if (s == 0) return {};
    Poly r = a;
    for (Rat& v : r.c) v *= s;
    return r;
}

Poly operator-(const Poly& a) { return Rat(-1) * a; }

Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly r = a, q;
    if (a.is_zero()) return q;
    if (r.deg() < b.deg()) throw std::invalid_argument("polynomial division is not exact");
    q.c.assign(r.deg() - b.deg() + 1, Rat(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        Rat f = r.c.back() / b.c.back();
        int sh = r.deg() - b.deg();
        q.c[sh] = f;
        for (int k = 0; k <= b.deg(); ++k) r.c[sh + k] -= f * b.c[k];
        r.trim();
    }
    if (!r.is_zero()) throw std::invalid_argument("polynomial division is not exact");
    q.trim();
    return q;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = deg(); k >= 0; --k) {
        if (c[k] == 0) continue;
        Rat v = c[k];
        if (!out.empty()) {
            out += sign_of(v) < 0 ? " - " : " + ";
            v = abs(v);
        } else if (sign_of(v) < 0) {
            out += "-";
            v = abs(v);
        }
        if (k == 0 || v != 1) out += rat_string(v);
        if (k > 0) {
            if (v != 1) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

// ---------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const Rat& v) {
    BiPoly p;
    if (v != 0) p.cx = {Poly::constant(v)};
    return p;
}

BiPoly BiPoly::monomial(int dx, int dy, const Rat& v) {
    BiPoly p;
    if (v != 0) {
        p.cx.assign(dx + 1, Poly{});
        p.cx[dx] = Poly::monomial(dy, v);
    }
    return p;
}

void BiPoly::trim() {
    while (!cx.empty() && cx.back().is_zero()) cx.pop_back();
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.cx.resize(std::max(a.cx.size(), b.cx.size()));
    for (std::size_t i = 0; i < a.cx.size(); ++i) r.cx[i] = r.cx[i] + a.cx[i];
    for (std::size_t i = 0; i < b.cx.size(); ++i) r.cx[i] = r.cx[i] + b.cx[i];
    r.trim();
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.cx.resize(std::max(a.cx.size(), b.cx.size()));
    for (std::size_t i = 0; i < a.cx.size(); ++i) r.cx[i] = r.cx[i] + a.cx[i];
    for (std::size_t i = 0; i < b.cx.size(); ++i) r.cx[i] = r.cx[i] - b.cx[i];
    r.trim();
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BiPoly r;
    r.cx.assign(a.cx.size() + b.cx.size() - 1, Poly{});
    for (std::size_t i = 0; i < a.cx.size(); ++i) {
        if (a.cx[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.cx.size(); ++j)
            r.cx[i + j] = r.cx[i + j] + a.cx[i] * b.cx[j];
    }
    r.trim();
    return r;
}

BiPoly operator*(const Rat& s, const BiPoly& a) {
    BiPoly r = a;
    for (Poly& p : r.cx) p = s * p;
    r.trim();
    return r;
}

BiPoly operator-(const BiPoly& a) { return Rat(-1) * a; }

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("bivariate division by zero");
    if (a.is_zero()) return {};
    BiPoly r = a, q;
    if (r.degx() < b.degx()) throw std::invalid_argument("bivariate division is not exact");
    q.cx.assign(r.degx() - b.degx() + 1, Poly{});
    while (!r.is_zero() && r.degx() >= b.degx()) {
        Poly f = exact_div(r.cx.back(), b.cx.back());
        int sh = r.degx() - b.degx();
        q.cx[sh] = f;
        for (int i = 0; i <= b.degx(); ++i) r.cx[sh + i] = r.cx[sh + i] - f * b.cx[i];
        r.trim();
    }
    if (!r.is_zero()) throw std::invalid_argument("bivariate division is not exact");
    q.trim();
    return q;
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= degx(); ++i) {
        if (cx[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string ypart = cx[i].to_string("Y");
        if (i == 0) {
            out += ypart;
        } else {
            bool simple = cx[i].c.size() == 1 && cx[i].c.back() == 1 && cx[i].deg() == 0;
            if (simple)
                out += "";
            else
                out += "(" + ypart + ")*";
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------- BiRat

void BiRat::reduce() {
    if (num.is_zero()) {
        den = BiPoly::constant(1);
        return;
    }
    // common monomial factor
    auto valx = [](const BiPoly& p) {
        for (std::size_t i = 0; i < p.cx.size(); ++i)
            if (!p.cx[i].is_zero()) return static_cast<int>(i);
        return 0;
    };
    auto valy = [](const BiPoly& p) {
        int v = -1;
        for (const Poly& row : p.cx) {
            for (int k = 0; k <= row.deg(); ++k)
                if (row.c[k] != 0) {
                    v = v < 0 ? k : std::min(v, k);
                    break;
                }
        }
        return std::max(v, 0);
    };
    int sx = std::min(valx(num), valx(den));
    int sy = std::min(valy(num), valy(den));
    if (sx > 0 || sy > 0) {
        BiPoly mono = BiPoly::monomial(sx, sy);
        num = exact_div(num, mono);
        den = exact_div(den, mono);
    }
    // scale to integer coefficients with content 1, denominator lowest term positive
    Int lcm_den = 1, gcd_num = 0;
    auto absorb = [&](const BiPoly& p) {
        for (const Poly& row : p.cx)
            for (const Rat& v : row.c) {
                if (v == 0) continue;
                Int d = v.get_den();
                mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
            }
    };
    absorb(num);
    absorb(den);
    auto absorb_num = [&](const BiPoly& p) {
        for (const Poly& row : p.cx)
            for (const Rat& v : row.c) {
                if (v == 0) continue;
                Int scaled = v.get_num() * (lcm_den / v.get_den());
                mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
            }
    };
    absorb_num(num);
    absorb_num(den);
    Rat scale(lcm_den, gcd_num);
    scale.canonicalize();
    num = scale * num;
    den = scale * den;
    const Poly& low = den.cx[valx(den)];
    for (int k = 0; k <= low.deg(); ++k)
        if (low.c[k] != 0) {
            if (sign_of(low.c[k]) < 0) {
                num = -num;
                den = -den;
            }
            break;
        }
}

std::string BiRat::to_string() const {
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

// ---------------------------------------------------------------- Series

Series Series::zero(int order) {
    Series s;
    s.order = order;
    s.c.assign(order + 1, Poly{});
    return s;
}

Series Series::one(int order) {
    Series s = zero(order);
    s.c[0] = Poly::constant(1);
    return s;
}

Series Series::x(int order) {
    Series s = zero(order);
    if (order >= 1) s.c[1] = Poly::constant(1);
    return s;
}

Series Series::exp_x(int order) {
    Series s = zero(order);
    for (int k = 0; k <= order; ++k) s.c[k] = Poly::constant(1);
    return s;
}

Series Series::exp_neg_x(int order) {
    Series s = zero(order);
    for (int k = 0; k <= order; ++k) s.c[k] = Poly::constant(k % 2 ? -1 : 1);
    return s;
}

Series Series::exp_xu(int order) {
    Series s = zero(order);
    for (int k = 0; k <= order; ++k) s.c[k] = Poly::monomial(k, 1);
    return s;
}

Series Series::exp_neg_xu(int order) {
    Series s = zero(order);
    for (int k = 0; k <= order; ++k) s.c[k] = Poly::monomial(k, k % 2 ? -1 : 1);
    return s;
}

static void check_same_order(const Series& a, const Series& b) {
    if (a.order != b.order) throw std::invalid_argument("series order mismatch");
}

Series operator+(const Series& a, const Series& b) {
    check_same_order(a, b);
    Series r = a;
    for (int k = 0; k <= r.order; ++k) r.c[k] = r.c[k] + b.c[k];
    return r;
}

Series operator-(const Series& a, const Series& b) {
    check_same_order(a, b);
    Series r = a;
    for (int k = 0; k <= r.order; ++k) r.c[k] = r.c[k] - b.c[k];
    return r;
}

Series operator*(const Series& a, const Series& b) {
    check_same_order(a, b);
    Series r = Series::zero(a.order);
    for (int n = 0; n <= r.order; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (a.c[k].is_zero() || b.c[n - k].is_zero()) continue;
            Rat bin(binomial(n, k));
            r.c[n] = r.c[n] + bin * (a.c[k] * b.c[n - k]);
        }
    }
    return r;
}

Series operator*(const Poly& s, const Series& a) {
    Series r = a;
    for (int k = 0; k <= r.order; ++k) r.c[k] = s * r.c[k];
    return r;
}

Series series_pow(const Series& a, int e) {
    Series r = Series::one(a.order);
    for (int k = 0; k < e; ++k) r = r * a;
    return r;
}

Series series_div(const Series& a, const Series& b) {
    check_same_order(a, b);
    if (!b.c[0].is_constant() || b.c[0].is_zero())
        throw std::invalid_argument("series division needs an invertible constant term");
    Rat b0 = b.c[0].coeff(0);
    Series r = Series::zero(a.order);
    for (int n = 0; n <= a.order; ++n) {
        Poly acc = a.c[n];
        for (int k = 1; k <= n; ++k) {
            if (b.c[k].is_zero() || r.c[n - k].is_zero()) continue;
            Rat bin(binomial(n, k));
            acc = acc - bin * (b.c[k] * r.c[n - k]);
        }
        r.c[n] = (1 / b0) * acc;
    }
    return r;
}

Series series_subst(const BiPoly& p, const Series& X, const Series& Y) {
    check_same_order(X, Y);
    const int order = X.order;
    Series out = Series::zero(order);
    if (p.is_zero()) return out;
    int degy = 0;
    for (const Poly& row : p.cx) degy = std::max(degy, row.deg());
    std::vector<Series> ypow;
    ypow.push_back(Series::one(order));
    for (int j = 1; j <= degy; ++j) ypow.push_back(ypow.back() * Y);
    Series xpow = Series::one(order);
    for (int i = 0; i <= p.degx(); ++i) {
        if (!p.cx[i].is_zero()) {
            Series row = Series::zero(order);
            for (int j = 0; j <= p.cx[i].deg(); ++j) {
                Rat cij = p.cx[i].coeff(j);
                if (cij != 0) row = row + Poly::constant(cij) * ypow[j];
            }
            out = out + row * xpow;
        }
        if (i < p.degx()) xpow = xpow * X;
    }
    return out;
}

Series series_subst(const BiRat& r, const Series& X, const Series& Y) {
    return series_div(series_subst(r.num, X, Y), series_subst(r.den, X, Y));
}

// ------------------------------------------------- shadows and shades

bool sym_condition(const std::set<int>& S) {
    for (int s : S)
        if (!S.count(-s)) return false;
    int m = offset_bound(S);
    for (int s = 0; s <= m; ++s) {
        if (S.count(s)) continue;
        for (int t = 0; t <= m; ++t)
            if (!S.count(t) && S.count(s + t)) return false;
    }
    return true;
}

int offset_bound(const std::set<int>& S) {
    int m = 0;
    for (int s : S) m = std::max(m, std::abs(s));
    return m;
}

namespace {

void require_sym(const std::set<int>& S) {
    if (!sym_condition(S))
        throw std::invalid_argument("set violates the symmetric transitivity condition");
}

void require_zero_set(const std::vector<long>& D) {
    if (D.empty() || D.front() != 0 || !std::is_sorted(D.begin(), D.end()))
        throw std::invalid_argument("shadow candidate must be sorted and contain 0");
}

// component index per element of D under edges {i,j} with i-j in S
std::vector<int> components_of(const std::set<int>& S, const std::vector<long>& D) {
    const int sz = static_cast<int>(D.size());
    std::vector<int> comp(sz);
    for (int i = 0; i < sz; ++i) comp[i] = i;
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (int p = 0; p < sz; ++p)
        for (int q = p + 1; q < sz; ++q) {
            long diff = D[q] - D[p];
            if (diff <= static_cast<long>(offset_bound(S)) &&
                S.count(static_cast<int>(diff)))
                comp[find(p)] = find(q);
        }
    for (int p = 0; p < sz; ++p) comp[p] = find(p);
    return comp;
}

// Partition of {0} union end(D): distances from max(D), grouped by component.
// Canonical form: blocks sorted by minimum, elements sorted.
using State = std::vector<std::vector<int>>;

State canonical_state(std::vector<std::vector<int>> blocks) {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

State comp_state(const std::set<int>& S, const std::vector<long>& D, int m) {
    std::vector<int> comp = components_of(S, D);
    long mx = D.back();
    // distance 0 (the maximum itself) is tracked even when the window is empty
    const long window = std::max(m - 1, 0);
    std::map<int, std::vector<int>> groups;
    for (std::size_t p = 0; p < D.size(); ++p) {
        long dist = mx - D[p];
        if (dist <= window) groups[comp[p]].push_back(static_cast<int>(dist));
    }
    std::vector<std::vector<int>> blocks;
    for (auto& [root, elems] : groups) blocks.push_back(std::move(elems));
    return canonical_state(std::move(blocks));
}

int state_reach(const State& st) {
    int r = 0;
    for (const auto& b : st) r = std::max(r, *std::min_element(b.begin(), b.end()));
    return r;
}

// One growth step: shift distances by d, merge with the new maximum anything
// whose shifted block meets S (the offset m itself included), then truncate
// to the live window [0, m-1].
State state_step(const State& st, int d, const std::set<int>& S, int m) {
    std::vector<int> zero_block = {0};
    std::vector<std::vector<int>> others;
    for (const auto& b : st) {
        bool merged = false;
        std::vector<int> trunc;
        for (int e : b) {
            int shifted = e + d;
            if (S.count(shifted)) merged = true;
            if (shifted <= m - 1) trunc.push_back(shifted);
        }
        if (merged) {
            zero_block.insert(zero_block.end(), trunc.begin(), trunc.end());
        } else {
            if (trunc.empty())
                throw std::logic_error("shade transition dropped an unmerged component");
            others.push_back(std::move(trunc));
        }
    }
    others.push_back(std::move(zero_block));
    return canonical_state(std::move(others));
}

std::set<int> start_of(const std::vector<long>& D, int m) {
    std::set<int> out;
    for (long v : D)
        if (v >= 1 && v <= m - 1) out.insert(static_cast<int>(v));
    return out;
}

std::set<int> end_of(const std::vector<long>& D, int m) {
    std::set<int> out;
    long mx = D.back();
    for (long v : D) {
        long dist = mx - v;
        if (dist >= 1 && dist <= m - 1) out.insert(static_cast<int>(dist));
    }
    return out;
}

}  // namespace

bool is_shadow(const std::set<int>& S, const std::vector<long>& D) {
    require_sym(S);
    require_zero_set(D);
    std::vector<int> comp = components_of(S, D);
    for (int c : comp)
        if (c != comp[0]) return false;
    return true;
}

bool is_shade(const std::set<int>& S, const std::vector<long>& D) {
    require_sym(S);
    require_zero_set(D);
    const int m = offset_bound(S);
    std::vector<int> comp = components_of(S, D);
    long mx = D.back();
    std::map<int, long> closest;  // component -> min distance from max
    for (std::size_t p = 0; p < D.size(); ++p) {
        long dist = mx - D[p];
        auto it = closest.find(comp[p]);
        if (it == closest.end() || dist < it->second) closest[comp[p]] = dist;
    }
    const long window = std::max(m - 1, 0);
    for (auto& [root, dist] : closest)
        if (dist > window) return false;
    return true;
}

std::vector<std::vector<long>> shade_successors(const std::set<int>& S,
                                                const std::vector<long>& D) {
    require_sym(S);
    if (!is_shade(S, D)) throw std::invalid_argument("shade_successors needs a shade");
    const int m = offset_bound(S);
    State st = comp_state(S, D, m);
    int r = state_reach(st);
    std::vector<std::vector<long>> out;
    for (int d = 1; d <= m - r; ++d) {
        std::vector<long> nd = D;
        nd.push_back(D.back() + d);
        out.push_back(std::move(nd));
    }
    return out;
}

int shade_component_count(const std::set<int>& S, const std::vector<long>& D) {
    require_sym(S);
    require_zero_set(D);
    return static_cast<int>(comp_state(S, D, offset_bound(S)).size());
}

std::set<int> connection_set(const std::set<int>& S, const std::set<int>& V,
                             const std::set<int>& W) {
    const int m = offset_bound(S);
    std::set<int> C = {0};
    std::set<int> V0 = V, W0 = W;
    V0.insert(0);
    W0.insert(0);
    for (int s = 1; s <= m; ++s)
        for (int d : V0) {
            bool found = false;
            for (int dp : W0)
                if (S.count(s + d + dp)) {
                    C.insert(s);
                    found = true;
                    break;
                }
            if (found) break;
        }
    return C;
}

Poly connection_poly(const std::set<int>& S, const std::set<int>& V, const std::set<int>& W) {
    Poly p;
    for (int s : connection_set(S, V, W)) p = p + Poly::monomial(s, 1);
    return p;
}

// ------------------------------------------------- transfer matrix

namespace {

void subsets_of_window(int m, std::vector<std::set<int>>& out) {
    std::vector<int> elems;
    for (int v = 1; v <= m - 1; ++v) elems.push_back(v);
    const std::size_t k = elems.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::set<int> sub;
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::size_t{1} << b)) sub.insert(elems[b]);
        out.push_back(std::move(sub));
    }
}

void partitions_of(const std::vector<int>& elems, std::vector<State>& out) {
    std::vector<std::vector<int>> cur;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == elems.size()) {
            out.push_back(canonical_state(cur));
            return;
        }
        const std::size_t nblocks = cur.size();  // recursion grows cur
        for (std::size_t b = 0; b < nblocks; ++b) {
            cur[b].push_back(elems[idx]);
            self(self, idx + 1);
            cur[b].pop_back();
        }
        cur.push_back({elems[idx]});
        self(self, idx + 1);
        cur.pop_back();
    };
    rec(rec, 0);
}

struct StateSpace {
    std::vector<State> states;
    std::map<State, int> index;

    explicit StateSpace(int m) {
        std::vector<std::set<int>> vs;
        subsets_of_window(m, vs);
        for (const auto& V : vs) {
            std::vector<int> elems = {0};
            for (int v : V) elems.push_back(v);
            partitions_of(elems, states);
        }
        std::sort(states.begin(), states.end());
        states.erase(std::unique(states.begin(), states.end()), states.end());
        for (std::size_t k = 0; k < states.size(); ++k) index[states[k]] = static_cast<int>(k);
    }
};

using BiMatrix = std::vector<std::vector<BiPoly>>;

BiPoly bareiss_det(BiMatrix M) {
    const int K = static_cast<int>(M.size());
    if (K == 0) return BiPoly::constant(1);
    BiPoly prev = BiPoly::constant(1);
    int sign = 1;
    for (int k = 0; k + 1 < K; ++k) {
        if (M[k][k].is_zero()) {
            int r = k + 1;
            while (r < K && M[r][k].is_zero()) ++r;
            if (r == K) return BiPoly::zero();
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < K; ++i)
            for (int j = k + 1; j < K; ++j)
                M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
        prev = M[k][k];
    }
    return sign < 0 ? -M[K - 1][K - 1] : M[K - 1][K - 1];
}

BiMatrix id_minus_adjacency(const StateSpace& sp, const std::set<int>& S, int m) {
    const int K = static_cast<int>(sp.states.size());
    BiMatrix M(K, std::vector<BiPoly>(K));
    for (int u = 0; u < K; ++u)
        for (int v = 0; v < K; ++v) M[u][v] = BiPoly::constant(u == v ? 1 : 0);
    for (int u = 0; u < K; ++u) {
        int r = state_reach(sp.states[u]);
        for (int d = 1; d <= m - r; ++d) {
            State target = state_step(sp.states[u], d, S, m);
            int v = sp.index.at(target);
            M[u][v] = M[u][v] - BiPoly::monomial(1, d);
        }
    }
    return M;
}

}  // namespace

BiRat shadow_rational(const std::set<int>& S, const std::set<int>& U, const std::set<int>& V) {
    require_sym(S);
    const int m = offset_bound(S);
    for (int v : U)
        if (v < 1 || v > m - 1) throw std::invalid_argument("U must lie within [1, m-1]");
    for (int v : V)
        if (v < 1 || v > m - 1) throw std::invalid_argument("V must lie within [1, m-1]");

    std::vector<long> DU = {0};
    for (int v : U) DU.push_back(v);
    std::sort(DU.begin(), DU.end());
    const int maxU = U.empty() ? 0 : *std::max_element(U.begin(), U.end());

    bool indicator = end_of(DU, m) == V && is_shadow(S, DU);

    StateSpace sp(m);
    BiMatrix M = id_minus_adjacency(sp, S, m);
    BiPoly detM = bareiss_det(M);

    std::vector<int> target_block = {0};
    for (int v : V) target_block.push_back(v);
    State target = canonical_state({target_block});
    const int t_idx = sp.index.at(target);

    State compU = comp_state(S, DU, m);
    const int rU = state_reach(compU);

    BiPoly inner = indicator ? detM : BiPoly::zero();
    for (int d = std::max(1, m - maxU); d <= m - rU; ++d) {
        std::vector<long> DUd = DU;
        DUd.push_back(maxU + d);
        State st = comp_state(S, DUd, m);
        int col = sp.index.at(st);
        // Cramer: path sum from st to the target is det(M with that column
        // replaced by the target unit vector) / det(M)
        BiMatrix Mc = M;
        for (std::size_t r = 0; r < Mc.size(); ++r)
            Mc[r][col] = BiPoly::constant(static_cast<int>(r) == t_idx ? 1 : 0);
        BiPoly w = bareiss_det(std::move(Mc));
        inner = inner + BiPoly::monomial(1, d) * w;
    }

    BiRat out;
    out.num = BiPoly::monomial(1 + static_cast<int>(U.size()), maxU) * inner;
    out.den = detM;
    out.reduce();
    return out;
}

BiPoly shadow_series(const std::set<int>& S, const std::set<int>& U, const std::set<int>& V,
                     int N) {
    require_sym(S);
    const int m = offset_bound(S);
    BiPoly out;
    std::vector<std::vector<long>> frontier = {{0}};
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& D : frontier) {
            if (start_of(D, m) == U && end_of(D, m) == V && is_shadow(S, D))
                out = out + BiPoly::monomial(static_cast<int>(D.size()),
                                             static_cast<int>(D.back()));
            if (static_cast<int>(D.size()) < N)
                for (auto& nd : shade_successors(S, D)) next.push_back(std::move(nd));
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<Poly> expand_in_x(const BiRat& r, int N) {
    std::vector<Poly> num(N + 1), den(N + 1);
    for (int i = 0; i <= N; ++i) {
        num[i] = r.num.coeff_x(i);
        den[i] = r.den.coeff_x(i);
    }
    if (!den[0].is_constant() || den[0].is_zero())
        throw std::invalid_argument("expansion needs an invertible denominator constant term");
    Rat d0 = den[0].coeff(0);
    std::vector<Poly> out(N + 1);
    for (int k = 0; k <= N; ++k) {
        Poly acc = num[k];
        for (int j = 1; j <= k; ++j) acc = acc - den[j] * out[k - j];
        out[k] = (1 / d0) * acc;
    }
    return out;
}

// ------------------------------------------------- face generating function

Series face_series(const std::set<int>& S, int N) {
    require_sym(S);
    const int m = offset_bound(S);
    const bool zero_in = S.count(0) != 0;

    std::vector<std::set<int>> Us;
    subsets_of_window(m, Us);
    const int nu = static_cast<int>(Us.size());

    std::vector<std::vector<BiRat>> D(nu, std::vector<BiRat>(nu));
    std::vector<std::vector<Poly>> C(nu, std::vector<Poly>(nu));
    for (int a = 0; a < nu; ++a)
        for (int b = 0; b < nu; ++b) {
            D[a][b] = shadow_rational(S, Us[a], Us[b]);
            C[a][b] = connection_poly(S, Us[a], Us[b]);
        }

    const Series E = Series::exp_x(N) - Series::one(N);
    const Series one = Series::one(N);
    const Series one_minus_exp_neg_xu = one - Series::exp_neg_xu(N);
    const Poly u = Poly::monomial(1, 1);

    Series F = Series::one(N);
    std::vector<Series> FU(nu, Series::zero(N));

    auto eval_conn = [&](const Poly& cp, const std::vector<Series>& fpow) {
        Series out = Series::zero(N);
        for (int s = 0; s <= cp.deg(); ++s)
            if (cp.coeff(s) != 0) out = out + Poly::constant(cp.coeff(s)) * fpow[s];
        return out;
    };

    bool stabilized = false;
    for (int pass = 0; pass <= N + 2; ++pass) {
        std::vector<Series> fpow;
        fpow.push_back(Series::one(N));
        for (int s = 1; s <= m; ++s) fpow.push_back(fpow.back() * F);

        std::vector<Series> inner(nu, Series::zero(N));
        for (int b = 0; b < nu; ++b) {
            Series acc = one;
            for (int w = 0; w < nu; ++w) acc = acc + eval_conn(C[b][w], fpow) * FU[w];
            inner[b] = acc;
        }

        std::vector<Series> newFU(nu, Series::zero(N));
        for (int a = 0; a < nu; ++a) {
            if (zero_in || !Us[a].empty()) {
                Series acc = Series::zero(N);
                for (int b = 0; b < nu; ++b)
                    acc = acc + u * (series_subst(D[a][b], E, F) * inner[b]);
                newFU[a] = acc;
            } else {
                Series head = one;
                for (int b = 0; b < nu; ++b)
                    head = head + eval_conn(C[a][b], fpow) * FU[b];
                Series acc = one_minus_exp_neg_xu * head;
                for (int b = 0; b < nu; ++b) {
                    Series dsub = series_subst(D[a][b], E, F);
                    if (Us[b].empty()) dsub = dsub - E;
                    acc = acc + u * (dsub * inner[b]);
                }
                newFU[a] = acc;
            }
        }
        Series newF = Series::one(N);
        for (int a = 0; a < nu; ++a) newF = newF + newFU[a];
        if (newF == F && newFU == FU) {
            stabilized = true;
            break;
        }
        F = newF;
        FU = newFU;
    }
    if (!stabilized) throw std::logic_error("face series iteration failed to stabilize");
    return F;
}

ClosedFormReport verify_closed_form_catalan(int m, int N) {
    ClosedFormReport rep;
    std::set<int> S;
    for (int s = -m; s <= m; ++s) S.insert(s);
    Series G = face_series(S, N);
    const Series E = Series::exp_x(N) - Series::one(N);
    const Poly u = Poly::monomial(1, 1);
    const Poly one_plus_u = Poly::constant(1) + u;

    // exponential form
    Series rhs = Series::exp_neg_x(N) +
                 one_plus_u * ((Series::one(N) - Series::exp_neg_x(N)) * series_pow(G, m + 1));
    Series res = G - rhs;

    // Omega form: X*Y^{m+1} / (1 - X*(Y + ... + Y^m))
    BiRat omega;
    omega.num = BiPoly::monomial(1, m + 1);
    BiPoly geom;
    for (int s = 1; s <= m; ++s) geom = geom + BiPoly::monomial(0, s);
    omega.den = BiPoly::constant(1) - BiPoly::monomial(1, 0) * geom;
    Series rhs2 = Series::one(N) + u * series_subst(omega, E, G);
    Series res2 = G - rhs2;

    for (int k = 0; k <= N; ++k)
        if (!res.c[k].is_zero() || !res2.c[k].is_zero()) {
            rep.ok = false;
            rep.first_bad_order = k;
            rep.detail = "catalan closed form residual at order " + std::to_string(k);
            return rep;
        }
    return rep;
}

ClosedFormReport verify_closed_form_semiorder(int m, int N) {
    ClosedFormReport rep;
    std::set<int> S;
    for (int s = 1; s <= m; ++s) {
        S.insert(s);
        S.insert(-s);
    }
    Series H = face_series(S, N);
    const Series E = Series::exp_x(N) - Series::one(N);
    const Poly u = Poly::monomial(1, 1);

    // X^2 * Y^{m+2} * (1 + Y + ... + Y^{m-1}) / (1 - X*(Y + ... + Y^m)),
    // the printed form with its common (1 - Y) factor cancelled.
    BiRat omega;
    BiPoly lead;
    for (int s = 0; s <= m - 1; ++s) lead = lead + BiPoly::monomial(0, s);
    omega.num = BiPoly::monomial(2, m + 2) * lead;
    BiPoly geom;
    for (int s = 1; s <= m; ++s) geom = geom + BiPoly::monomial(0, s);
    omega.den = BiPoly::constant(1) - BiPoly::monomial(1, 0) * geom;

    Series rhs = Series::one(N) +
                 (Series::one(N) - Series::exp_neg_xu(N)) * series_pow(H, m + 1) +
                 u * series_subst(omega, E, H);
    Series res = H - rhs;
    for (int k = 0; k <= N; ++k)
        if (!res.c[k].is_zero()) {
            rep.ok = false;
            rep.first_bad_order = k;
            rep.detail = "semiorder closed form residual at order " + std::to_string(k);
            return rep;
        }
    return rep;
}

std::vector<Rat> line_series(const std::set<int>& S, int N) {
    require_sym(S);
    const int m = offset_bound(S);
    std::vector<std::set<int>> Us;
    subsets_of_window(m, Us);
    const Series E = Series::exp_x(N) - Series::one(N);
    const Series Y1 = Series::one(N);
    Series total = Series::zero(N);
    for (const auto& U : Us)
        for (const auto& V : Us) total = total + series_subst(shadow_rational(S, U, V), E, Y1);
    if (!S.count(0)) total = total - (E - Series::x(N));
    std::vector<Rat> out(N + 1);
    for (int k = 0; k <= N; ++k) {
        if (!total.c[k].is_constant())
            throw std::logic_error("line series coefficient is not constant in u");
        out[k] = total.c[k].coeff(0);
    }
    return out;
}

}  // namespace braidfaces
