#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidfaces/rational.hpp"

namespace braidfaces {

// Dense univariate polynomial with exact rational coefficients.
struct Poly {
    std::vector<Rat> c;  // c[k] = coefficient of t^k, no trailing zeros

    static Poly zero() { return {}; }
    static Poly constant(const Rat& v);
    static Poly monomial(int k, const Rat& v = 1);

    int deg() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_constant() const { return c.size() <= 1; }
    Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : Rat(0); }
    void trim();

    bool operator==(const Poly&) const = default;
    std::string to_string(const std::string& var = "u") const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& s, const Poly& a);
Poly operator-(const Poly& a);
// Exact division; throws when the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);

// Bivariate polynomial viewed as a polynomial in X over Q[Y].
struct BiPoly {
    std::vector<Poly> cx;  // cx[i] = Y-polynomial coefficient of X^i, no trailing zeros

    static BiPoly zero() { return {}; }
    static BiPoly constant(const Rat& v);
    static BiPoly monomial(int dx, int dy, const Rat& v = 1);

    int degx() const { return static_cast<int>(cx.size()) - 1; }
    bool is_zero() const { return cx.empty(); }
    Poly coeff_x(int i) const { return i >= 0 && i < static_cast<int>(cx.size()) ? cx[i] : Poly{}; }
    void trim();

    bool operator==(const BiPoly&) const = default;
    std::string to_string() const;
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const Rat& s, const BiPoly& a);
BiPoly operator-(const BiPoly& a);
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

// Ratio of bivariate polynomials; the denominator constant term stays nonzero
// for everything produced here, so the ratio expands as a power series in X.
struct BiRat {
    BiPoly num;
    BiPoly den;

    // Divide out integer content and common monomial factors.
    void reduce();
    std::string to_string() const;
};

// Truncated exponential series: f = sum c[k] x^k / k!, coefficients in Q[u].
struct Series {
    int order = 0;
    std::vector<Poly> c;  // size order+1

    static Series zero(int order);
    static Series one(int order);
    static Series x(int order);
    static Series exp_x(int order);      // c[k] = 1
    static Series exp_neg_x(int order);  // c[k] = (-1)^k
    static Series exp_xu(int order);     // c[k] = u^k
    static Series exp_neg_xu(int order);  // c[k] = (-u)^k

    bool operator==(const Series&) const = default;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator*(const Poly& s, const Series& a);
Series series_pow(const Series& a, int e);
// Requires the constant coefficient of b to be a nonzero rational (degree 0 in u).
Series series_div(const Series& a, const Series& b);
// Substitute series into a bivariate polynomial / rational function.
Series series_subst(const BiPoly& p, const Series& X, const Series& Y);
Series series_subst(const BiRat& r, const Series& X, const Series& Y);

// ---- shadows, shades and the transfer matrix ----

// Symmetric transitivity condition on S: S = -S and s,t in N\S implies s+t not in S.
bool sym_condition(const std::set<int>& S);
int offset_bound(const std::set<int>& S);  // max(S), 0 for the empty set

// D is a finite subset of N containing 0; edges join elements differing by an
// element of S. Shadow: connected. Shade: every component meets the top window
// [max(D)-m+1, max(D)].
bool is_shadow(const std::set<int>& S, const std::vector<long>& D);
bool is_shade(const std::set<int>& S, const std::vector<long>& D);
std::vector<std::vector<long>> shade_successors(const std::set<int>& S,
                                                const std::vector<long>& D);
// Number of blocks of the live-window component partition of a shade.
int shade_component_count(const std::set<int>& S, const std::vector<long>& D);

std::set<int> connection_set(const std::set<int>& S, const std::set<int>& V,
                             const std::set<int>& W);
Poly connection_poly(const std::set<int>& S, const std::set<int>& V, const std::set<int>& W);

// The generating function sum over S-shadows D with start(D)=U, end(D)=V of
// X^|D| Y^max(D), as an exact rational function via the transfer matrix.
BiRat shadow_rational(const std::set<int>& S, const std::set<int>& U, const std::set<int>& V);

// Same sum restricted to |D| <= N, by direct breadth-first search over shades.
BiPoly shadow_series(const std::set<int>& S, const std::set<int>& U, const std::set<int>& V,
                     int N);

// Expansion of a BiRat as a power series in X up to X^N, Y-polynomial coefficients.
std::vector<Poly> expand_in_x(const BiRat& r, int N);

// ---- the face generating function ----

// F_S(x,u) to order N by fixed-point solution of the linear system tying the
// start-set components together.
Series face_series(const std::set<int>& S, int N);

struct ClosedFormReport {
    bool ok = true;
    int first_bad_order = -1;
    std::string detail;
};

// Residual checks of the closed equations for the m-Catalan and m-semiorder
// face series; both printed forms of the Catalan equation are exercised.
ClosedFormReport verify_closed_form_catalan(int m, int N);
ClosedFormReport verify_closed_form_semiorder(int m, int N);

// Generating function of one-dimensional faces; equals the u-coefficient of F_S.
std::vector<Rat> line_series(const std::set<int>& S, int N);

}  // namespace braidfaces
