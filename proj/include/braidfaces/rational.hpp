#pragma once

#include <gmpxx.h>
#include <string>

namespace braidfaces {

// Exact arithmetic everywhere: rationals backed by GMP, integers by mpz.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign_of(const Rat& q) { return sgn(q); }

// "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline Int factorial(int n) {
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace braidfaces
