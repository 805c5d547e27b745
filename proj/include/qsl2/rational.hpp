#pragma once

#include <gmpxx.h>
#include <string>
#include <utility>

#include "qsl2/errors.hpp"

namespace qsl2 {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw ScalarError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw ScalarError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& q, long n) {
    if (n == 0) return Rat(1);
    if (q == 0 && n < 0) throw ScalarError("zero to a negative power");
    Rat base = n > 0 ? q : Rat(1) / q;
    unsigned long e = n > 0 ? n : -n;
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Splits |n| = s^2 * r with r square-free; returns {s, r} (r keeps the sign of n).
// Trial division below 10^5, then a perfect-square check on the cofactor; a
// composite non-square cofactor surviving that would exceed 10^10 and cannot
// arise from the coefficient sizes this library produces.
inline std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& n) {
    if (n == 0) return {1, 0};
    mpz_class m = abs(n);
    mpz_class s = 1, r = 1;
    for (mpz_class p = 2; p < 100000 && m > 1; ++p) {
        if (p * p > m) break;
        unsigned count = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++count;
        }
        for (unsigned i = 0; i + 1 < count; i += 2) s *= p;
        if (count & 1) r *= p;
    }
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
            s *= root;
        } else {
            r *= m;
        }
    }
    if (n < 0) r = -r;
    return {s, r};
}

}  // namespace qsl2
