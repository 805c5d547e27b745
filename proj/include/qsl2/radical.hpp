#pragma once

#include <string>
#include <vector>

#include "qsl2/ratfunc.hpp"

namespace qsl2 {

// Finite sum  sum_i  c_i * sqrt(r_i)  with c_i, r_i in Q(t).  Each radicand is
// normalized to a canonical square-free representative (square factors of the
// numerator and denominator move into the coefficient), terms are sorted by
// radicand and merged, so equality is structural and the zero test is exact:
// distinct canonical radicands are linearly independent over Q(t).
// sqrt denotes the branch that is positive for t > 1; signs live in the
// coefficients.  Radicands are allowed to be formally negative; evaluation
// rejects them if the value at the chosen point is negative.
class RadicalScalar {
  public:
    struct Term {
        RatFunc coeff;
        RatFunc radicand;  // canonical: square-free, denominator-free, 1 for plain terms
    };

    RadicalScalar() = default;
    RadicalScalar(const RatFunc& c) {
        if (!c.is_zero()) terms_.push_back({c, RatFunc(1)});
    }
    RadicalScalar(const LaurentPoly& c) : RadicalScalar(RatFunc(c)) {}
    RadicalScalar(const Rat& c) : RadicalScalar(RatFunc(c)) {}
    RadicalScalar(long c) : RadicalScalar(RatFunc(c)) {}

    // c * sqrt(r), canonicalized.
    static RadicalScalar radical(const RatFunc& c, const RatFunc& r);
    static RadicalScalar sqrt_of(const RatFunc& r) { return radical(RatFunc(1), r); }
    static RadicalScalar t_power(long n) { return RadicalScalar(RatFunc::t_power(n)); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return is_rational() && !terms_.empty() && terms_[0].coeff.is_one(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand.is_one());
    }
    // Valid only when is_rational().
    RatFunc as_ratfunc() const;

    friend RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b);
    friend RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b);
    friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
    RadicalScalar operator-() const;
    RadicalScalar& operator+=(const RadicalScalar& b) { return *this = *this + b; }
    RadicalScalar& operator-=(const RadicalScalar& b) { return *this = *this - b; }
    RadicalScalar& operator*=(const RadicalScalar& b) { return *this = *this * b; }
    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b);

    // Defined for single-term values only; throws UnsupportedInverseError on
    // sums of distinct radicals and ScalarError on zero.
    RadicalScalar inverse() const;

    RadicalScalar pow(long n) const;

    // Numeric value at t = t0 (> 0).  Denominator and radicand signs are
    // decided exactly before any floating-point conversion.
    double eval(const Rat& t0) const;

    // Exact sign at t0 for single-term values (used for phase conventions).
    int sign_at(const Rat& t0) const;

    static int compare(const RadicalScalar& a, const RadicalScalar& b);

    std::string str() const;

  private:
    void canonicalize();
    std::vector<Term> terms_;
};

}  // namespace qsl2
