#pragma once

#include <string>

#include "qsl2/laurent.hpp"

namespace qsl2 {

// Element of Q(t) held as num/den in a unique reduced form: den is an ordinary
// monic polynomial with nonzero constant term (den == 1 when possible) and
// gcd(num cleared of t-powers, den) == 1, so operator== is structural equality.
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    static RatFunc t_power(long n) { return RatFunc(LaurentPoly::t_power(n)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc inverse() const;
    RatFunc pow(long n) const;

    // Exact evaluation; throws PoleError if den(t0) == 0.
    Rat eval(const Rat& t0) const;

    // Exact sign of the value at a rational point (no pole there).
    int sign_at(const Rat& t0) const { return sgn(eval(t0)); }

    static int compare(const RatFunc& a, const RatFunc& b);

    std::string str() const;

  private:
    void reduce();
    LaurentPoly num_, den_;
};

}  // namespace qsl2
