#pragma once

#include <map>
#include <string>

#include "qsl2/rational.hpp"

namespace qsl2 {

// Laurent polynomial in t with rational coefficients, stored sparsely as
// exponent -> coefficient with no zero entries.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(const Rat& c) {
        if (c != 0) coeff_[0] = c;
    }
    LaurentPoly(long c) : LaurentPoly(Rat(c)) {}

    static LaurentPoly t_power(long n, const Rat& c = Rat(1)) {
        LaurentPoly p;
        if (c != 0) p.coeff_[n] = c;
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const;

    // Lowest and highest exponents; only valid on nonzero polynomials.
    long valuation() const;
    long degree() const;
    const Rat& leading_coeff() const;

    const std::map<long, Rat>& terms() const { return coeff_; }
    Rat coeff_at(long exp) const;

    LaurentPoly shifted(long by) const;  // multiply by t^by

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeff_ == b.coeff_; }

    LaurentPoly pow(unsigned n) const;

    // Substitutes t = t0 exactly; t0 must be nonzero if negative exponents occur.
    Rat eval(const Rat& t0) const;

    // Total order used to keep containers of scalars canonically sorted.
    static int compare(const LaurentPoly& a, const LaurentPoly& b);

    // Mirrors t -> 1/t.
    LaurentPoly mirrored() const;

    std::string str() const;

  private:
    void insert_term(long exp, const Rat& c);
    std::map<long, Rat> coeff_;
};

// q-integer [n] = (t^{2n} - t^{-2n})/(t^2 - t^{-2}) as a Laurent polynomial.
LaurentPoly qint(long n);
// q-factorial [n]! = [1][2]...[n]; [0]! = 1.
LaurentPoly qfact(long n);

}  // namespace qsl2
