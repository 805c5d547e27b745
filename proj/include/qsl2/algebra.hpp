#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsl2/radical.hpp"

namespace qsl2 {

// Normally ordered word e^a f^b k^c (a, b >= 0, c any integer).
struct Monomial {
    int e_pow = 0;
    int f_pow = 0;
    int k_pow = 0;

    static Monomial unit() { return {}; }
    bool is_unit() const { return e_pow == 0 && f_pow == 0 && k_pow == 0; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    std::string str() const;
};

// Element of U_t(sl(2)) as a finite sum of scalar * monomial in the PBW basis
// {e^a f^b k^c}.  All products are rewritten to this normal order with the
// defining relations k e = t^2 e k, k f = t^{-2} f k,
// ef - fe = (k^2 - k^{-2})/(t^2 - t^{-2}).
class AlgebraElement {
  public:
    AlgebraElement() = default;
    AlgebraElement(const RadicalScalar& c) { add_term(Monomial::unit(), c); }
    AlgebraElement(long c) : AlgebraElement(RadicalScalar(c)) {}

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return AlgebraElement(1); }
    static AlgebraElement e(int pow = 1);
    static AlgebraElement f(int pow = 1);
    static AlgebraElement k(int pow = 1);
    static AlgebraElement monomial(const Monomial& m, const RadicalScalar& c = RadicalScalar(1));

    const std::map<Monomial, RadicalScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Nonzero only on scalar multiples of the unit monomial.
    RadicalScalar scalar_part() const;
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }

    void add_term(const Monomial& m, const RadicalScalar& c);

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& b) { return *this = *this + b; }
    AlgebraElement& operator-=(const AlgebraElement& b) { return *this = *this - b; }
    AlgebraElement& operator*=(const AlgebraElement& b) { return *this = *this * b; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.terms_ == b.terms_;
    }

    AlgebraElement scaled(const RadicalScalar& c) const;
    AlgebraElement pow(unsigned n) const;

    std::string str() const;

  private:
    std::map<Monomial, RadicalScalar> terms_;
};

// Element of the two-fold tensor product, componentwise normal ordered.
class TensorElement {
  public:
    TensorElement() = default;
    static TensorElement of(const AlgebraElement& x, const AlgebraElement& y);

    const std::map<std::pair<Monomial, Monomial>, RadicalScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Monomial& m1, const Monomial& m2, const RadicalScalar& c);

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
    // (x1 (x) y1)(x2 (x) y2) = x1*x2 (x) y1*y2, extended bilinearly.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    TensorElement operator-() const;
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms_ == b.terms_;
    }

    TensorElement scaled(const RadicalScalar& c) const;
    std::string str() const;

  private:
    std::map<std::pair<Monomial, Monomial>, RadicalScalar> terms_;
};

// Hopf structure maps.
TensorElement coproduct(const AlgebraElement& x);
RadicalScalar counit(const AlgebraElement& x);
AlgebraElement antipode(const AlgebraElement& x);

// ad_a(b) = sum a^(1) b S(a^(2)).
AlgebraElement adjoint_action(const AlgebraElement& a, const AlgebraElement& b);

// [k+m] = (k^2 t^{2m} - k^{-2} t^{-2m})/(t^2 - t^{-2}) as an algebra element.
AlgebraElement bracket_of_k(long m);

// sum (a^(1))^(1) (x) S((a^(1))^(2)) * a^(2)  ==  a (x) 1.
bool verify_identity_2_1(const AlgebraElement& a);

struct HopfCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Coassociativity, counit laws, antipode laws, S as anti-homomorphism, and the
// connecting identity above, for each sample element.
HopfCheckReport verify_hopf_axioms(const std::vector<AlgebraElement>& samples);

}  // namespace qsl2
