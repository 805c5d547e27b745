#include "qsl2/ratfunc.hpp"

#include <sstream>

#include "qsl2/polyops.hpp"

namespace qsl2 {

void dense_trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_from(const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    if (p.valuation() < 0) throw ScalarError("dense_from on a proper Laurent polynomial");
    d.assign(p.degree() + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) d[e] = c;
    return d;
}

LaurentPoly laurent_from(const Dense& p) {
    LaurentPoly r;
    for (size_t i = 0; i < p.size(); ++i) r += LaurentPoly::t_power(long(i), p[i]);
    return r;
}

Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    dense_trim(r);
    return r;
}

std::pair<Dense, Dense> dense_divmod(const Dense& a, const Dense& b) {
    if (b.empty()) throw ScalarError("polynomial division by zero");
    Dense rem = a, quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, Rat(0));
    while (rem.size() >= b.size()) {
        Rat factor = rem.back() / b.back();
        size_t shift = rem.size() - b.size();
        quot[shift] = factor;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= factor * b[i];
        dense_trim(rem);
        if (rem.size() >= b.size() && rem.size() == shift + b.size()) {
            // Leading term must have cancelled.
            throw ScalarError("polynomial division failed to reduce");
        }
    }
    dense_trim(quot);
    return {quot, rem};
}

Dense dense_derivative(const Dense& p) {
    Dense r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(Rat(long(i)) * p[i]);
    dense_trim(r);
    return r;
}

static void make_monic(Dense& p) {
    if (p.empty()) return;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
}

Dense dense_gcd(Dense a, Dense b) {
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        auto [q, r] = dense_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        make_monic(b);  // keeps coefficient growth in check
    }
    make_monic(a);
    return a;
}

std::vector<Dense> dense_squarefree(const Dense& p) {
    // Yun's algorithm on the monic part.
    std::vector<Dense> out;
    if (p.size() <= 1) return out;
    Dense a = p;
    make_monic(a);
    Dense d = dense_derivative(a);
    Dense g = dense_gcd(a, d);
    Dense w = dense_divmod(a, g).first;
    Dense y = dense_divmod(d, g).first;
    while (w.size() > 1) {
        Dense z = y;
        Dense wd = dense_derivative(w);
        if (z.size() < wd.size()) z.resize(wd.size(), Rat(0));
        for (size_t i = 0; i < wd.size(); ++i) z[i] -= wd[i];
        dense_trim(z);
        Dense f = dense_gcd(w, z);
        out.push_back(f);
        w = dense_divmod(w, f).first;
        y = dense_divmod(z, f).first;
    }
    return out;
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw ScalarError("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_one()) return;
    long a = num_.valuation(), b = den_.valuation();
    Dense n = dense_from(num_.shifted(-a));
    Dense d = dense_from(den_.shifted(-b));
    Dense g = dense_gcd(n, d);
    if (g.size() > 1) {
        n = dense_divmod(n, g).first;
        d = dense_divmod(d, g).first;
    }
    Rat lead = d.back();
    for (auto& c : n) c /= lead;
    for (auto& c : d) c /= lead;
    num_ = laurent_from(n).shifted(a - b);
    den_ = laurent_from(d);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ScalarError("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc acc(1), base = *this;
    unsigned long e = n;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat RatFunc::eval(const Rat& t0) const {
    Rat d = den_.eval(t0);
    if (d == 0) throw PoleError("pole at t = " + rat_to_string(t0));
    return num_.eval(t0) / d;
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
    int c = LaurentPoly::compare(a.num_, b.num_);
    if (c != 0) return c;
    return LaurentPoly::compare(a.den_, b.den_);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream out;
    bool wrap_num = num_.terms().size() > 1;
    if (wrap_num) out << "(" << num_.str() << ")";
    else out << num_.str();
    out << "/(" << den_.str() << ")";
    return out.str();
}

}  // namespace qsl2
