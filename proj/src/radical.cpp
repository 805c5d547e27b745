#include "qsl2/radical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsl2/polyops.hpp"

namespace qsl2 {

namespace {

// Rewrites c * sqrt(r) so that the radicand becomes its canonical square-free
// core: a signed square-free integer times t^{0|1} times a monic square-free
// polynomial with nonzero constant term.
RadicalScalar::Term normalize_term(RatFunc c, const RatFunc& r) {
    if (r.is_zero()) return {RatFunc(0), RatFunc(1)};
    // sqrt(n/d) = sqrt(n*d)/d moves the denominator into the coefficient.
    if (!r.is_polynomial()) c = c / RatFunc(r.den());
    LaurentPoly L = r.num() * r.den();
    long val = L.valuation();
    Dense M = dense_from(L.shifted(-val));
    Rat lead = M.back();
    for (auto& x : M) x /= lead;

    LaurentPoly outside = LaurentPoly::t_power(val >= 0 ? val / 2 : (val - 1) / 2);
    long t_left = ((val % 2) + 2) % 2;
    LaurentPoly inside = LaurentPoly::t_power(t_left);

    auto factors = dense_squarefree(M);
    for (size_t i = 0; i < factors.size(); ++i) {
        unsigned mult = unsigned(i) + 1;
        LaurentPoly f = laurent_from(factors[i]);
        if (mult / 2 > 0) outside *= f.pow(mult / 2);
        if (mult % 2 == 1 && factors[i].size() > 1) inside *= f;
    }

    auto [ls, lr] = squarefree_split(lead.get_num());
    auto [ms, mr] = squarefree_split(lead.get_den());
    // lead = (ls^2*lr)/(ms^2*mr); sqrt(lead) = (ls/(ms*mr)) * sqrt(lr*mr).
    Rat csq(ls, ms * mr);
    csq.canonicalize();
    Rat rad_const(lr * mr);

    RatFunc coeff = c * RatFunc(LaurentPoly(csq) * outside);
    RatFunc radicand = RatFunc(LaurentPoly(rad_const) * inside);
    if (radicand.is_one()) return {coeff, RatFunc(1)};
    return {coeff, radicand};
}

}  // namespace

void RadicalScalar::canonicalize() {
    std::vector<Term> in;
    in.swap(terms_);
    for (auto& t : in) {
        if (t.coeff.is_zero()) continue;
        Term n = normalize_term(t.coeff, t.radicand);
        if (n.coeff.is_zero()) continue;
        terms_.push_back(std::move(n));
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        return RatFunc::compare(a.radicand, b.radicand) < 0;
    });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().radicand == t.radicand) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

RadicalScalar RadicalScalar::radical(const RatFunc& c, const RatFunc& r) {
    RadicalScalar s;
    s.terms_.push_back({c, r});
    s.canonicalize();
    return s;
}

RatFunc RadicalScalar::as_ratfunc() const {
    if (terms_.empty()) return RatFunc(0);
    if (!is_rational()) throw ScalarError("radical value is not rational");
    return terms_[0].coeff;
}

RadicalScalar operator+(const RadicalScalar& a, const RadicalScalar& b) {
    RadicalScalar r;
    r.terms_ = a.terms_;
    r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
    r.canonicalize();
    return r;
}

RadicalScalar operator-(const RadicalScalar& a, const RadicalScalar& b) { return a + (-b); }

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    // A canonical radicand with negative leading sign stands for
    // i*sqrt(|r|), so two negative factors contribute i^2 = -1; the radicand
    // product alone would silently turn sqrt(-1)^2 into +1.
    auto negative = [](const RatFunc& r) {
        return !r.num().is_zero() && r.num().leading_coeff() < 0;
    };
    RadicalScalar r;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            RatFunc coeff = ta.coeff * tb.coeff;
            if (negative(ta.radicand) && negative(tb.radicand)) coeff = -coeff;
            r.terms_.push_back({coeff, ta.radicand * tb.radicand});
        }
    r.canonicalize();
    return r;
}

RadicalScalar RadicalScalar::operator-() const {
    RadicalScalar r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        if (!(a.terms_[i].radicand == b.terms_[i].radicand)) return false;
    }
    return true;
}

RadicalScalar RadicalScalar::inverse() const {
    if (terms_.empty()) throw ScalarError("inverse of zero");
    if (terms_.size() > 1)
        throw UnsupportedInverseError("inverse of a multi-term radical sum");
    // (c*sqrt(r))^{-1} = (1/(c*r)) * sqrt(r).
    const Term& t = terms_[0];
    return radical((t.coeff * t.radicand).inverse(), t.radicand);
}

RadicalScalar RadicalScalar::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    RadicalScalar acc(1), base = *this;
    unsigned long e = n;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

double RadicalScalar::eval(const Rat& t0) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        Rat rv = t.radicand.eval(t0);
        if (rv < 0)
            throw NegativeRadicandError("negative radicand at t = " + rat_to_string(t0));
        acc += t.coeff.eval(t0).get_d() * std::sqrt(rv.get_d());
    }
    return acc;
}

int RadicalScalar::sign_at(const Rat& t0) const {
    if (terms_.empty()) return 0;
    if (terms_.size() > 1) throw ScalarError("exact sign of a multi-term radical sum");
    Rat rv = terms_[0].radicand.eval(t0);
    if (rv < 0)
        throw NegativeRadicandError("negative radicand at t = " + rat_to_string(t0));
    if (rv == 0) return 0;
    return terms_[0].coeff.sign_at(t0);
}

int RadicalScalar::compare(const RadicalScalar& a, const RadicalScalar& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        int c = RatFunc::compare(a.terms_[i].radicand, b.terms_[i].radicand);
        if (c != 0) return c;
        c = RatFunc::compare(a.terms_[i].coeff, b.terms_[i].coeff);
        if (c != 0) return c;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string RadicalScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string cs = t.coeff.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) {
                out << "-";
                cs = cs.substr(1);
            }
        } else {
            out << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        bool has_radical = !t.radicand.is_one();
        bool coeff_is_one = cs == "1";
        if (!has_radical) {
            out << cs;
        } else {
            if (!coeff_is_one) {
                int depth = 0;
                bool wrap = false;
                for (size_t i = 0; i < cs.size(); ++i) {
                    char ch = cs[i];
                    if (ch == '(') ++depth;
                    else if (ch == ')') --depth;
                    else if ((ch == '+' || ch == '-') && depth == 0 && i > 0 && cs[i - 1] != '^')
                        wrap = true;
                }
                if (wrap) {
                    // Parenthesizing the textually sign-stripped string would
                    // flip the interior signs; negate the coefficient instead.
                    if (neg) cs = (-t.coeff).str();
                    out << "(" << cs << ")";
                } else {
                    out << cs;
                }
                out << "*";
            }
            out << "sqrt(" << t.radicand.str() << ")";
        }
    }
    return out.str();
}

}  // namespace qsl2
