#include "qsl2/algebra.hpp"

#include <sstream>
#include <tuple>

namespace qsl2 {

namespace {

LaurentPoly t2_minus_tm2() { return LaurentPoly::t_power(2) - LaurentPoly::t_power(-2); }

RadicalScalar t_pow_over_bracket_den(long n) {
    return RadicalScalar(RatFunc(LaurentPoly::t_power(n), t2_minus_tm2()));
}

AlgebraElement prepend_e(const AlgebraElement& x, int a) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) out.add_term({m.e_pow + a, m.f_pow, m.k_pow}, c);
    return out;
}

// x * f^b k^c for normally ordered x.
AlgebraElement append_fk(const AlgebraElement& x, int b, int c) {
    AlgebraElement out;
    for (const auto& [m, c0] : x.terms()) {
        RadicalScalar tw = RadicalScalar::t_power(-2L * m.k_pow * b);
        out.add_term({m.e_pow, m.f_pow + b, m.k_pow + c}, c0 * tw);
    }
    return out;
}

// f e^a  ->  e (f e^{a-1}) - e^{a-1} (t^{4(a-1)}k^2 - t^{-4(a-1)}k^{-2})/(t^2-t^{-2}).
AlgebraElement f_times_e_pow(int a) {
    if (a == 0) return AlgebraElement::f();
    AlgebraElement out = prepend_e(f_times_e_pow(a - 1), 1);
    long s = 4L * (a - 1);
    out.add_term({a - 1, 0, 2}, -t_pow_over_bracket_den(s));
    out.add_term({a - 1, 0, -2}, t_pow_over_bracket_den(-s));
    return out;
}

AlgebraElement f_times(const AlgebraElement& x) {
    AlgebraElement out;
    for (const auto& [m, c] : x.terms()) {
        AlgebraElement fe = append_fk(f_times_e_pow(m.e_pow), m.f_pow, m.k_pow);
        for (const auto& [mm, cc] : fe.terms()) out.add_term(mm, c * cc);
    }
    return out;
}

// f^b e^a in normal order.
AlgebraElement fe_normal(int b, int a) {
    AlgebraElement x = AlgebraElement::e(a);
    for (int i = 0; i < b; ++i) x = f_times(x);
    return x;
}

AlgebraElement normal_mul(const Monomial& m1, const Monomial& m2) {
    RadicalScalar twist = RadicalScalar::t_power(2L * m1.k_pow * (m2.e_pow - m2.f_pow));
    AlgebraElement mid = fe_normal(m1.f_pow, m2.e_pow);
    AlgebraElement out = append_fk(prepend_e(mid, m1.e_pow), m2.f_pow, m1.k_pow + m2.k_pow);
    return out.scaled(twist);
}

}  // namespace

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const char* g, int p) {
        if (p == 0) return;
        if (!first) out << "*";
        first = false;
        out << g;
        if (p != 1) out << "^" << p;
    };
    emit("e", e_pow);
    emit("f", f_pow);
    emit("k", k_pow);
    return out.str();
}

AlgebraElement AlgebraElement::e(int pow) { return monomial({pow, 0, 0}); }
AlgebraElement AlgebraElement::f(int pow) { return monomial({0, pow, 0}); }
AlgebraElement AlgebraElement::k(int pow) { return monomial({0, 0, pow}); }

AlgebraElement AlgebraElement::monomial(const Monomial& m, const RadicalScalar& c) {
    if (m.e_pow < 0 || m.f_pow < 0) throw ScalarError("negative power of e or f");
    AlgebraElement x;
    x.add_term(m, c);
    return x;
}

RadicalScalar AlgebraElement::scalar_part() const {
    auto it = terms_.find(Monomial::unit());
    return it == terms_.end() ? RadicalScalar() : it->second;
}

void AlgebraElement::add_term(const Monomial& m, const RadicalScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            AlgebraElement part = normal_mul(ma, mb);
            RadicalScalar c = ca * cb;
            for (const auto& [m, c0] : part.terms()) r.add_term(m, c * c0);
        }
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const RadicalScalar& c) const {
    AlgebraElement r;
    for (const auto& [m, c0] : terms_) r.add_term(m, c0 * c);
    return r;
}

AlgebraElement AlgebraElement::pow(unsigned n) const {
    AlgebraElement acc = one(), base = *this;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

namespace {

// True when s has a '+' or '-' at paren depth zero (other than a leading sign
// or an exponent sign), so gluing "*mono" after it would change the parse.
bool needs_parens(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if ((ch == '+' || ch == '-') && depth == 0 && i > 0 && s[i - 1] != '^')
            return true;
    }
    return false;
}

}  // namespace

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = it->second.str();
        if (needs_parens(cs)) cs = "(" + cs + ")";
        std::string piece;
        if (it->first.is_unit()) {
            piece = cs;
        } else if (cs == "1") {
            piece = it->first.str();
        } else if (cs == "-1") {
            piece = "-" + it->first.str();
        } else {
            piece = cs + "*" + it->first.str();
        }
        if (first) {
            out << piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out << " - " << piece.substr(1);
        } else {
            out << " + " << piece;
        }
        first = false;
    }
    return out.str();
}

TensorElement TensorElement::of(const AlgebraElement& x, const AlgebraElement& y) {
    TensorElement r;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) r.add_term(mx, my, cx * cy);
    return r;
}

void TensorElement::add_term(const Monomial& m1, const Monomial& m2, const RadicalScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(m1, m2);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    TensorElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m.first, m.second, c);
    return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    TensorElement r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m.first, m.second, -c);
    return r;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    TensorElement r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            AlgebraElement left = AlgebraElement::monomial(ma.first) * AlgebraElement::monomial(mb.first);
            AlgebraElement right = AlgebraElement::monomial(ma.second) * AlgebraElement::monomial(mb.second);
            RadicalScalar c = ca * cb;
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms()) r.add_term(ml, mr, c * cl * cr);
        }
    return r;
}

TensorElement TensorElement::operator-() const {
    TensorElement r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TensorElement TensorElement::scaled(const RadicalScalar& c) const {
    TensorElement r;
    for (const auto& [m, c0] : terms_) r.add_term(m.first, m.second, c0 * c);
    return r;
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        std::string cs = it->second.str();
        if (needs_parens(cs)) cs = "(" + cs + ")";
        if (cs != "1") out << cs << "*";
        out << "[" << it->first.first.str() << " (x) " << it->first.second.str() << "]";
    }
    return out.str();
}

namespace {

TensorElement coproduct_monomial(const Monomial& m) {
    TensorElement de, df, acc;
    de.add_term({1, 0, 0}, {0, 0, -1}, RadicalScalar(1));
    de.add_term({0, 0, 1}, {1, 0, 0}, RadicalScalar(1));
    df.add_term({0, 1, 0}, {0, 0, -1}, RadicalScalar(1));
    df.add_term({0, 0, 1}, {0, 1, 0}, RadicalScalar(1));
    acc.add_term({0, 0, m.k_pow}, {0, 0, m.k_pow}, RadicalScalar(1));
    for (int i = 0; i < m.f_pow; ++i) acc = df * acc;
    for (int i = 0; i < m.e_pow; ++i) acc = de * acc;
    return acc;
}

}  // namespace

TensorElement coproduct(const AlgebraElement& x) {
    TensorElement r;
    for (const auto& [m, c] : x.terms()) r = r + coproduct_monomial(m).scaled(c);
    return r;
}

RadicalScalar counit(const AlgebraElement& x) {
    RadicalScalar r;
    for (const auto& [m, c] : x.terms())
        if (m.e_pow == 0 && m.f_pow == 0) r += c;
    return r;
}

AlgebraElement antipode(const AlgebraElement& x) {
    AlgebraElement r;
    for (const auto& [m, c] : x.terms()) {
        // S(e^a f^b k^c) = k^{-c} (-t^2 f)^b (-t^{-2} e)^a.
        long sign = (m.e_pow + m.f_pow) % 2 == 0 ? 1 : -1;
        RadicalScalar scale =
            RadicalScalar::t_power(2L * m.f_pow - 2L * m.e_pow) * RadicalScalar(sign);
        AlgebraElement word = AlgebraElement::k(-m.k_pow) * AlgebraElement::f(m.f_pow) *
                              AlgebraElement::e(m.e_pow);
        for (const auto& [mm, cc] : word.terms()) r.add_term(mm, c * scale * cc);
    }
    return r;
}

AlgebraElement adjoint_action(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    TensorElement da = coproduct(a);
    for (const auto& [m, c] : da.terms()) {
        AlgebraElement part =
            AlgebraElement::monomial(m.first) * b * antipode(AlgebraElement::monomial(m.second));
        for (const auto& [mm, cc] : part.terms()) r.add_term(mm, c * cc);
    }
    return r;
}

AlgebraElement bracket_of_k(long m) {
    AlgebraElement r;
    r.add_term({0, 0, 2}, t_pow_over_bracket_den(2 * m));
    r.add_term({0, 0, -2}, -t_pow_over_bracket_den(-2 * m));
    return r;
}

bool verify_identity_2_1(const AlgebraElement& a) {
    TensorElement lhs;
    TensorElement da = coproduct(a);
    for (const auto& [m, c] : da.terms()) {
        AlgebraElement y = AlgebraElement::monomial(m.second);
        TensorElement d1 = coproduct_monomial(m.first);
        for (const auto& [m1, c1] : d1.terms()) {
            AlgebraElement w = antipode(AlgebraElement::monomial(m1.second)) * y;
            for (const auto& [mw, cw] : w.terms()) lhs.add_term(m1.first, mw, c * c1 * cw);
        }
    }
    return lhs == TensorElement::of(a, AlgebraElement::one());
}

namespace {

using Triple = std::map<std::tuple<Monomial, Monomial, Monomial>, RadicalScalar>;

void triple_add(Triple& t, const Monomial& a, const Monomial& b, const Monomial& c,
                const RadicalScalar& v) {
    if (v.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace

HopfCheckReport verify_hopf_axioms(const std::vector<AlgebraElement>& samples) {
    HopfCheckReport report;
    auto fail = [&](const std::string& what, const AlgebraElement& x) {
        report.ok = false;
        report.failures.push_back(what + " on " + x.str());
    };
    for (const auto& x : samples) {
        TensorElement dx = coproduct(x);

        Triple left, right;
        for (const auto& [m, c] : dx.terms()) {
            TensorElement d1 = coproduct_monomial(m.first);
            for (const auto& [mm, cc] : d1.terms())
                triple_add(left, mm.first, mm.second, m.second, c * cc);
            TensorElement d2 = coproduct_monomial(m.second);
            for (const auto& [mm, cc] : d2.terms())
                triple_add(right, m.first, mm.first, mm.second, c * cc);
        }
        if (!(left == right)) fail("coassociativity", x);

        AlgebraElement eps_left, eps_right;
        for (const auto& [m, c] : dx.terms()) {
            AlgebraElement m1 = AlgebraElement::monomial(m.first);
            AlgebraElement m2 = AlgebraElement::monomial(m.second);
            eps_left += m2.scaled(c * counit(m1));
            eps_right += m1.scaled(c * counit(m2));
        }
        if (!(eps_left == x)) fail("left counit law", x);
        if (!(eps_right == x)) fail("right counit law", x);

        AlgebraElement anti_left, anti_right;
        for (const auto& [m, c] : dx.terms()) {
            AlgebraElement m1 = AlgebraElement::monomial(m.first);
            AlgebraElement m2 = AlgebraElement::monomial(m.second);
            anti_left += (antipode(m1) * m2).scaled(c);
            anti_right += (m1 * antipode(m2)).scaled(c);
        }
        AlgebraElement eps_x = AlgebraElement::one().scaled(counit(x));
        if (!(anti_left == eps_x)) fail("antipode law m(S (x) id)D", x);
        if (!(anti_right == eps_x)) fail("antipode law m(id (x) S)D", x);

        if (!verify_identity_2_1(x)) fail("splitting identity", x);
    }
    // Multiplicativity of the coproduct and anti-multiplicativity of the
    // antipode, on consecutive sample pairs.
    for (size_t i = 0; i + 1 < samples.size(); ++i) {
        const AlgebraElement& x = samples[i];
        const AlgebraElement& y = samples[i + 1];
        if (!(coproduct(x * y) == coproduct(x) * coproduct(y))) fail("coproduct homomorphism", x * y);
        if (!(antipode(x * y) == antipode(y) * antipode(x))) fail("antipode anti-homomorphism", x * y);
    }
    return report;
}

}  // namespace qsl2
