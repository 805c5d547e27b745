#include "qsl2/laurent.hpp"

#include <sstream>

namespace qsl2 {

void LaurentPoly::insert_term(long exp, const Rat& c) {
    if (c == 0) return;
    auto it = coeff_.find(exp);
    if (it == coeff_.end()) {
        coeff_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second == 0) coeff_.erase(it);
    }
}

bool LaurentPoly::is_one() const {
    return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
}

long LaurentPoly::valuation() const {
    if (is_zero()) throw ScalarError("valuation of zero polynomial");
    return coeff_.begin()->first;
}

long LaurentPoly::degree() const {
    if (is_zero()) throw ScalarError("degree of zero polynomial");
    return coeff_.rbegin()->first;
}

const Rat& LaurentPoly::leading_coeff() const {
    if (is_zero()) throw ScalarError("leading coefficient of zero polynomial");
    return coeff_.rbegin()->second;
}

Rat LaurentPoly::coeff_at(long exp) const {
    auto it = coeff_.find(exp);
    return it == coeff_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(long by) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeff_) r.coeff_.emplace(e + by, c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coeff_) r.insert_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.coeff_) r.insert_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.coeff_)
        for (const auto& [eb, cb] : b.coeff_) r.insert_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeff_) r.coeff_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
    LaurentPoly acc(1), base = *this;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rat LaurentPoly::eval(const Rat& t0) const {
    Rat acc(0);
    for (const auto& [e, c] : coeff_) {
        if (e < 0 && t0 == 0) throw PoleError("t^negative at t = 0");
        acc += c * rat_pow(t0, e);
    }
    return acc;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.coeff_.begin(), ib = b.coeff_.begin();
    for (; ia != a.coeff_.end() && ib != b.coeff_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.coeff_.end()) return 1;
    if (ib != b.coeff_.end()) return -1;
    return 0;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeff_) r.coeff_.emplace(-e, c);
    return r;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest power first.
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
        Rat c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        long e = it->first;
        if (e == 0) {
            out << rat_to_string(c);
        } else {
            if (c != 1) out << rat_to_string(c) << "*";
            out << "t";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly qint(long n) {
    // [n] = t^{2(n-1)} + t^{2(n-3)} + ... + t^{-2(n-1)};  [-n] = -[n].
    if (n == 0) return LaurentPoly();
    long a = n > 0 ? n : -n;
    LaurentPoly p;
    for (long i = 0; i < a; ++i) p += LaurentPoly::t_power(2 * (a - 1 - 2 * i));
    return n > 0 ? p : -p;
}

LaurentPoly qfact(long n) {
    if (n < 0) throw ScalarError("q-factorial of a negative integer");
    LaurentPoly acc(1);
    for (long i = 2; i <= n; ++i) acc *= qint(i);
    return acc;
}

}  // namespace qsl2
