#include "qsl2/parse.hpp"

#include <cctype>
#include <string>

#include "qsl2/errors.hpp"
#include "qsl2/laurent.hpp"

namespace qsl2 {

namespace {

struct Parser {
  const std::string& src;
  size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }

  long parse_long() {
    skip_ws();
    size_t start = pos;
    bool neg = false;
    if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
      neg = src[pos] == '-';
      ++pos;
    }
    if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
      throw ParseError("expected integer", pos);
    long v = 0;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      v = v * 10 + (src[pos] - '0');
      if (v > 1000000000L) throw ParseError("integer too large", start);
      ++pos;
    }
    return neg ? -v : v;
  }

  std::string read_word() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
    return src.substr(start, pos - start);
  }

  // Inverts elements that have an inverse in the algebra: scalars (with a
  // single-radical coefficient) and scalar multiples of powers of k.
  AlgebraElement invert(const AlgebraElement& x, size_t at) {
    if (x.terms().size() != 1)
      throw ParseError("cannot invert a sum", at);
    const auto& [mono, coeff] = *x.terms().begin();
    if (mono.e_pow != 0 || mono.f_pow != 0)
      throw ParseError("cannot invert e or f", at);
    RadicalScalar inv_coeff;
    try {
      inv_coeff = coeff.inverse();
    } catch (const ScalarError&) {
      throw ParseError("coefficient is not invertible", at);
    }
    Monomial m{0, 0, -mono.k_pow};
    AlgebraElement out = AlgebraElement::zero();
    out.add_term(m, inv_coeff);
    return out;
  }

  AlgebraElement parse_atom() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("unexpected end of input", pos);
    char c = src[pos];
    if (c == '(') {
      ++pos;
      AlgebraElement inner = parse_element();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos;
      long n = parse_long();
      expect(']');
      return AlgebraElement::one().scaled(RadicalScalar(RatFunc(qint(n))));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long v = parse_long();
      return AlgebraElement::one().scaled(RadicalScalar(RatFunc(Rat(v))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t at = pos;
      std::string w = read_word();
      if (w == "e") return AlgebraElement::e();
      if (w == "f") return AlgebraElement::f();
      if (w == "k") return AlgebraElement::k(1);
      if (w == "t")
        return AlgebraElement::one().scaled(RadicalScalar(RatFunc::t_power(1)));
      if (w == "sqrt") {
        expect('(');
        size_t arg_at = pos;
        AlgebraElement inner = parse_element();
        expect(')');
        if (!inner.is_scalar())
          throw ParseError("sqrt argument must be a scalar", arg_at);
        RadicalScalar s = inner.scalar_part();
        if (!s.is_rational())
          throw ParseError("sqrt argument must be radical-free", arg_at);
        return AlgebraElement::one().scaled(RadicalScalar::sqrt_of(s.as_ratfunc()));
      }
      throw ParseError("unknown symbol '" + w + "'", at);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  AlgebraElement parse_factor() {
    AlgebraElement base = parse_atom();
    skip_ws();
    if (pos < src.size() && src[pos] == '^') {
      size_t at = pos;
      ++pos;
      long n = parse_long();
      if (n >= 0) return base.pow(static_cast<unsigned long>(n));
      AlgebraElement inv = invert(base, at);
      return inv.pow(static_cast<unsigned long>(-n));
    }
    return base;
  }

  AlgebraElement parse_term() {
    AlgebraElement acc = parse_factor();
    for (;;) {
      skip_ws();
      if (pos < src.size() && src[pos] == '*') {
        ++pos;
        acc = acc * parse_factor();
      } else if (pos < src.size() && src[pos] == '/') {
        size_t at = pos;
        ++pos;
        acc = acc * invert(parse_factor(), at);
      } else {
        return acc;
      }
    }
  }

  AlgebraElement parse_element() {
    skip_ws();
    bool neg = false;
    if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
      neg = src[pos] == '-';
      ++pos;
    }
    AlgebraElement acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (pos < src.size() && src[pos] == '+') {
        ++pos;
        acc = acc + parse_term();
      } else if (pos < src.size() && src[pos] == '-') {
        ++pos;
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

AlgebraElement parse_element(const std::string& src) {
  Parser p(src);
  AlgebraElement out = p.parse_element();
  if (!p.at_end())
    throw ParseError("trailing input", p.pos);
  return out;
}

}  // namespace qsl2
