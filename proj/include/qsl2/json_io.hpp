#pragma once

#include <string>

#include <json.hpp>

#include "qsl2/algebra.hpp"
#include "qsl2/halfint.hpp"
#include "qsl2/laurent.hpp"
#include "qsl2/radical.hpp"
#include "qsl2/ratfunc.hpp"

namespace qsl2 {

using Json = nlohmann::ordered_json;

// Laurent polynomial as {"<exponent>": "<rational>"} with ascending exponents.
inline Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [exp, c] : p.terms()) j[std::to_string(exp)] = rat_to_string(c);
  return j;
}

inline Json to_json(const RatFunc& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

// Radical scalars as a list of {coeff, radicand} terms.
inline Json to_json(const RadicalScalar& s) {
  Json j = Json::array();
  for (const auto& term : s.terms())
    j.push_back(Json{{"coeff", to_json(term.coeff)}, {"radicand", to_json(term.radicand)}});
  return j;
}

inline Json to_json(const AlgebraElement& x) {
  Json j = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    j.push_back(Json{{"monomial", it->first.str()}, {"coeff", to_json(it->second)}});
  return j;
}

inline Json to_json(const TensorElement& x) {
  Json j = Json::array();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
    j.push_back(Json{{"left", it->first.first.str()},
                     {"right", it->first.second.str()},
                     {"coeff", to_json(it->second)}});
  return j;
}

}  // namespace qsl2
