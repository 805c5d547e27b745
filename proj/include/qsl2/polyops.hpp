#pragma once

#include <utility>
#include <vector>

#include "qsl2/laurent.hpp"

namespace qsl2 {

// Dense univariate polynomial utilities over the rationals.  Coefficient
// vectors are indexed by exponent and kept trimmed (no trailing zeros, empty
// vector == zero polynomial).

using Dense = std::vector<Rat>;

Dense dense_from(const LaurentPoly& p);          // requires valuation(p) >= 0
LaurentPoly laurent_from(const Dense& p);
void dense_trim(Dense& p);
Dense dense_mul(const Dense& a, const Dense& b);
// Euclidean division; returns {quotient, remainder}.
std::pair<Dense, Dense> dense_divmod(const Dense& a, const Dense& b);
Dense dense_derivative(const Dense& p);
// Monic gcd (returns {1} for coprime inputs, empty only if both are zero).
Dense dense_gcd(Dense a, Dense b);
// Square-free decomposition p = lead * prod_i out[i]^{i+1} with out[i] monic.
std::vector<Dense> dense_squarefree(const Dense& p);

}  // namespace qsl2
