#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qsl2/algebra.hpp"
#include "qsl2/clebsch.hpp"
#include "qsl2/halfint.hpp"
#include "qsl2/rep.hpp"

namespace qsl2 {

// The (2l+1)-dimensional orbit of e^l k^{-l} under the adjoint action.
// mu_m is the raw orbit, lambda_m = sqrt([l+m]!/([2l]![l-m]!)) mu_m is the
// unit-normalized basis; mu coefficients stay radical-free.
struct AdjointBasis {
  long l = 0;
  std::map<long, AlgebraElement> lambda;
  std::map<long, AlgebraElement> mu;
};

// mu_l = e^l k^{-l}, mu_{m-1} = ad_f(mu_m).
AdjointBasis adjoint_orbit(long l);

// Same basis from the explicit normal-ordered expansion (sum over powers of
// e and f with q-factorial coefficients and products of [k+s] factors).
AdjointBasis adjoint_orbit_closed_form(long l);

// ad_e(mu_m) = [l-m][l+m+1] mu_{m+1}, ad_f(mu_m) = mu_{m-1},
// ad_{k^{+-1}}(mu_m) = t^{+-2m} mu_m, all exact.
bool verify_orbit_relations(const AdjointBasis& basis);

// Family of maps V^w -> V^j indexed by the carrier weight m = -l..l.
struct TensorOperator {
  long carrier_l = 0;
  HalfInt source_w;
  HalfInt target_j;
  std::map<long, ScalarMatrix> components;
};

// Components m -> image of lambda_m^l in the spin-j representation.
TensorOperator tensor_operator_from_rep(long l, HalfInt j);

// Componentwise equivariance: sum_n pi^l(a)_{nm} T_n =
// sum pi^j(a^(1)) T_m pi^w(S(a^(2))) for probe elements a.
bool check_tensor_operator(const TensorOperator& T);

// Invariance under the combined action on Hom(V^carrier, Hom(V^w, V^j)):
// eps(a) T_m = sum pi^j(a^(1)) [sum_n pi^l(S(a^(3)))_{nm} T_n] pi^w(S(a^(2))).
bool check_epsilon_invariance(const TensorOperator& T);

// The flattened map V^l (x) V^w -> V^j built by stacking components must
// intertwine the tensor action with pi^j.
bool check_hat_intertwiner(const TensorOperator& T);

struct ReducedME {
  RadicalScalar alpha;
  bool consistent = false;
  // (m, p, n) triples where cross-multiplication failed or where both the
  // operator entry and the coupling coefficient vanish (no information).
  std::vector<std::tuple<HalfInt, HalfInt, HalfInt>> witnesses;
};

// Extracts alpha from T(lambda_p)_{mn} = alpha (lp, wn | jm) by exact
// cross-multiplication against the first index triple with a nonzero
// coupling coefficient.
ReducedME reduced_matrix_element(const TensorOperator& T, const CGTable& cg);

// t^{l(l+1)} [l]! sqrt([2j+l+1]!/([2l]![2j-l]![2j+1]!)).
RadicalScalar reduced_me_closed_form(long l, HalfInt j);

// C = sum_m (jm, j(-m) | 00) lambda_m^j lambda_{-m}^j with the invariant
// coupler; commutes with the whole algebra.
AlgebraElement central_element(long j);

// x g = g x and ad_g(x) = eps(g) x for g in {e, f, k, k^-1}.
bool verify_central(const AlgebraElement& x);

}  // namespace qsl2
