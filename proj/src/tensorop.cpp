#include "qsl2/tensorop.hpp"

#include <algorithm>

#include "qsl2/errors.hpp"
#include "qsl2/laurent.hpp"

namespace qsl2 {

namespace {

RadicalScalar orbit_prefactor(long l, long m) {
  RatFunc r = RatFunc(qfact(l + m)) *
              (RatFunc(qfact(2 * l)) * RatFunc(qfact(l - m))).inverse();
  return RadicalScalar::sqrt_of(r);
}

}  // namespace

AdjointBasis adjoint_orbit(long l) {
  if (l < 1) throw RangeError("orbit spin must be a positive integer");
  AdjointBasis basis;
  basis.l = l;
  Monomial top{static_cast<int>(l), 0, static_cast<int>(-l)};
  basis.mu[l] = AlgebraElement::monomial(top);
  AlgebraElement f = AlgebraElement::f();
  for (long m = l; m > -l; --m)
    basis.mu[m - 1] = adjoint_action(f, basis.mu[m]);
  for (long m = -l; m <= l; ++m)
    basis.lambda[m] = basis.mu[m].scaled(orbit_prefactor(l, m));
  return basis;
}

AdjointBasis adjoint_orbit_closed_form(long l) {
  if (l < 1) throw RangeError("orbit spin must be a positive integer");
  AdjointBasis basis;
  basis.l = l;
  RatFunc tden(LaurentPoly::t_power(2) - LaurentPoly::t_power(-2));
  for (long m = -l; m <= l; ++m) {
    long N = std::min(l, l - m);
    AlgebraElement sum;
    for (long p = 0; p <= N; ++p) {
      RatFunc outer = RatFunc(qfact(l)) * RatFunc(qfact(l - m)) *
                      (RatFunc(qfact(p)) * RatFunc(qfact(l - p))).inverse();
      if (p % 2 != 0) outer = -outer;
      AlgebraElement inner;
      for (long i = 0; i + p <= l - m; ++i) {
        RatFunc ci = RatFunc::t_power(2 * i * (1 + l + m)) *
                     (RatFunc(qfact(i)) * RatFunc(qfact(l - m - i - p))).inverse();
        if (i % 2 != 0) ci = -ci;
        AlgebraElement prod = AlgebraElement::one();
        for (long s = m - i; s <= m + p - i - 1; ++s) prod *= bracket_of_k(s);
        inner += prod.scaled(RadicalScalar(ci));
      }
      Monomial word{static_cast<int>(l - p), static_cast<int>(l - m - p), 0};
      sum += (AlgebraElement::monomial(word) * inner).scaled(RadicalScalar(outer));
    }
    basis.mu[m] = sum * AlgebraElement::k(static_cast<int>(-m));
    basis.lambda[m] = basis.mu[m].scaled(orbit_prefactor(l, m));
  }
  return basis;
}

bool verify_orbit_relations(const AdjointBasis& basis) {
  long l = basis.l;
  AlgebraElement e = AlgebraElement::e();
  AlgebraElement f = AlgebraElement::f();
  AlgebraElement k = AlgebraElement::k(1);
  AlgebraElement kinv = AlgebraElement::k(-1);
  for (long m = -l; m <= l; ++m) {
    const AlgebraElement& mu = basis.mu.at(m);
    AlgebraElement up = adjoint_action(e, mu);
    if (m == l) {
      if (!up.is_zero()) return false;
    } else {
      RatFunc c = RatFunc(qint(l - m)) * RatFunc(qint(l + m + 1));
      if (!(up - basis.mu.at(m + 1).scaled(RadicalScalar(c))).is_zero()) return false;
    }
    AlgebraElement down = adjoint_action(f, mu);
    if (m == -l) {
      if (!down.is_zero()) return false;
    } else {
      if (!(down - basis.mu.at(m - 1)).is_zero()) return false;
    }
    if (!(adjoint_action(k, mu) - mu.scaled(RadicalScalar::t_power(2 * m))).is_zero())
      return false;
    if (!(adjoint_action(kinv, mu) - mu.scaled(RadicalScalar::t_power(-2 * m))).is_zero())
      return false;
  }
  return true;
}

namespace {

std::vector<AlgebraElement> probe_elements() {
  AlgebraElement e = AlgebraElement::e();
  AlgebraElement f = AlgebraElement::f();
  AlgebraElement k = AlgebraElement::k(1);
  AlgebraElement kinv = AlgebraElement::k(-1);
  return {e, f, k, kinv, e * f * k};
}

void check_shapes(const TensorOperator& T) {
  size_t rows = dim_of_spin(T.target_j);
  size_t cols = dim_of_spin(T.source_w);
  for (long m = -T.carrier_l; m <= T.carrier_l; ++m) {
    auto it = T.components.find(m);
    if (it == T.components.end() || it->second.rows() != rows ||
        it->second.cols() != cols)
      throw ScalarError("tensor operator component shape mismatch");
  }
}

ScalarMatrix mono_rep(const HalfInt& spin, const Monomial& m) {
  return rep_of_element(spin, AlgebraElement::monomial(m));
}

}  // namespace

TensorOperator tensor_operator_from_rep(long l, HalfInt j) {
  TensorOperator T;
  T.carrier_l = l;
  T.source_w = j;
  T.target_j = j;
  AdjointBasis basis = adjoint_orbit(l);
  for (long m = -l; m <= l; ++m)
    T.components[m] = rep_of_element(j, basis.lambda.at(m));
  return T;
}

bool check_tensor_operator(const TensorOperator& T) {
  check_shapes(T);
  HalfInt lspin(static_cast<int>(T.carrier_l));
  size_t rows = dim_of_spin(T.target_j);
  size_t cols = dim_of_spin(T.source_w);
  for (const AlgebraElement& a : probe_elements()) {
    ScalarMatrix carrier = rep_of_element(lspin, a);
    TensorElement da = coproduct(a);
    for (long m = -T.carrier_l; m <= T.carrier_l; ++m) {
      size_t col = weight_index(lspin, HalfInt(static_cast<int>(m)));
      ScalarMatrix lhs(rows, cols);
      for (long n = -T.carrier_l; n <= T.carrier_l; ++n) {
        size_t row = weight_index(lspin, HalfInt(static_cast<int>(n)));
        const RadicalScalar& c = carrier.at(row, col);
        if (c.is_zero()) continue;
        lhs = lhs + T.components.at(n).scaled(c);
      }
      ScalarMatrix rhs(rows, cols);
      for (const auto& [legs, c] : da.terms()) {
        ScalarMatrix left = mono_rep(T.target_j, legs.first);
        ScalarMatrix right =
            rep_of_element(T.source_w, antipode(AlgebraElement::monomial(legs.second)));
        rhs = rhs + (left * T.components.at(m) * right).scaled(c);
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

bool check_epsilon_invariance(const TensorOperator& T) {
  check_shapes(T);
  HalfInt lspin(static_cast<int>(T.carrier_l));
  size_t rows = dim_of_spin(T.target_j);
  size_t cols = dim_of_spin(T.source_w);
  for (const AlgebraElement& a : probe_elements()) {
    RadicalScalar eps = counit(a);
    TensorElement da = coproduct(a);
    for (long m = -T.carrier_l; m <= T.carrier_l; ++m) {
      size_t col = weight_index(lspin, HalfInt(static_cast<int>(m)));
      ScalarMatrix rhs(rows, cols);
      for (const auto& [legs, c] : da.terms()) {
        ScalarMatrix carrier =
            rep_of_element(lspin, antipode(AlgebraElement::monomial(legs.second)));
        ScalarMatrix inner_sum(rows, cols);
        for (long n = -T.carrier_l; n <= T.carrier_l; ++n) {
          size_t row = weight_index(lspin, HalfInt(static_cast<int>(n)));
          const RadicalScalar& cv = carrier.at(row, col);
          if (cv.is_zero()) continue;
          inner_sum = inner_sum + T.components.at(n).scaled(cv);
        }
        TensorElement dd = coproduct(AlgebraElement::monomial(legs.first));
        for (const auto& [inner_legs, c2] : dd.terms()) {
          ScalarMatrix left = mono_rep(T.target_j, inner_legs.first);
          ScalarMatrix right = rep_of_element(
              T.source_w, antipode(AlgebraElement::monomial(inner_legs.second)));
          rhs = rhs + (left * inner_sum * right).scaled(c * c2);
        }
      }
      if (!(rhs == T.components.at(m).scaled(eps))) return false;
    }
  }
  return true;
}

bool check_hat_intertwiner(const TensorOperator& T) {
  check_shapes(T);
  HalfInt lspin(static_cast<int>(T.carrier_l));
  size_t dl = dim_of_spin(lspin);
  size_t dw = dim_of_spin(T.source_w);
  size_t dj = dim_of_spin(T.target_j);
  ScalarMatrix hat(dj, dl * dw);
  for (long m = -T.carrier_l; m <= T.carrier_l; ++m) {
    size_t block = weight_index(lspin, HalfInt(static_cast<int>(m)));
    const ScalarMatrix& comp = T.components.at(m);
    for (size_t r = 0; r < dj; ++r)
      for (size_t c = 0; c < dw; ++c) hat.at(r, block * dw + c) = comp.at(r, c);
  }
  for (const AlgebraElement& a : probe_elements()) {
    ScalarMatrix lhs = hat * tensor_rep_of_element(lspin, T.source_w, a);
    ScalarMatrix rhs = rep_of_element(T.target_j, a) * hat;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ReducedME reduced_matrix_element(const TensorOperator& T, const CGTable& cg) {
  check_shapes(T);
  HalfInt lspin(static_cast<int>(T.carrier_l));
  if (cg.spin_k().twice() != lspin.twice() || cg.spin_l().twice() != T.source_w.twice())
    throw RangeError("coupling table spins do not match the operator");
  HalfInt j = T.target_j;
  HalfInt w = T.source_w;
  int lo = std::abs(lspin.twice() - w.twice());
  int hi = lspin.twice() + w.twice();
  if (j.twice() < lo || j.twice() > hi || (j.twice() - lo) % 2 != 0)
    throw RangeError("target spin not in the decomposition");

  ReducedME out;
  bool have_ref = false;
  RadicalScalar t_ref, cg_ref;
  for (long pm = -T.carrier_l; pm <= T.carrier_l && !have_ref; ++pm) {
    HalfInt p(static_cast<int>(pm));
    for (int rm = j.twice(); rm >= -j.twice() && !have_ref; rm -= 2) {
      HalfInt m = HalfInt::from_twice(rm);
      HalfInt n = m - p;
      if (std::abs(n.twice()) > w.twice()) continue;
      RadicalScalar cgv = cg.get(j, p, n, m);
      if (cgv.is_zero()) continue;
      t_ref = T.components.at(pm).at(weight_index(j, m), weight_index(w, n));
      cg_ref = cgv;
      have_ref = true;
    }
  }
  if (!have_ref) throw RangeError("target spin not in the decomposition");

  out.consistent = true;
  for (long pm = -T.carrier_l; pm <= T.carrier_l; ++pm) {
    HalfInt p(static_cast<int>(pm));
    const ScalarMatrix& comp = T.components.at(pm);
    for (int rm = j.twice(); rm >= -j.twice(); rm -= 2) {
      HalfInt m = HalfInt::from_twice(rm);
      for (int rn = w.twice(); rn >= -w.twice(); rn -= 2) {
        HalfInt n = HalfInt::from_twice(rn);
        const RadicalScalar& tv = comp.at(weight_index(j, m), weight_index(w, n));
        RadicalScalar cgv = cg.get(j, p, n, m);
        if (cgv.is_zero()) {
          if (!tv.is_zero()) {
            out.consistent = false;
            out.witnesses.emplace_back(m, p, n);
          } else if ((p + n).twice() == m.twice()) {
            out.witnesses.emplace_back(m, p, n);
          }
          continue;
        }
        if (!(tv * cg_ref - t_ref * cgv).is_zero()) {
          out.consistent = false;
          out.witnesses.emplace_back(m, p, n);
        }
      }
    }
  }
  out.alpha = t_ref * cg_ref.inverse();
  return out;
}

RadicalScalar reduced_me_closed_form(long l, HalfInt j) {
  if (l < 1) throw RangeError("orbit spin must be a positive integer");
  if (j.twice() < l) throw RangeError("orbit does not act on this spin");
  long twoj = j.twice();
  RatFunc r = RatFunc(qfact(twoj + l + 1)) *
              (RatFunc(qfact(2 * l)) * RatFunc(qfact(twoj - l)) * RatFunc(qfact(twoj + 1)))
                  .inverse();
  return RadicalScalar(RatFunc::t_power(l * (l + 1))) *
         RadicalScalar(RatFunc(qfact(l))) * RadicalScalar::sqrt_of(r);
}

AlgebraElement central_element(long j) {
  if (j < 1) throw RangeError("orbit spin must be a positive integer");
  AdjointBasis basis = adjoint_orbit(j);
  HalfInt js(static_cast<int>(j));
  AlgebraElement out;
  for (long m = -j; m <= j; ++m) {
    RadicalScalar c =
        cg_invariant_00(js, HalfInt(static_cast<int>(m)), HalfInt(static_cast<int>(-m)));
    out += (basis.lambda.at(m) * basis.lambda.at(-m)).scaled(c);
  }
  return out;
}

bool verify_central(const AlgebraElement& x) {
  std::vector<AlgebraElement> gens = {AlgebraElement::e(), AlgebraElement::f(),
                                      AlgebraElement::k(1), AlgebraElement::k(-1)};
  for (const AlgebraElement& g : gens) {
    if (!(x * g - g * x).is_zero()) return false;
    if (!(adjoint_action(g, x) - x.scaled(counit(g))).is_zero()) return false;
  }
  return true;
}

}  // namespace qsl2
