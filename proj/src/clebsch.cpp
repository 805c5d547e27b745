#include "qsl2/clebsch.hpp"

#include <algorithm>

#include "qsl2/errors.hpp"
#include "qsl2/laurent.hpp"
#include "qsl2/rep.hpp"

namespace qsl2 {

namespace {

bool in_triangle(HalfInt k, HalfInt l, HalfInt j) {
  int lo = std::abs(k.twice() - l.twice());
  int hi = k.twice() + l.twice();
  return j.twice() >= lo && j.twice() <= hi && (j.twice() - lo) % 2 == 0;
}

std::vector<RadicalScalar> mat_apply(const ScalarMatrix& a,
                                 const std::vector<RadicalScalar>& v) {
  std::vector<RadicalScalar> out(a.rows());
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c) {
      if (a.at(r, c).is_zero() || v[c].is_zero()) continue;
      out[r] = out[r] + a.at(r, c) * v[c];
    }
  return out;
}

}  // namespace

std::vector<HalfInt> CGTable::target_spins() const {
  std::vector<HalfInt> out;
  for (int tw = std::abs(k_.twice() - l_.twice()); tw <= k_.twice() + l_.twice(); tw += 2)
    out.push_back(HalfInt::from_twice(tw));
  return out;
}

const std::vector<RadicalScalar>& CGTable::column(HalfInt j, HalfInt m) const {
  auto it = columns_.find({j.twice(), m.twice()});
  if (it == columns_.end()) throw RangeError("no such (j, m) block in table");
  return it->second;
}

RadicalScalar CGTable::get(HalfInt j, HalfInt p, HalfInt n, HalfInt m) const {
  if ((p + n).twice() != m.twice()) return RadicalScalar();
  if (std::abs(p.twice()) > k_.twice() || std::abs(n.twice()) > l_.twice())
    return RadicalScalar();
  if ((k_.twice() - p.twice()) % 2 != 0 || (l_.twice() - n.twice()) % 2 != 0)
    return RadicalScalar();
  auto it = columns_.find({j.twice(), m.twice()});
  if (it == columns_.end()) return RadicalScalar();
  size_t idx = static_cast<size_t>(weight_index(k_, p)) * dim_of_spin(l_) +
               weight_index(l_, n);
  return it->second[idx];
}

void CGTable::set_column(HalfInt j, HalfInt m, std::vector<RadicalScalar> v) {
  columns_[{j.twice(), m.twice()}] = std::move(v);
}

std::vector<RadicalScalar> cg_highest(HalfInt k, HalfInt l, HalfInt j) {
  if (!in_triangle(k, l, j))
    throw RangeError("target spin outside the decomposition range");
  // |j,j> = sum_p c_p e_p (x) e_{j-p}; annihilation by the tensor action of e
  // pins c_p / c_{p+1}.
  HalfInt p_max = std::min(k, j + l);
  HalfInt p_min = std::max(-k, j - l);
  std::map<int, RadicalScalar> c;
  c[p_max.twice()] = RadicalScalar(1);
  for (HalfInt p = p_max - HalfInt(1); p.twice() >= p_min.twice(); p = p - HalfInt(1)) {
    HalfInt p1 = p + HalfInt(1);
    long a = (k - p).as_int();
    long b = (k + p).as_int() + 1;
    long u = (l - j + p).as_int() + 1;
    long v = (l + j - p).as_int();
    RadicalScalar num = RadicalScalar::t_power(j.twice() + 2) *
                        RadicalScalar::sqrt_of(RatFunc(qint(u) * qint(v)));
    RadicalScalar den = RadicalScalar::sqrt_of(RatFunc(qint(a) * qint(b)));
    c[p.twice()] = -(c[p1.twice()] * num * den.inverse());
  }
  RadicalScalar norm2;
  for (const auto& [tw, cv] : c) norm2 += cv * cv;
  RadicalScalar scale = RadicalScalar::sqrt_of(norm2.as_ratfunc().inverse());
  std::vector<RadicalScalar> out(static_cast<size_t>(dim_of_spin(k)) * dim_of_spin(l));
  for (const auto& [tw, cv] : c) {
    HalfInt p = HalfInt::from_twice(tw);
    HalfInt n = j - p;
    out[static_cast<size_t>(weight_index(k, p)) * dim_of_spin(l) + weight_index(l, n)] =
        cv * scale;
  }
  int top = out[static_cast<size_t>(weight_index(k, p_max)) * dim_of_spin(l) +
                weight_index(l, j - p_max)]
                .sign_at(Rat(2));
  if (top < 0)
    for (auto& x : out) x = -x;
  return out;
}

CGTable cg_table(HalfInt k, HalfInt l) {
  CGTable table(k, l);
  ScalarMatrix lower = tensor_rep_of_element(k, l, AlgebraElement::f());
  for (HalfInt j : table.target_spins()) {
    std::vector<RadicalScalar> v = cg_highest(k, l, j);
    table.set_column(j, j, v);
    for (HalfInt m = j; m.twice() > -j.twice(); m = m - HalfInt(1)) {
      long a = (j + m).as_int();
      long b = (j - m).as_int() + 1;
      RadicalScalar inv_norm =
          RadicalScalar::sqrt_of(RatFunc(qint(a) * qint(b))).inverse();
      v = mat_apply(lower, v);
      for (auto& x : v) x = x * inv_norm;
      table.set_column(j, m - HalfInt(1), v);
    }
  }
  return table;
}

namespace {

RadicalScalar inv_sqrt_bracket(long n) {
  return RadicalScalar::sqrt_of(RatFunc(qint(n)).inverse());
}

}  // namespace

RadicalScalar cg_special_00(HalfInt j, HalfInt m, HalfInt n) {
  if ((m + n).twice() != 0 || std::abs(m.twice()) > j.twice() ||
      (j.twice() - m.twice()) % 2 != 0)
    return RadicalScalar();
  RadicalScalar out = RadicalScalar::t_power(m.twice()) * inv_sqrt_bracket(j.twice() + 1);
  if ((j - m).as_int() % 2 != 0) out = -out;
  return out;
}

RadicalScalar cg_invariant_00(HalfInt j, HalfInt m, HalfInt n) {
  if ((m + n).twice() != 0 || std::abs(m.twice()) > j.twice() ||
      (j.twice() - m.twice()) % 2 != 0)
    return RadicalScalar();
  RadicalScalar out = RadicalScalar::t_power(-m.twice()) * inv_sqrt_bracket(j.twice() + 1);
  if ((j - m).as_int() % 2 != 0) out = -out;
  return out;
}

RadicalScalar cg_special_ll(long l, HalfInt j, HalfInt m, HalfInt n) {
  if (l < 0) throw RangeError("carrier spin must be a non-negative integer");
  if ((m - n).twice() != 2 * l) return RadicalScalar();
  if (std::abs(m.twice()) > j.twice() || std::abs(n.twice()) > j.twice())
    return RadicalScalar();
  if ((j - m).twice() % 2 != 0) return RadicalScalar();
  long jm = (j + m).as_int();        // [j+m]!
  long jmm = (j - m).as_int();       // [j-m]!
  long twojml = j.twice() - l;       // 2j - l
  if (jm - l < 0 || twojml < 0) return RadicalScalar();
  long expo = -(-l * (l + 1) + (m.twice() + 2) * l);  // -{-l(l+1)+2(m+1)l}
  RatFunc num = RatFunc(qint(j.twice() + 1)) * RatFunc(qfact(2 * l)) *
                RatFunc(qfact(twojml)) * RatFunc(qfact(jm)) * RatFunc(qfact(jmm + l));
  RatFunc den = RatFunc(qfact(j.twice() + l + 1)) * RatFunc(qfact(l)) *
                RatFunc(qfact(l)) * RatFunc(qfact(jmm)) * RatFunc(qfact(jm - l));
  return RadicalScalar::t_power(expo) * RadicalScalar::sqrt_of(num * den.inverse());
}

}  // namespace qsl2
