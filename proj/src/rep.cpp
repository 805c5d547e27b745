#include "qsl2/rep.hpp"

#include <cstdlib>
#include <sstream>

#include "qsl2/errors.hpp"
#include "qsl2/laurent.hpp"

namespace qsl2 {

ScalarMatrix ScalarMatrix::identity(size_t n) {
  ScalarMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = RadicalScalar(RatFunc(Rat(1)));
  return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ScalarError("matrix shape mismatch in addition");
  ScalarMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ScalarError("matrix shape mismatch in subtraction");
  ScalarMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_)
    throw ScalarError("matrix shape mismatch in multiplication");
  ScalarMatrix out(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t kk = 0; kk < cols_; ++kk) {
      const RadicalScalar& a = at(i, kk);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const RadicalScalar& b = o.at(kk, j);
        if (b.is_zero()) continue;
        out.at(i, j) = out.at(i, j) + a * b;
      }
    }
  return out;
}

ScalarMatrix ScalarMatrix::scaled(const RadicalScalar& s) const {
  ScalarMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix out(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] - o.data_[i]).is_zero()) return false;
  return true;
}

bool ScalarMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::vector<double>> ScalarMatrix::eval(const Rat& t0) const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_, 0.0));
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).eval(t0);
  return out;
}

std::string ScalarMatrix::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << at(r, c).str();
    }
    os << ']';
    if (r + 1 < rows_) os << '\n';
  }
  return os.str();
}

namespace {

void check_spin(const HalfInt& l) {
  if (l.twice() < 0) throw RangeError("spin must be a non-negative half-integer");
}

RadicalScalar ladder_entry(long u, long v) {
  return RadicalScalar::sqrt_of(RatFunc(qint(u) * qint(v)));
}

}  // namespace

ScalarMatrix generator_matrix(const HalfInt& l, Gen g) {
  check_spin(l);
  size_t n = dim_of_spin(l);
  ScalarMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    // column i acts on e_m with m = l - i
    long lm2 = l.twice();
    long m2 = lm2 - 2 * static_cast<long>(i);
    switch (g) {
      case Gen::E:
        if (i > 0) m.at(i - 1, i) = ladder_entry((lm2 - m2) / 2, (lm2 + m2) / 2 + 1);
        break;
      case Gen::F:
        if (i + 1 < n) m.at(i + 1, i) = ladder_entry((lm2 + m2) / 2, (lm2 - m2) / 2 + 1);
        break;
      case Gen::K:
        m.at(i, i) = RadicalScalar(RatFunc::t_power(m2));
        break;
      case Gen::KInv:
        m.at(i, i) = RadicalScalar(RatFunc::t_power(-m2));
        break;
    }
  }
  return m;
}

namespace {

ScalarMatrix monomial_matrix(const HalfInt& l, const Monomial& mono) {
  size_t n = dim_of_spin(l);
  ScalarMatrix acc = ScalarMatrix::identity(n);
  ScalarMatrix E = generator_matrix(l, Gen::E);
  for (long i = 0; i < mono.e_pow; ++i) acc = acc * E;
  ScalarMatrix F = generator_matrix(l, Gen::F);
  for (long i = 0; i < mono.f_pow; ++i) acc = acc * F;
  ScalarMatrix Kp = generator_matrix(l, mono.k_pow >= 0 ? Gen::K : Gen::KInv);
  for (long i = 0; i < std::abs(mono.k_pow); ++i) acc = acc * Kp;
  return acc;
}

}  // namespace

ScalarMatrix rep_of_element(const HalfInt& l, const AlgebraElement& x) {
  check_spin(l);
  size_t n = dim_of_spin(l);
  ScalarMatrix acc(n, n);
  for (const auto& [mono, coeff] : x.terms())
    acc = acc + monomial_matrix(l, mono).scaled(coeff);
  return acc;
}

ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
  ScalarMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i1 = 0; i1 < a.rows(); ++i1)
    for (size_t j1 = 0; j1 < a.cols(); ++j1) {
      const RadicalScalar& av = a.at(i1, j1);
      if (av.is_zero()) continue;
      for (size_t i2 = 0; i2 < b.rows(); ++i2)
        for (size_t j2 = 0; j2 < b.cols(); ++j2) {
          const RadicalScalar& bv = b.at(i2, j2);
          if (bv.is_zero()) continue;
          out.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = av * bv;
        }
    }
  return out;
}

ScalarMatrix tensor_rep_of_element(const HalfInt& k, const HalfInt& l,
                                   const AlgebraElement& x) {
  check_spin(k);
  check_spin(l);
  size_t n = dim_of_spin(k) * dim_of_spin(l);
  ScalarMatrix acc(n, n);
  TensorElement dx = coproduct(x);
  for (const auto& [legs, coeff] : dx.terms()) {
    ScalarMatrix left = monomial_matrix(k, legs.first);
    ScalarMatrix right = monomial_matrix(l, legs.second);
    acc = acc + kron(left, right).scaled(coeff);
  }
  return acc;
}

}  // namespace qsl2
