#pragma once

#include <string>
#include <vector>

#include "qsl2/algebra.hpp"
#include "qsl2/halfint.hpp"
#include "qsl2/radical.hpp"

namespace qsl2 {

// Dense matrix over RadicalScalar.
class ScalarMatrix {
 public:
  ScalarMatrix() : rows_(0), cols_(0) {}
  ScalarMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ScalarMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const RadicalScalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  RadicalScalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }

  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const RadicalScalar& s) const;
  ScalarMatrix transpose() const;

  bool operator==(const ScalarMatrix& o) const;
  bool is_zero() const;

  std::vector<std::vector<double>> eval(const Rat& t0) const;

  // One bracketed row per line.
  std::string str() const;

 private:
  size_t rows_, cols_;
  std::vector<RadicalScalar> data_;
};

enum class Gen { E, F, K, KInv };

// Irreducible representation of spin l on basis e_l, e_{l-1}, ..., e_{-l}
// (row/column i corresponds to weight m = l - i):
//   e . e_m = sqrt([l-m][l+m+1]) e_{m+1}
//   f . e_m = sqrt([l+m][l-m+1]) e_{m-1}
//   k . e_m = t^{2m} e_m
ScalarMatrix generator_matrix(const HalfInt& l, Gen g);

// Image of an arbitrary element under the spin-l representation.
ScalarMatrix rep_of_element(const HalfInt& l, const AlgebraElement& x);

// Kronecker product, first factor major: index i1*dim2 + i2.
ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b);

// Image of x on V_k (x) V_l via the coproduct.
ScalarMatrix tensor_rep_of_element(const HalfInt& k, const HalfInt& l,
                                   const AlgebraElement& x);

}  // namespace qsl2
