#pragma once

#include <map>
#include <vector>

#include "qsl2/halfint.hpp"
#include "qsl2/radical.hpp"

namespace qsl2 {

// Coupling coefficients for V^k (x) V^l = (+)_j V^j.  Columns are stored as
// vectors over the product basis e_p (x) e_n, first factor major (index
// weight_index(k,p)*dim(l) + weight_index(l,n)).  Within each (j, m) block
// Sum_p c_p^2 = 1 and the coefficient at maximal p is positive for t > 1.
class CGTable {
 public:
  CGTable(HalfInt k, HalfInt l) : k_(k), l_(l) {}

  HalfInt spin_k() const { return k_; }
  HalfInt spin_l() const { return l_; }

  // j from |k-l| up to k+l.
  std::vector<HalfInt> target_spins() const;

  const std::vector<RadicalScalar>& column(HalfInt j, HalfInt m) const;

  // (kp, ln | jm); zero when p + n != m or any index is out of range.
  RadicalScalar get(HalfInt j, HalfInt p, HalfInt n, HalfInt m) const;

  void set_column(HalfInt j, HalfInt m, std::vector<RadicalScalar> v);

 private:
  HalfInt k_, l_;
  std::map<std::pair<int, int>, std::vector<RadicalScalar>> columns_;
};

// Highest-weight vector of the spin-j summand of V^k (x) V^l, as a product
// basis vector: the unique unit vector killed by the tensor action of e,
// top coefficient positive for t > 1.
std::vector<RadicalScalar> cg_highest(HalfInt k, HalfInt l, HalfInt j);

// Full table built by lowering each cg_highest with the tensor action of f.
CGTable cg_table(HalfInt k, HalfInt l);

// Closed form (jm, jn | 00) = (-1)^{j-m} t^{2m} / sqrt([2j+1]), zero unless
// n = -m.
RadicalScalar cg_special_00(HalfInt j, HalfInt m, HalfInt n);

// Coupler variant with the opposite weight factor, (-1)^{j-m} t^{-2m} /
// sqrt([2j+1]); this is the column produced by the recursive table.
RadicalScalar cg_invariant_00(HalfInt j, HalfInt m, HalfInt n);

// Closed form for (l l, j n | j m): a power of t times the square root of a
// ratio of q-factorials; zero unless m = n + l and all indices are in range.
RadicalScalar cg_special_ll(long l, HalfInt j, HalfInt m, HalfInt n);

}  // namespace qsl2
