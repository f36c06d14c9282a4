#pragma once

#include <vector>

#include "dgli/rational.hpp"

namespace dgli {

// Triangular array v(n, k), defined for n >= 0 and 0 <= k <= n/2 by
//   v(0, 0) = 1,  v(n, 0) = 1/2 for n >= 1,
//   v(n, k) = v(n-1, k) - v(n-2, k-1)            (interior),
// and zero outside the band. The band is the exact support: whenever the
// recurrence reaches outside it, the referenced value is zero.
class VTable {
 public:
  explicit VTable(int max_n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  // Zero outside the band; throws when n is negative or beyond the table.
  const Rational& at(int n, int k) const;

  // Column partial sum sigma(n, k) = sum_{i=0}^{n} v(i, k).
  Rational sigma(int n, int k) const;

  // sum_{k=0}^{n} v(n+k, k); needs rows up to 2n.
  Rational diagonal_sum(int n) const;

 private:
  std::vector<std::vector<Rational>> rows_;
};

// 2 v(n, k) = (-1)^k (C(n-k, k) + C(n-k-1, k-1)), valid on the band.
Rational v_closed_form(int n, int k);

// Iterated partial sums of the identity sequence: f_0(n) = n and
// f_{k+1}(n) = sum_{i=1}^{n} f_k(i), for n >= 1.
Integer f_iter(int k, long n);

// v(n, k) = -sigma(n-2, k-1) for n >= 2 and k >= 1. The k = 0 column has no
// k-1 column to sum, so the identity is stated (and holds) only for k >= 1.
bool column_sum_identity_holds(const VTable& table, int n, int k);

// f_{k+1}(n) = C(n+k+1, k+2).
bool iterated_sum_identity_holds(int k, long n);

}  // namespace dgli
