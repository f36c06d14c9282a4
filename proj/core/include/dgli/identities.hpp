#pragma once

#include "dgli/bernoulli.hpp"
#include "dgli/vtable.hpp"

namespace dgli {

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

// Euler's quadratic relation, for even n > 2:
//   -(n+1) B_n / n! = sum_{k=2}^{n-2} (B_k / k!) (B_{n-k} / (n-k)!).
IdentitySides euler_identity_sides(const BernoulliTable& table, int n);
bool euler_identity_holds(const BernoulliTable& table, int n);

// Mixed Bernoulli / v relation, for even n > 2 and 0 <= k <= (n-1)/2:
//   -(B_n / n!) sigma(n-1, k) =
//       sum_{2 <= i < n/2, k < i}  (B_i/i!)(B_{n-i}/(n-i)!) sum_{l=0}^{i} v(l, k-i+l)
//     + sum_{2 <= i < n/2, k >= i} (B_i/i!)(B_{n-i}/(n-i)!) sum_{l=0}^{n-2i-1} v(l, k-i)
//     + sum_{n/2 <= i <= n-2}      (B_i/i!)(B_{n-i}/(n-i)!) sum_{l=0}^{n-i-1} v(i-l, k-l)
// The v table must cover rows up to n-1.
IdentitySides bernoulli_v_relation_sides(const BernoulliTable& bernoulli,
                                         const VTable& v, int n, int k);
bool bernoulli_v_relation_holds(const BernoulliTable& bernoulli,
                                const VTable& v, int n, int k);

}  // namespace dgli
