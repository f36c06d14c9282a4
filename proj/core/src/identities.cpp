#include "dgli/identities.hpp"

#include <stdexcept>

namespace dgli {
namespace {

Rational over_factorial(const Rational& b, int n) {
  return b / Rational(factorial(static_cast<unsigned long>(n)));
}

void require_even_above_two(int n) {
  if (n <= 2 || n % 2 != 0) {
    throw std::domain_error("identity defined for even n > 2");
  }
}

}  // namespace

IdentitySides euler_identity_sides(const BernoulliTable& table, int n) {
  require_even_above_two(n);
  IdentitySides s;
  s.lhs = -Rational(n + 1) * over_factorial(table.at(static_cast<std::size_t>(n)), n);
  for (int k = 2; k <= n - 2; ++k) {
    s.rhs += over_factorial(table.at(static_cast<std::size_t>(k)), k) *
             over_factorial(table.at(static_cast<std::size_t>(n - k)), n - k);
  }
  return s;
}

bool euler_identity_holds(const BernoulliTable& table, int n) {
  return euler_identity_sides(table, n).holds();
}

IdentitySides bernoulli_v_relation_sides(const BernoulliTable& bernoulli,
                                         const VTable& v, int n, int k) {
  require_even_above_two(n);
  if (k < 0 || 2 * k > n - 1) {
    throw std::domain_error("relation needs 0 <= k <= (n-1)/2");
  }
  if (v.max_n() < n - 1) {
    throw std::out_of_range("v table too small for relation");
  }

  auto weight = [&](int i) {
    return over_factorial(bernoulli.at(static_cast<std::size_t>(i)), i) *
           over_factorial(bernoulli.at(static_cast<std::size_t>(n - i)), n - i);
  };

  IdentitySides s;
  s.lhs = -over_factorial(bernoulli.at(static_cast<std::size_t>(n)), n) *
          v.sigma(n - 1, k);
  for (int i = 2; 2 * i < n; ++i) {
    Rational inner;
    if (k < i) {
      for (int l = 0; l <= i; ++l) inner += v.at(l, k - i + l);
    } else {
      for (int l = 0; l <= n - 2 * i - 1; ++l) inner += v.at(l, k - i);
    }
    s.rhs += weight(i) * inner;
  }
  for (int i = n / 2; i <= n - 2; ++i) {
    Rational inner;
    for (int l = 0; l <= n - i - 1; ++l) inner += v.at(i - l, k - l);
    s.rhs += weight(i) * inner;
  }
  return s;
}

bool bernoulli_v_relation_holds(const BernoulliTable& bernoulli,
                                const VTable& v, int n, int k) {
  return bernoulli_v_relation_sides(bernoulli, v, n, k).holds();
}

}  // namespace dgli
