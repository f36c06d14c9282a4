#include "dgli/vtable.hpp"

#include <stdexcept>

namespace dgli {
namespace {

const Rational kZero;

bool in_band(int n, int k) { return k >= 0 && 2 * k <= n; }

}  // namespace

VTable::VTable(int max_n) {
  if (max_n < 0) throw std::invalid_argument("VTable needs max_n >= 0");
  rows_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    auto& row = rows_[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n / 2) + 1);
    row[0] = n == 0 ? Rational(1) : Rational(1, 2);
    for (int k = 1; 2 * k <= n; ++k) {
      row[static_cast<std::size_t>(k)] = at(n - 1, k) - at(n - 2, k - 1);
    }
  }
}

const Rational& VTable::at(int n, int k) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("VTable row out of range");
  if (!in_band(n, k)) return kZero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Rational VTable::sigma(int n, int k) const {
  Rational acc;
  for (int i = 0; i <= n; ++i) acc += at(i, k);
  return acc;
}

Rational VTable::diagonal_sum(int n) const {
  if (n < 0 || 2 * n > max_n()) {
    throw std::out_of_range("diagonal_sum needs rows up to 2n");
  }
  Rational acc;
  for (int k = 0; k <= n; ++k) acc += at(n + k, k);
  return acc;
}

Rational v_closed_form(int n, int k) {
  if (n < 0) throw std::domain_error("v_closed_form needs n >= 0");
  Integer twice = binomial_ext(n - k, k) + binomial_ext(n - k - 1, k - 1);
  Rational r = Rational(twice) / Rational(2);
  return (k % 2 != 0) ? -r : r;
}

Integer f_iter(int k, long n) {
  if (k < 0 || n < 1) throw std::invalid_argument("f_iter needs k >= 0, n >= 1");
  std::vector<Integer> row(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = i + 1;
  for (int pass = 0; pass < k; ++pass) {
    for (std::size_t i = 1; i < row.size(); ++i) row[i] += row[i - 1];
  }
  return row.back();
}

bool column_sum_identity_holds(const VTable& table, int n, int k) {
  if (n < 2 || k < 1) return false;
  return table.at(n, k) == -table.sigma(n - 2, k - 1);
}

bool iterated_sum_identity_holds(int k, long n) {
  return f_iter(k + 1, n) == binomial_ext(n + k + 1, k + 2);
}

}  // namespace dgli
