#include "dgli/bernoulli.hpp"

#include <stdexcept>

namespace dgli {

BernoulliTable::BernoulliTable(std::size_t max_index) {
  values_.reserve(max_index + 1);
  values_.emplace_back(1);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1, solved for B_n.
  for (std::size_t n = 1; n <= max_index; ++n) {
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) {
      acc += Rational(binomial_ext(static_cast<long>(n) + 1,
                                   static_cast<long>(j))) *
             values_[j];
    }
    values_.push_back(-acc / Rational(static_cast<long>(n) + 1));
  }
}

const Rational& BernoulliTable::at(std::size_t n) const {
  if (n >= values_.size()) {
    throw std::out_of_range("Bernoulli index beyond table size");
  }
  return values_[n];
}

Rational bernoulli(std::size_t n) { return BernoulliTable(n).at(n); }

}  // namespace dgli
