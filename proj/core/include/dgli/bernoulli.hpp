#pragma once

#include <cstddef>
#include <vector>

#include "dgli/rational.hpp"

namespace dgli {

// Bernoulli numbers in the convention generated by z / (e^z - 1),
// i.e. B_1 = -1/2 and B_{2k+1} = 0 for k >= 1.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t max_index);

  std::size_t max_index() const { return values_.size() - 1; }
  const Rational& at(std::size_t n) const;

 private:
  std::vector<Rational> values_;
};

Rational bernoulli(std::size_t n);

}  // namespace dgli
