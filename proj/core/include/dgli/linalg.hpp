#pragma once

#include <optional>
#include <vector>

#include "dgli/element.hpp"

namespace dgli {

// Returns eta with c = eta * d when it exists: zero c gives eta = 0, and a
// nonzero c with no such eta (including d = 0) gives nullopt.
std::optional<Rational> proportionality(const Element& c, const Element& d);

// Rank of the span, by exact elimination over the word coordinates. Pivots
// are chosen on the first nonzero coordinate in word order, so the result is
// deterministic.
std::size_t rank(const std::vector<Element>& elements);

// Coordinates of target in the given span, or nullopt when it lies outside.
// When the basis is linearly independent the coordinates are unique.
std::optional<std::vector<Rational>> solve_in_span(
    const std::vector<Element>& basis, const Element& target);

// Basis of the coefficient vectors c with sum_i c_i e_i = 0.
std::vector<std::vector<Rational>> kernel(const std::vector<Element>& elements);

}  // namespace dgli
