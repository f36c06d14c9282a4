#include "doctest.h"

#include "dgli/linalg.hpp"
#include "dgli/mu_basis.hpp"

using namespace dgli;

namespace {

const GradedAlphabet& XB = GradedAlphabet::xb();
constexpr std::uint8_t kX = 0, kBeta = 1;

Element x(int trunc) { return Element::generator(XB, kX, trunc); }
Element beta(int trunc) { return Element::generator(XB, kBeta, trunc); }

}  // namespace

TEST_CASE("proportionality detection") {
  const int T = 6;
  Element d = bracket(x(T), beta(T));
  CHECK(proportionality(Rational(-3, 7) * d, d) == Rational(-3, 7));
  CHECK(proportionality(Element(XB, T), d) == Rational(0));
  CHECK(proportionality(d, Element(XB, T)) == std::nullopt);
  // Same leading ratio but a second word disagrees.
  Element e = d + x(T);
  CHECK(proportionality(e, d) == std::nullopt);
  CHECK(proportionality(d + beta(T), d + x(T)) == std::nullopt);
  CHECK(proportionality(Element(XB, T), Element(XB, T)) == Rational(0));
}

TEST_CASE("rank of word-coordinate families") {
  const int T = 8;
  Element b = beta(T);
  CHECK(rank({}) == 0);
  CHECK(rank({Element(XB, T)}) == 0);
  CHECK(rank({x(T)}) == 1);
  CHECK(rank({x(T), Rational(5) * x(T)}) == 1);
  CHECK(rank({x(T), b, x(T) + b}) == 2);
  CHECK(rank(mu_family(2, b)) == 2);
  CHECK(rank(mu_family(4, b)) == 3);
  CHECK(rank(mu_family(6, beta(10))) == 4);
  CHECK(mu_independent(1, T));
  CHECK(mu_independent(2, T));
  CHECK(mu_independent(4, T));
  CHECK(mu_independent(6, 10));
}

TEST_CASE("solving inside a span") {
  const int T = 8;
  Element b = beta(T);
  auto basis = mu_family(2, b);
  Element target = Rational(3) * basis[0] - Rational(1, 2) * basis[1];
  auto coords = solve_in_span(basis, target);
  REQUIRE(coords.has_value());
  CHECK(coords->size() == 2);
  CHECK((*coords)[0] == Rational(3));
  CHECK((*coords)[1] == Rational(-1, 2));

  // A word outside the span's support makes the system inconsistent.
  CHECK(solve_in_span(basis, x(T)) == std::nullopt);
  auto zero = solve_in_span(basis, Element(XB, T));
  REQUIRE(zero.has_value());
  CHECK((*zero)[0].is_zero());
  CHECK((*zero)[1].is_zero());
}

TEST_CASE("kernel of a dependent family") {
  const int T = 6;
  std::vector<Element> family{x(T), beta(T), x(T) + Rational(2) * beta(T)};
  auto null_space = kernel(family);
  REQUIRE(null_space.size() == 1);
  const auto& relation = null_space[0];
  REQUIRE(relation.size() == 3);
  Element combo(XB, T);
  for (std::size_t i = 0; i < family.size(); ++i) {
    combo += relation[i] * family[i];
  }
  CHECK(combo.is_zero());
  // Independent families have trivial kernel.
  CHECK(kernel({x(T), beta(T)}).empty());
  CHECK(kernel(mu_family(6, beta(10))).empty());
}
