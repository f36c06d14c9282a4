#include "doctest.h"

#include "dgli/element.hpp"
#include "dgli/mu_basis.hpp"
#include "dgli/rational.hpp"

using namespace dgli;

namespace {

const GradedAlphabet& XB = GradedAlphabet::xb();
const GradedAlphabet& ABX = GradedAlphabet::abx();
constexpr std::uint8_t kX = 0, kBeta = 1;

Element x(int trunc) { return Element::generator(XB, kX, trunc); }
Element beta(int trunc) { return Element::generator(XB, kBeta, trunc); }

}  // namespace

TEST_CASE("bracket signs by parity") {
  const int T = 6;
  CHECK(bracket(x(T), x(T)).is_zero());

  // Odd-odd: the commutator becomes an anticommutator.
  Element bb = bracket(beta(T), beta(T));
  CHECK(bb.coeff({kBeta, kBeta}) == Rational(2));
  CHECK(bb.term_count() == 1);

  Element xb = bracket(x(T), beta(T));
  CHECK(xb.coeff({kX, kBeta}) == Rational(1));
  CHECK(xb.coeff({kBeta, kX}) == Rational(-1));
  CHECK(xb.term_count() == 2);
  CHECK(xb.homogeneous_degree() == -1);

  CHECK(bracket(x(T), beta(T)) == -bracket(beta(T), x(T)));
}

TEST_CASE("iterated adjoint expands binomially") {
  const int T = 8;
  for (unsigned n = 0; n <= 6; ++n) {
    Element lhs = ad_pow(kX, n, beta(T));
    Element rhs(XB, T);
    for (unsigned j = 0; j <= n; ++j) {
      Word w(n - j, kX);
      w.push_back(kBeta);
      w.insert(w.end(), j, kX);
      Rational c(binomial_ext(static_cast<long>(n), static_cast<long>(j)));
      if (j % 2 == 1) c = -c;
      rhs.add_term(std::move(w), c);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("quadratic basis elements in low bidegree") {
  const int T = 6;
  Element b = beta(T);

  Element mu00 = mu(0, 0, b);
  CHECK(mu00.coeff({kBeta, kBeta}) == Rational(2));
  CHECK(mu00.term_count() == 1);

  Element mu20 = mu(2, 0, b);
  CHECK(mu20.coeff({kX, kX, kBeta, kBeta}) == Rational(2));
  CHECK(mu20.coeff({kX, kBeta, kBeta, kX}) == Rational(-4));
  CHECK(mu20.coeff({kBeta, kBeta, kX, kX}) == Rational(2));
  CHECK(mu20.term_count() == 3);

  Element mu21 = mu(2, 1, b);
  CHECK(mu21.coeff({kX, kBeta, kX, kBeta}) == Rational(2));
  CHECK(mu21.coeff({kX, kBeta, kBeta, kX}) == Rational(-2));
  CHECK(mu21.coeff({kBeta, kX, kX, kBeta}) == Rational(-2));
  CHECK(mu21.coeff({kBeta, kX, kBeta, kX}) == Rational(2));
  CHECK(mu21.term_count() == 4);

  for (unsigned n = 0; n <= 4; ++n) {
    for (unsigned k = 0; 2 * k <= n; ++k) {
      CHECK(xb_bidegree_support(mu(n, k, b), n, 2));
    }
  }
  CHECK_FALSE(xb_bidegree_support(mu20, 2, 1));

  CHECK_THROWS_AS(mu(2, 2, b), std::domain_error);
  CHECK_THROWS_AS(mu(5, 0, b), std::invalid_argument);  // needs truncation >= 7
  CHECK_THROWS_AS(mu(2, 0, x(T)), std::domain_error);
}

TEST_CASE("adjoint brackets land in the quadratic basis") {
  const int T = 8;
  const VTable v(4);
  Element b = beta(T);
  Element ab = ad_pow(kX, 1, b);

  // [ad_x^p b, ad_x^q b] = sum_k v(|p-q|, k) mu(p+q, min(p,q)+k, b)
  CHECK(bracket(b, b) == v.at(0, 0) * mu(0, 0, b));
  CHECK(bracket(b, ab) == Rational(1, 2) * mu(1, 0, b));
  CHECK(bracket(ab, ab) == mu(2, 1, b));
  for (unsigned p = 0; p <= 3; ++p)
    for (unsigned q = p; p + q <= 4; ++q)
      CHECK(adjoint_composition_holds(v, p, q, b));
}

TEST_CASE("alphabet change round trip") {
  const int T = 6;
  Element x_abx = Element::generator(ABX, 2, T);
  Element a_abx = Element::generator(ABX, 0, T);
  Element b_abx = Element::generator(ABX, 1, T);
  const std::vector<Element> embed_images{x_abx, b_abx - a_abx};
  const std::vector<Element> retract_images{Rational(-1, 2) * beta(T),
                                            Rational(1, 2) * beta(T), x(T)};

  const Element samples[] = {beta(T), bracket(x(T), beta(T)), mu(2, 1, beta(T)),
                             tensor_product(x(T), beta(T)) + Rational(3) * x(T)};
  for (const Element& e : samples) {
    Element embedded = substitute(e, ABX, T, embed_images);
    Element back = substitute(embedded, XB, T, retract_images);
    CHECK(back == e);
  }

  // The retraction sends b - a to beta, so generators map as expected.
  Element img = substitute(b_abx - a_abx, XB, T, retract_images);
  CHECK(img == beta(T));

  CHECK_THROWS_AS(substitute(beta(T), ABX, T, {x_abx}), std::invalid_argument);
  // beta has degree -1, x degree 0: a degree-breaking image is rejected.
  CHECK_THROWS_AS(substitute(beta(T), ABX, T, {x_abx, x_abx}),
                  std::invalid_argument);
}

TEST_CASE("truncation silently drops long words") {
  Element e = Element::from_word(XB, {kX, kX, kBeta}, Rational(1), 2);
  CHECK(e.is_zero());

  Element u = Element::from_word(XB, {kX, kX}, Rational(1), 3);
  Element v = Element::from_word(XB, {kBeta, kBeta}, Rational(1), 3);
  CHECK(tensor_product(u, v).is_zero());
  CHECK(bracket(u, v).is_zero());
  Element w = tensor_product(u, Element::generator(XB, kBeta, 3));
  CHECK(w.coeff({kX, kX, kBeta}) == Rational(1));

  CHECK_THROWS_AS(Element(XB, 0), std::invalid_argument);
}

TEST_CASE("compatibility guards") {
  Element u = x(4);
  Element v = x(5);
  CHECK_THROWS_AS((void)(u == v), std::invalid_argument);
  CHECK_THROWS_AS(u + v, std::invalid_argument);
  Element w = Element::generator(ABX, 2, 4);
  CHECK_THROWS_AS(bracket(u, w), std::invalid_argument);
}

TEST_CASE("linear structure and views") {
  const int T = 5;
  Element e = elem_combine(Rational(2), bracket(x(T), beta(T)), Rational(1, 2),
                           mu(0, 0, beta(T)));
  CHECK(e.coeff({kX, kBeta}) == Rational(2));
  CHECK(e.coeff({kBeta, kX}) == Rational(-2));
  CHECK(e.coeff({kBeta, kBeta}) == Rational(1));
  CHECK(e.component_of_length(2) == e);
  CHECK(e.component_of_length(3).is_zero());
  CHECK_FALSE(e.homogeneous_degree().has_value());

  Element z = e - e;
  CHECK(z.is_zero());
  CHECK(z.is_homogeneous_of(-1));
  CHECK(z.is_homogeneous_of(7));
  CHECK_FALSE(z.homogeneous_degree().has_value());

  CHECK((Rational(0) * e).is_zero());
  CHECK(-e + e == z);
}

TEST_CASE("serialization") {
  const int T = 4;
  Element bb = mu(0, 0, beta(T));
  CHECK(element_json(bb) == R"([{"word":"ββ","coeff":"2/1"}])");
  Element xb = bracket(x(T), beta(T));
  CHECK(element_json(xb) ==
        R"([{"word":"xβ","coeff":"1/1"},{"word":"βx","coeff":"-1/1"}])");
  CHECK(element_json(Element(XB, T)) == "[]");
  CHECK(Element(XB, T).str() == "0");
  CHECK(bb.str() == "2·ββ");
}
