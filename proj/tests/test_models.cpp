#include "doctest.h"

#include "dgli/models.hpp"

using namespace dgli;

namespace {

const GradedAlphabet& XB = GradedAlphabet::xb();
const GradedAlphabet& ABX = GradedAlphabet::abx();
constexpr std::uint8_t kX = 0, kBeta = 1;
constexpr std::uint8_t kA = 0, kB = 1, kXabx = 2;

Element x(int trunc) { return Element::generator(XB, kX, trunc); }
Element beta(int trunc) { return Element::generator(XB, kBeta, trunc); }

}  // namespace

TEST_CASE("first induction step") {
  ModelCoefficients built = inductive_build(2, 4);
  REQUIRE(built.lambdas.size() == 3);
  CHECK(built.lambdas[0] == Rational(1));
  CHECK(built.lambdas[1] == Rational(-1, 2));
  CHECK(built.lambdas[2] == Rational(1, 6));
  REQUIRE(built.certificates.size() == 1);
  const auto& cert = built.certificates[0];
  CHECK(cert.step == 2);
  CHECK_FALSE(cert.cycle_was_zero);
  CHECK(cert.eta == Rational(-1, 12));
  CHECK(cert.proportionality_ok);
  CHECK(model_json(built) ==
        R"({"alphabet":"xb","truncation":4,"coefficients":[)"
        R"({"i":0,"value":"1/1"},{"i":1,"value":"-1/2"},{"i":2,"value":"1/6"}],)"
        R"("certificates":[{"step":2,"cycle_was_zero":false,"eta":"-1/12",)"
        R"("proportionality_ok":true}]})");
}

TEST_CASE("induction reproduces the number sequence") {
  ModelCoefficients built = inductive_build(12, 14);
  REQUIRE(built.lambdas.size() == 13);
  CHECK(built.lambdas[4] == Rational(-1, 30));
  CHECK(built.lambdas[6] == Rational(1, 42));
  CHECK(built.lambdas[12] == Rational(-691, 2730));
  for (std::size_t i = 3; i <= 11; i += 2) CHECK(built.lambdas[i].is_zero());
  BernoulliTable table(12);
  CHECK(coefficients_match_bernoulli(built, table));
  for (const auto& cert : built.certificates) {
    CHECK(cert.proportionality_ok);
    CHECK(built.lambdas[cert.step] ==
          -Rational(factorial(cert.step)) * cert.eta);
    if (cert.step % 2 == 1) CHECK(cert.cycle_was_zero);
  }
  CHECK_THROWS_AS(inductive_build(1, 10), std::domain_error);
  CHECK_THROWS_AS(inductive_build(6, 7), std::invalid_argument);
}

TEST_CASE("obstruction cycles") {
  std::vector<Rational> lambdas{Rational(1), Rational(-1, 2), Rational(1, 6),
                                Rational(0)};
  // Odd steps above the quadratic one have empty obstruction sums.
  CHECK(inductive_cycle(lambdas, 3, 6).is_zero());
  CHECK_THROWS_AS(inductive_cycle(lambdas, 1, 6), std::domain_error);
  CHECK_THROWS_AS(inductive_cycle(lambdas, 5, 8), std::invalid_argument);

  // The quadratic obstruction pulled back from the endpoint presentation.
  Element c2 = inductive_cycle(lambdas, 2, 5);
  CHECK(c2 == Rational(-1, 8) * bracket(x(5), bracket(beta(5), beta(5))));
}

TEST_CASE("cross presentation consistency") {
  BernoulliTable table(8);
  std::vector<Rational> lambdas;
  for (std::size_t i = 0; i <= 8; ++i) lambdas.push_back(table.at(i));
  for (unsigned step = 2; step <= 7; ++step) {
    CHECK(cross_presentation_consistent(lambdas, step, step + 2));
  }
}

TEST_CASE("endpoint model differentials") {
  BernoulliTable table(4);
  IntervalModel m0 = IntervalModel::geometric(table, 0, 3);
  const Element& dx0 = m0.differential().value(kXabx);
  CHECK(dx0.coeff({kB}) == Rational(1));
  CHECK(dx0.coeff({kA}) == Rational(-1));
  CHECK(dx0.coeff({kXabx, kB}) == Rational(1));
  CHECK(dx0.coeff({kB, kXabx}) == Rational(-1));
  CHECK(dx0.term_count() == 4);

  // One more order folds the linear terms into (1/2) ad_x(a + b).
  IntervalModel m1 = IntervalModel::geometric(table, 1, 4);
  const Element& dx1 = m1.differential().value(kXabx);
  CHECK(dx1.coeff({kB}) == Rational(1));
  CHECK(dx1.coeff({kA}) == Rational(-1));
  CHECK(dx1.coeff({kXabx, kA}) == Rational(1, 2));
  CHECK(dx1.coeff({kXabx, kB}) == Rational(1, 2));
  CHECK(dx1.coeff({kA, kXabx}) == Rational(-1, 2));
  CHECK(dx1.coeff({kB, kXabx}) == Rational(-1, 2));
  CHECK(dx1.term_count() == 6);

  const Element& da = m1.differential().value(kA);
  CHECK(da.coeff({kA, kA}) == Rational(-1));
  CHECK(da.term_count() == 1);

  CHECK(model_json(m0) ==
        R"({"alphabet":"abx","truncation":3,"coefficients":[)"
        R"({"i":0,"value":"1/1"}],"certificates":[]})");
  CHECK_THROWS_AS(IntervalModel::geometric(table, 4, 5),
                  std::invalid_argument);
}

TEST_CASE("square of the endpoint differential") {
  BernoulliTable table(6);
  IntervalModel model = IntervalModel::geometric(table, 6, 8);
  DSquaredReport report = d_squared_report(model);
  CHECK(report.ok);
  CHECK(report.failing_length == -1);
  CHECK(d_squared_holds(model));
}

TEST_CASE("mutated coefficient breaks flatness at its own length") {
  IntervalModel crooked = IntervalModel::with_coefficients(
      {Rational(1), Rational(-1, 2), Rational(1, 7)}, 4);
  DSquaredReport report = d_squared_report(crooked);
  CHECK_FALSE(report.ok);
  CHECK(report.generator == "x");
  CHECK(report.failing_length == 3);
  CHECK_FALSE(report.residue_json.empty());
  CHECK_FALSE(d_squared_holds(crooked));
}

TEST_CASE("quadratic piece against higher weights") {
  for (unsigned n = 2; n <= 6; ++n) CHECK(d1_anticommute_holds(n, n + 3));
  CHECK_THROWS_AS(d1_anticommute_holds(1, 5), std::domain_error);
}

TEST_CASE("quadratic piece restricted to embedded elements") {
  const int T = 8;
  const Element samples[] = {
      beta(T),
      x(T),
      bracket(x(T), beta(T)),
      ad_pow(kX, 2, beta(T)),
      bracket(beta(T), bracket(x(T), beta(T))),
      tensor_product(x(T), beta(T))};
  for (const Element& s : samples) CHECK(d1_restriction_holds(s, T));

  // The embedded beta maps to b - a, whose image is -(1/2)[b+a, b-a].
  const Element a = Element::generator(ABX, kA, T);
  const Element b = Element::generator(ABX, kB, T);
  CHECK(derive(d1_abx(T), b - a) ==
        Rational(-1, 2) * bracket(b + a, b - a));
}

TEST_CASE("operator level flatness projections") {
  BernoulliTable table(8);
  for (unsigned k = 0; k <= 2; ++k) {
    CHECK(operator_projection_zero(table, 6, k, 7));
  }
  CHECK(operator_projection_coordinate(table, 8, 2, 9).is_zero());
  CHECK_THROWS_AS(operator_projection_coordinate(table, 7, 1, 9),
                  std::domain_error);
  CHECK_THROWS_AS(operator_projection_coordinate(table, 6, 3, 7),
                  std::domain_error);
  CHECK_THROWS_AS(operator_projection_coordinate(table, 6, 1, 5),
                  std::invalid_argument);
}

TEST_CASE("presentation change maps") {
  const int T = 6;
  Element e = bracket(x(T), beta(T)) + Rational(2) * beta(T);
  CHECK(abx_to_xb(xb_to_abx(e, T), T) == e);
  CHECK_THROWS_AS(xb_to_abx(Element::generator(ABX, kA, T), T),
                  std::invalid_argument);
  CHECK_THROWS_AS(abx_to_xb(beta(T), T), std::invalid_argument);
}
