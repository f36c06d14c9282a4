#include "doctest.h"

#include "dgli/identities.hpp"
#include "dgli/table_io.hpp"

using namespace dgli;

TEST_CASE("bernoulli numbers in the B_1 = -1/2 convention") {
  BernoulliTable table(12);
  CHECK(table.at(0) == Rational(1));
  CHECK(table.at(1) == Rational(-1, 2));
  CHECK(table.at(2) == Rational(1, 6));
  CHECK(table.at(4) == Rational(-1, 30));
  CHECK(table.at(6) == Rational(1, 42));
  CHECK(table.at(8) == Rational(-1, 30));
  CHECK(table.at(10) == Rational(5, 66));
  CHECK(table.at(12) == Rational(-691, 2730));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK_THROWS_AS(table.at(13), std::out_of_range);
}

TEST_CASE("odd bernoulli numbers vanish from index 3 on") {
  BernoulliTable table(25);
  for (std::size_t n = 3; n <= 25; n += 2) CHECK(table.at(n).is_zero());
}

TEST_CASE("euler identity on small even orders") {
  BernoulliTable table(30);
  const auto at4 = euler_identity_sides(table, 4);
  CHECK(at4.lhs == Rational(1, 144));
  CHECK(at4.rhs == Rational(1, 144));
  const auto at8 = euler_identity_sides(table, 8);
  CHECK(at8.lhs == Rational(1, 134400));
  CHECK(at8.rhs == Rational(1, 134400));
  for (int n = 4; n <= 30; n += 2) CHECK(euler_identity_holds(table, n));
  CHECK_THROWS_AS(euler_identity_holds(table, 2), std::domain_error);
  CHECK_THROWS_AS(euler_identity_holds(table, 7), std::domain_error);
}

TEST_CASE("v table low rows frozen") {
  VTable v(7);
  const struct {
    int n, k;
    Rational value;
  } cells[] = {
      {0, 0, Rational(1)},     {1, 0, Rational(1, 2)},
      {2, 0, Rational(1, 2)},  {2, 1, Rational(-1)},
      {3, 0, Rational(1, 2)},  {3, 1, Rational(-3, 2)},
      {4, 0, Rational(1, 2)},  {4, 1, Rational(-2)},
      {4, 2, Rational(1)},     {5, 0, Rational(1, 2)},
      {5, 1, Rational(-5, 2)}, {5, 2, Rational(5, 2)},
      {6, 0, Rational(1, 2)},  {6, 1, Rational(-3)},
      {6, 2, Rational(9, 2)},  {6, 3, Rational(-1)},
      {7, 0, Rational(1, 2)},  {7, 1, Rational(-7, 2)},
      {7, 2, Rational(7)},     {7, 3, Rational(-7, 2)},
  };
  for (const auto& cell : cells) CHECK(v.at(cell.n, cell.k) == cell.value);
  CHECK(v.at(5, 3).is_zero());
  CHECK(v.at(4, -1).is_zero());
  CHECK_THROWS_AS(v.at(8, 0), std::out_of_range);
  CHECK_THROWS_AS(v.at(-1, 0), std::out_of_range);
}

TEST_CASE("closed form agrees with the recurrence") {
  VTable v(60);
  CHECK(v_closed_form(0, 0) == Rational(1));
  CHECK(v_closed_form(6, 2) == Rational(9, 2));
  CHECK(v_closed_form(7, 3) == Rational(-7, 2));
  CHECK(v_closed_form(8, 4) == Rational(1));
  CHECK(v_closed_form(9, 2) == Rational(27, 2));
  for (int n = 0; n <= 60; ++n) {
    for (int k = -1; k <= n / 2 + 2; ++k) {
      if (k < 0) {
        CHECK(v.at(n, k).is_zero());
        continue;
      }
      CHECK(v.at(n, k) == v_closed_form(n, k));
    }
  }
}

TEST_CASE("column partial sums") {
  VTable v(10);
  CHECK(v.sigma(0, 0) == Rational(1));
  CHECK(v.sigma(4, 0) == Rational(3));
  CHECK(v.sigma(2, 1) == Rational(-1));
  CHECK(v.sigma(3, 1) == Rational(-5, 2));
}

TEST_CASE("diagonal sums collapse from n = 2 on") {
  VTable v(60);
  CHECK(v.diagonal_sum(0) == Rational(1));
  CHECK(v.diagonal_sum(1) == Rational(-1, 2));
  for (int n = 2; n <= 30; ++n) CHECK(v.diagonal_sum(n).is_zero());
  CHECK_THROWS_AS(v.diagonal_sum(31), std::out_of_range);
}

TEST_CASE("column sum identity needs k >= 1") {
  VTable v(40);
  CHECK(column_sum_identity_holds(v, 2, 1));
  CHECK(v.at(2, 1) == -v.sigma(0, 0));
  CHECK(column_sum_identity_holds(v, 6, 2));
  CHECK_FALSE(column_sum_identity_holds(v, 3, 0));
  CHECK_FALSE(column_sum_identity_holds(v, 1, 1));
  for (int n = 2; n <= 40; ++n) {
    for (int k = 1; 2 * k <= n; ++k) CHECK(column_sum_identity_holds(v, n, k));
  }
}

TEST_CASE("iterated sums of the identity sequence") {
  CHECK(f_iter(0, 4) == 4);
  CHECK(f_iter(1, 4) == 10);
  CHECK(f_iter(2, 3) == 10);
  CHECK(f_iter(3, 1) == 1);
  CHECK_THROWS_AS(f_iter(-1, 4), std::invalid_argument);
  CHECK_THROWS_AS(f_iter(2, 0), std::invalid_argument);
  for (int k = 0; k <= 8; ++k) {
    for (long n = 1; n <= 20; ++n) CHECK(iterated_sum_identity_holds(k, n));
  }
}

TEST_CASE("bernoulli v relation on even orders") {
  BernoulliTable bernoulli(20);
  VTable v(20);
  for (int n = 4; n <= 20; n += 2) {
    for (int k = 0; 2 * k <= n - 1; ++k) {
      CHECK(bernoulli_v_relation_holds(bernoulli, v, n, k));
    }
  }
  CHECK_THROWS_AS(bernoulli_v_relation_holds(bernoulli, v, 7, 1),
                  std::domain_error);
  CHECK_THROWS_AS(bernoulli_v_relation_holds(bernoulli, v, 8, 4),
                  std::domain_error);
}

TEST_CASE("printed instances of the relation") {
  BernoulliTable table(10);
  const Rational b2 = table.at(2), b4 = table.at(4), b6 = table.at(6),
                 b8 = table.at(8), b10 = table.at(10);
  // n = 8, k = 2: the B_4^2 coefficient vanishes.
  CHECK(Rational(9, 2) * (b2 / Rational(factorial(2))) *
            (b6 / Rational(factorial(6))) ==
        Rational(-15) * (b8 / Rational(factorial(8))));
  // n = 10, k = 2: all terms present with distinct weights.
  CHECK(Rational(5, 2) * (b4 / Rational(factorial(4))) *
                (b6 / Rational(factorial(6))) +
            Rational(10) * (b2 / Rational(factorial(2))) *
                (b8 / Rational(factorial(8))) ==
        Rational(-77, 2) * (b10 / Rational(factorial(10))));
  // They are the k = 2 rows of the general relation.
  VTable v(10);
  const auto at8 = bernoulli_v_relation_sides(table, v, 8, 2);
  CHECK(at8.lhs == at8.rhs);
  CHECK(at8.lhs == Rational(-15) * (b8 / Rational(factorial(8))));
  const auto at10 = bernoulli_v_relation_sides(table, v, 10, 2);
  CHECK(at10.lhs == at10.rhs);
  CHECK(at10.lhs == Rational(-77, 2) * (b10 / Rational(factorial(10))));
}

TEST_CASE("k = 0 row of the relation recovers euler") {
  BernoulliTable table(12);
  VTable v(12);
  for (int n = 4; n <= 12; n += 2) {
    // sigma(n-1, 0) = (n+1)/2, so the k = 0 relation is Euler's up to that
    // factor.
    CHECK(v.sigma(n - 1, 0) == Rational(n + 1, 2));
    const auto relation = bernoulli_v_relation_sides(table, v, n, 0);
    const auto euler = euler_identity_sides(table, n);
    CHECK(relation.lhs == euler.lhs / Rational(2));
    CHECK(relation.rhs == euler.rhs / Rational(2));
  }
}

TEST_CASE("table emission formats") {
  VTable v(7);
  const std::string csv = v_table_csv(v, 4);
  CHECK(csv.substr(0, 10) == "n,k,value\n");
  CHECK(csv.find("2,1,-1/1\n") != std::string::npos);
  CHECK(csv.find("4,2,1/1\n") != std::string::npos);

  const std::string md = v_table_markdown(v, 7);
  CHECK(md.find("| n | v_{n,0} | v_{n,1} | v_{n,2} | v_{n,3} |") == 0);
  CHECK(md.find("| 7 | 1/2 | -7/2 | 7 | -7/2 |") != std::string::npos);
  CHECK(md.find("| 1 | 1/2 |  |  |  |") != std::string::npos);

  BernoulliTable b(12);
  const std::string bcsv = bernoulli_csv(b, 12);
  CHECK(bcsv.find("1,,-1/2\n") != std::string::npos);
  CHECK(bcsv.find("12,,-691/2730\n") != std::string::npos);
  const std::string bmd = bernoulli_markdown(b, 4);
  CHECK(bmd.find("| 4 | -1/30 |") != std::string::npos);
  const std::string bjson = bernoulli_json(b, 2);
  CHECK(bjson ==
        R"({"table":"bernoulli","max":2,"entries":[{"n":0,"value":"1/1"},)"
        R"({"n":1,"value":"-1/2"},{"n":2,"value":"1/6"}]})");
  const std::string vjson = v_table_json(v, 2);
  CHECK(vjson ==
        R"({"table":"v","max":2,"entries":[{"n":0,"k":0,"value":"1/1"},)"
        R"({"n":1,"k":0,"value":"1/2"},{"n":2,"k":0,"value":"1/2"},)"
        R"({"n":2,"k":1,"value":"-1/1"}]})");
  CHECK_THROWS_AS(v_table_csv(v, 8), std::out_of_range);
}
