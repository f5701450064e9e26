#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mercator/series/axioms.hpp"
#include "mercator/series/gudermann_series.hpp"
#include "mercator/series/serialize.hpp"
#include "oracles.hpp"

using namespace mercator::series;
using namespace mercator::series::elementary;

namespace {

UnivariateSeries poly(std::vector<BigRational> c) { return UnivariateSeries(std::move(c)); }

BigRational q(long p, long d = 1) { return BigRational(p, d); }

}  // namespace

TEST_CASE("BigRational stays canonical") {
  CHECK(q(6, -4).to_string() == "-3/2");
  CHECK(q(4, 2).to_string() == "2");
  CHECK(BigRational::parse("10/-4") == q(-5, 2));
  CHECK(BigRational::parse("0/7").to_string() == "0");
  CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
  CHECK((q(2, 3) * q(3, 4)).to_string() == "1/2");
  CHECK(q(-3, 7).inverse() == q(-7, 3));
  CHECK_THROWS_AS(q(1, 0), std::domain_error);
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
  CHECK_THROWS_AS(BigRational::parse("1/x"), std::invalid_argument);
  CHECK(factorial(25).to_string() == "15511210043330985984000000");
}

TEST_CASE("BigRational arithmetic is exact on random fractions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  for (int k = 0; k < 200; ++k) {
    const BigRational a(num(rng), den(rng)), b(num(rng), den(rng));
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK(a * b / b == a);
    CHECK(BigRational::parse((a * b).to_string()) == a * b);
  }
}

TEST_CASE("euler_numbers") {
  CHECK(euler_numbers(0).to_strings() == std::vector<std::string>{"1"});
  CHECK(euler_numbers(4).to_strings() == std::vector<std::string>{"1", "1", "5", "61", "1385"});
  CHECK(euler_numbers(5).to_strings() ==
        std::vector<std::string>{"1", "1", "5", "61", "1385", "50521"});

  const auto e = euler_numbers(11);  // E_22 still fits in int64
  const auto rec = oracle::secant_numbers_recurrence(11);
  const auto zig = oracle::secant_numbers_zigzag(11);
  for (int n = 0; n <= 11; ++n) {
    CHECK(e.values[n].to_string() == std::to_string(rec[n]));
    CHECK(rec[n] == zig[n]);
    if (n >= 2) CHECK(e.values[n] > e.values[n - 1]);
  }
  CHECK(euler_numbers(12).values[12].to_string() == "15514534163557086905");
  CHECK_THROWS_AS(euler_numbers(-1), std::invalid_argument);
}

TEST_CASE("series_multiply truncates at the smaller order") {
  CHECK(poly({1, 1, 0}) * poly({1, -1, 0}) == poly({1, 0, -1}));
  CHECK(UnivariateSeries::variable(1) * UnivariateSeries::variable(1) == UnivariateSeries(1));
  CHECK((poly({1, 2, 3, 4}) * poly({1, 1})).order() == 1);
  CHECK(series_multiply(cos_series(6), sec_series(6)) == UnivariateSeries::constant(1, 6));
}

TEST_CASE("series_compose") {
  CHECK(series_compose(poly({0, 0, 1, 0}), poly({0, 1, 1, 0})) == poly({0, 0, 1, 2}));
  CHECK(series_compose(arctanh_series(5), sin_series(5)) == poly({0, 1, 0, q(1, 6), 0, q(1, 24)}));
  const auto f = sec_series(9);
  CHECK(series_compose(f, UnivariateSeries::variable(9)) == f);
  CHECK_THROWS_AS(series_compose(f, poly({1, 1})), std::invalid_argument);
}

TEST_CASE("series_invert_composition") {
  CHECK(series_invert_composition(UnivariateSeries::variable(6)) == UnivariateSeries::variable(6));
  CHECK(series_invert_composition(gudermann_log_series(7)) ==
        poly({0, 1, 0, q(-1, 6), 0, q(1, 24), 0, q(-61, 5040)}));
  const auto g = series_invert_composition(poly({0, 1, 1, 0}));
  CHECK(g == poly({0, 1, -1, 2}));
  CHECK(series_compose(poly({0, 1, 1, 0}), g) == UnivariateSeries::variable(3));
  CHECK_THROWS_AS(series_invert_composition(poly({0, 2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(series_invert_composition(poly({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("gudermann_log_series") {
  CHECK(gudermann_log_series(1) == UnivariateSeries::variable(1));
  CHECK(gudermann_log_series(5) == poly({0, 1, 0, q(1, 6), 0, q(1, 24)}));
  CHECK(gudermann_log_series(7)[7] == q(61, 5040));
  for (int n = 1; n <= 13; ++n) {
    const auto log = gudermann_log_series(n);
    CHECK(log == series_compose(arctanh_series(n), sin_series(n)));
    if (n >= 2) CHECK(log == series_integrate(sec_series(n - 1)));
    // sec is the derivative of lambda
    CHECK(series_differentiate(log) == sec_series(n - 1));
  }
}

TEST_CASE("gudermann_exp_series") {
  CHECK(gudermann_exp_series(1) == UnivariateSeries::variable(1));
  CHECK(gudermann_exp_series(5) == poly({0, 1, 0, q(-1, 6), 0, q(1, 24)}));
  CHECK(series_compose(gudermann_exp_series(3), gudermann_log_series(3)) ==
        UnivariateSeries::variable(3));
  for (int n = 1; n <= 13; ++n) {
    const auto log = gudermann_log_series(n);
    const auto exp = gudermann_exp_series(n);
    CHECK(exp == series_invert_composition(log));
    CHECK(exp == series_compose(arcsin_series(n), tanh_series(n)));
    CHECK(series_compose(log, exp) == UnivariateSeries::variable(n));
    CHECK(series_compose(exp, log) == UnivariateSeries::variable(n));
  }
}

TEST_CASE("odd parity and truncation stability") {
  const auto log = gudermann_log_series(13);
  const auto exp = gudermann_exp_series(13);
  for (int d = 0; d <= 13; d += 2) {
    CHECK(log[d].is_zero());
    CHECK(exp[d].is_zero());
  }
  for (int k = 1; k < 13; ++k) {
    CHECK(log.truncated(k) == gudermann_log_series(k));
    CHECK(exp.truncated(k) == gudermann_exp_series(k));
  }
}

TEST_CASE("mercator_group_law low-order coefficients") {
  const auto f = mercator_group_law(13);
  CHECK(f.at(1, 0) == q(1));
  CHECK(f.at(0, 1) == q(1));
  CHECK(f.at(1, 1).is_zero());
  CHECK(f.at(2, 0).is_zero());
  CHECK(f.at(2, 1) == q(-1, 2));
  CHECK(f.at(1, 2) == q(-1, 2));
  for (int n = 1; n <= 13; ++n) {
    const auto law = mercator_group_law(n);
    CHECK(law.restrict_to_x() == UnivariateSeries::variable(n));
    CHECK(law.restrict_to_y() == UnivariateSeries::variable(n));
  }
}

TEST_CASE("mercator_group_law matches the aberration-form expansion") {
  // sin F = (sin X + sin Y)/(1 + sin X sin Y) expanded without lambda at all.
  for (int n : {3, 7, 13}) CHECK(mercator_group_law(n) == oracle::group_law_via_aberration(n));
}

TEST_CASE("group law parity and formal inverse") {
  const auto f = mercator_group_law(13);
  for (int i = 0; i <= 13; ++i)
    for (int j = 0; i + j <= 13; ++j)
      if ((i + j) % 2 == 0) CHECK(f.at(i, j).is_zero());
  CHECK(evaluate_at_negation(f) == UnivariateSeries(13));
}

TEST_CASE("check_group_law_axioms") {
  SUBCASE("Mercator law") {
    const auto report = check_group_law_axioms(mercator_group_law(9));
    CHECK(report.all_passed());
    CHECK(report.checks.size() == 3);
  }
  SUBCASE("X + Y + X^2 fails the unit axiom at X^2") {
    BivariateSeries f(4);
    f.at(1, 0) = 1;
    f.at(0, 1) = 1;
    f.at(2, 0) = 1;
    const auto report = check_group_law_axioms(f);
    const auto& unit = report.check("unit");
    CHECK_FALSE(unit.passed);
    REQUIRE(unit.first_offending.has_value());
    CHECK(unit.first_offending->to_string() == "X^2");
    CHECK_FALSE(report.all_passed());
  }
  SUBCASE("multiplicative law X + Y + XY") {
    BivariateSeries f(6);
    f.at(1, 0) = 1;
    f.at(0, 1) = 1;
    f.at(1, 1) = 1;
    CHECK(check_group_law_axioms(f).all_passed());
  }
  SUBCASE("a commutative but non-associative law") {
    BivariateSeries f(4);
    f.at(1, 0) = 1;
    f.at(0, 1) = 1;
    f.at(2, 1) = 1;
    f.at(1, 2) = 1;
    f.at(1, 1) = 1;
    const auto report = check_group_law_axioms(f);
    CHECK(report.check("unit").passed);
    CHECK(report.check("commutativity").passed);
    CHECK_FALSE(report.check("associativity").passed);
  }
}

TEST_CASE("check_involution_coefficients") {
  CHECK(check_involution_coefficients(1).passed);
  CHECK(check_involution_coefficients(7).passed);
  CHECK(check_involution_coefficients(13).passed);

  auto log = gudermann_log_series(7);
  auto exp = gudermann_exp_series(7);
  CHECK(check_involution(log, exp).passed);
  auto bad = exp;
  bad[5] += q(1, 1000);
  const auto r = check_involution(log, bad);
  CHECK_FALSE(r.passed);
  CHECK(r.first_offending_degree == 5);
  log[2] = 1;
  CHECK_FALSE(check_involution(log, exp).passed);
}

TEST_CASE("series serialization") {
  CHECK(to_json(gudermann_log_series(5)) ==
        R"({"order":5,"coefficients":[{"n":1,"value":"1"},{"n":3,"value":"1/6"},{"n":5,"value":"1/24"}]})");
  CHECK(to_csv(gudermann_exp_series(3)) == "n,value\n1,1\n3,-1/6\n");
  const auto law = mercator_group_law(3);
  CHECK(to_json(law) ==
        R"({"order":3,"coefficients":[{"i":0,"j":1,"value":"1"},{"i":1,"j":0,"value":"1"},)"
        R"({"i":1,"j":2,"value":"-1/2"},{"i":2,"j":1,"value":"-1/2"}]})");
  // round trip, the one invariant that matters
  for (int n : {1, 6, 13}) {
    CHECK(univariate_from_json(to_json(gudermann_exp_series(n))) == gudermann_exp_series(n));
    CHECK(bivariate_from_json(to_json(mercator_group_law(n))) == mercator_group_law(n));
  }
}
