#include "upsilon/analytics.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "upsilon/master.hpp"
#include "upsilon/sieve.hpp"

using namespace upsilon;

TEST_CASE("li point values") {
  CHECK(li(2.0) == 0.0);
  CHECK(li(4.0) == doctest::Approx(1.9231).epsilon(1e-3));
  CHECK(li(10.0) == doctest::Approx(5.1204).epsilon(1e-3));
  CHECK(li(4.0) == doctest::Approx(oracle::li_trapezoid(4.0)).epsilon(1e-8));
  CHECK(li(10.0) ==
        doctest::Approx(oracle::li_trapezoid(10.0)).epsilon(1e-8));
  CHECK_THROWS_AS(li(1.5), std::domain_error);
}

TEST_CASE("li is strictly increasing and crudely bounded") {
  double prev = 0.0;
  for (double x = 2.5; x < 100.0; x += 2.5) {
    double v = li(x);
    CHECK(v > prev);
    CHECK(v < (x - 2.0) / std::log(2.0));
    prev = v;
  }
}

TEST_CASE("cor1_sum examples") {
  CHECK(cor1_sum(3) == 0.0);
  CHECK(cor1_sum(4) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cor1_sum(6) == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("cor1_majorant examples") {
  CHECK(cor1_majorant(4) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // x = 10: p=2 gives pi(2)*theta(5) = log 30, p=3 gives pi(3)*theta(3)
  // = 2 log 6, p=5 gives pi(5)*theta(2) = 3 log 2
  double expected = std::log(30.0) + 2.0 * std::log(6.0) +
                    3.0 * std::log(2.0);
  CHECK(cor1_majorant(10) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("majorant dominates the master partial sum") {
  for (std::uint64_t x : {4ULL, 10ULL, 100ULL, 5000ULL, 100000ULL}) {
    double s = sum_upsilon_direct(x);
    double maj = cor1_majorant(x);
    CHECK(s <= maj * (1.0 + 1e-12));
  }
}

TEST_CASE("cor2_sum examples") {
  double l2 = std::log(2.0), l3 = std::log(3.0), l5 = std::log(5.0);
  CHECK(cor2_sum(5) ==
        doctest::Approx(l2 * l2 / (l5 - l2)).epsilon(1e-13));
  CHECK(cor2_sum(4) == doctest::Approx(l2).epsilon(1e-13));
  double expected = std::log(30.0) * l2 / l5 +
                    std::log(6.0) * l3 / std::log(10.0 / 3.0) +
                    l2 * l5 / l2;
  CHECK(cor2_sum(10) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("theta_integral closed form") {
  CHECK(theta_integral(2) == 0.0);
  double l2 = std::log(2.0), l3 = std::log(3.0);
  CHECK(theta_integral(3) ==
        doctest::Approx(l2 * (1.0 / l2 - 1.0 / l3)).epsilon(1e-14));
  // step-function sum evaluated by hand over primes 2, 3, 5, 7 up to 10
  auto ps = oracle::primes_up_to(10);
  double run = 0.0, expected = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    run += std::log(static_cast<double>(ps[i]));
    double hi = (i + 1 < ps.size()) ? static_cast<double>(ps[i + 1]) : 10.0;
    expected += run * (1.0 / std::log(static_cast<double>(ps[i])) -
                       1.0 / std::log(hi));
  }
  CHECK(theta_integral(10) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("cor2_integral_remainder examples") {
  CHECK(cor2_integral_remainder(4) == 0.0);
  double l2 = std::log(2.0), l3 = std::log(3.0);
  double expected = l2 * (l2 * (1.0 / l2 - 1.0 / l3));
  CHECK(cor2_integral_remainder(6) ==
        doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("exact decomposition S = B + R") {
  for (std::uint64_t x : {10ULL, 100ULL, 1234ULL, 10000ULL, 100000ULL}) {
    double s = sum_upsilon_direct(x);
    double b = cor2_sum(x);
    double r = cor2_integral_remainder(x);
    CHECK(s == doctest::Approx(b + r).epsilon(1e-8));
  }
}

TEST_CASE("rosser identity") {
  IdentityCheck c2 = rosser_identity_check(2);
  CHECK(c2.lhs == 1.0);
  CHECK(c2.rhs == doctest::Approx(1.0).epsilon(1e-14));

  IdentityCheck c10 = rosser_identity_check(10);
  CHECK(c10.lhs == 4.0);
  CHECK(c10.passed(1e-9));

  for (std::uint64_t x : {97ULL, 1000ULL, 123456ULL, 1000000ULL})
    CHECK(rosser_identity_check(x).passed(1e-9));
}

TEST_CASE("cor3_sum examples") {
  CHECK(cor3_sum(4) == 0.0);
  double expected = li(5.0) + li(10.0 / 3.0) + li(2.0);
  CHECK(cor3_sum(10) == doctest::Approx(expected).epsilon(1e-12));
  double oracle_sum = oracle::li_trapezoid(5.0) +
                      oracle::li_trapezoid(10.0 / 3.0);
  CHECK(cor3_sum(10) == doctest::Approx(oracle_sum).epsilon(1e-7));

  double c = cor3_sum(10000);
  double band = c * std::log(10000.0) / (10000.0 * log_log(10000));
  CHECK(band > 0.0);
  CHECK(band < 3.0);
}

TEST_CASE("moment_sum") {
  CHECK(moment_sum(6, 1) == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
  CHECK(moment_sum(6, 2) == doctest::Approx(11.0 / 6.0).epsilon(1e-15));
  CHECK(moment_sum(3, 5) == 0.0);
  CHECK_THROWS_AS(moment_sum(10, 0), std::invalid_argument);
  // same summation order as cor1_sum, bit-identical
  for (std::uint64_t x : {100ULL, 54321ULL})
    CHECK(moment_sum(x, 1) == cor1_sum(x));
}

TEST_CASE("EvalGrid geometry") {
  EvalGrid g = EvalGrid::geometric(100, 100000, 10);
  CHECK(g.values.front() == 100);
  CHECK(g.values.back() == 100000);
  for (std::size_t i = 1; i < g.values.size(); ++i)
    CHECK(g.values[i] > g.values[i - 1]);

  // small grids at low x collide and deduplicate
  EvalGrid tight = EvalGrid::geometric(3, 6, 12);
  CHECK(tight.values.front() == 3);
  CHECK(tight.values.back() == 6);
  CHECK(tight.values.size() <= 4);

  CHECK_THROWS_AS(EvalGrid::geometric(2, 10, 4), std::invalid_argument);
  CHECK_THROWS_AS(EvalGrid::geometric(10, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(EvalGrid::geometric(10, 20, 1), std::invalid_argument);
}

TEST_CASE("trend_series basics") {
  EvalGrid g = EvalGrid::geometric(10, 1000000, 6);
  TrendSeries cheb = trend_series(Claim::chebyshev, g);
  CHECK(cheb.claim == "chebyshev");
  CHECK(cheb.rows.size() == g.values.size());
  for (const auto& row : cheb.rows) {
    CHECK(std::isfinite(row.ratio));
    CHECK(row.ratio > 0.0);
  }
  CHECK(std::abs(cheb.rows.back().ratio - 1.0) <
        std::abs(cheb.rows.front().ratio - 1.0));

  // the landau ratio carries a slowly decaying second-order term; at desk
  // scale it sits in a band above 1 rather than converging visibly
  TrendSeries landau =
      trend_series(Claim::landau, EvalGrid::geometric(100, 1000000, 5));
  for (const auto& row : landau.rows) {
    CHECK(row.ratio > 0.9);
    CHECK(row.ratio < 1.2);
  }

  TrendSeries cor1 =
      trend_series(Claim::cor1, EvalGrid::geometric(100, 1000000, 5));
  CHECK(cor1.rows.back().ratio >= 1.0);

  TrendSeries mom =
      trend_series(Claim::moment, EvalGrid::geometric(100, 10000, 4), 2);
  CHECK(mom.claim == "moment-2");
  for (const auto& row : mom.rows) CHECK(row.value >= 0.0);
}

TEST_CASE("parse_claim") {
  CHECK(parse_claim("theorem-master") == Claim::theorem_master);
  CHECK(parse_claim("moment") == Claim::moment);
  CHECK(!parse_claim("bogus"));
}
