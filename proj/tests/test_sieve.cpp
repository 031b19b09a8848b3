#include "upsilon/sieve.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace upsilon;

TEST_CASE("primes_up_to basic values") {
  CHECK(primes_up_to(10).primes == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(1).primes.empty());
  CHECK(primes_up_to(0).primes.empty());
  CHECK(primes_up_to(2).primes == std::vector<std::uint64_t>{2});
}

TEST_CASE("primes_up_to matches trial division") {
  auto expected = oracle::primes_up_to(10000);
  auto got = primes_up_to(10000);
  CHECK(got.limit == 10000);
  CHECK(got.primes == expected);
}

TEST_CASE("for_each_prime_in windows stitch") {
  std::vector<std::uint64_t> all;
  for_each_prime(5000, [&](std::uint64_t p) { all.push_back(p); });
  std::vector<std::uint64_t> stitched;
  std::mt19937_64 rng(7);
  std::uint64_t lo = 2;
  while (lo <= 5000) {
    std::uint64_t hi = std::min<std::uint64_t>(5000, lo + rng() % 700);
    for_each_prime_in(lo, hi, [&](std::uint64_t p) { stitched.push_back(p); });
    lo = hi + 1;
  }
  CHECK(stitched == all);
}

TEST_CASE("omega_segment examples") {
  PrimeList p3 = primes_up_to(3);
  SieveSegment seg = omega_segment(2, 11, p3);
  CHECK(seg.omega == std::vector<std::uint8_t>{1, 1, 2, 1, 2, 1, 3, 2, 2});

  SieveSegment four = omega_segment(4, 5, primes_up_to(2));
  CHECK(four.omega == std::vector<std::uint8_t>{2});

  SieveSegment big = omega_segment(9973, 9974, primes_up_to(99));
  CHECK(big.omega == std::vector<std::uint8_t>{1});
  CHECK(oracle::is_prime(9973));
}

TEST_CASE("omega_segment rejects an undersized base") {
  CHECK_THROWS_AS(omega_segment(2, 200, primes_up_to(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(omega_segment(5, 4, primes_up_to(100)),
                  std::invalid_argument);
}

TEST_CASE("omega_segment matches naive factorization") {
  PrimeList base = primes_up_to(isqrt(20000));
  SieveSegment seg = omega_segment(2, 20001, base);
  for (std::uint64_t n = 2; n <= 20000; ++n)
    REQUIRE(seg.omega[n - 2] == oracle::big_omega(n));
}

TEST_CASE("omega_segment boundary independence") {
  PrimeList base = primes_up_to(isqrt(9999));
  SieveSegment whole = omega_segment(2, 10000, base);
  std::mt19937_64 rng(42);
  std::uint64_t lo = 2;
  while (lo < 10000) {
    std::uint64_t hi = std::min<std::uint64_t>(10000, lo + 1 + rng() % 997);
    SieveSegment part = omega_segment(lo, hi, base);
    for (std::uint64_t n = lo; n < hi; ++n)
      REQUIRE(part.omega[n - lo] == whole.omega[n - 2]);
    lo = hi;
  }
}

TEST_CASE("theta point values") {
  CHECK(theta(0) == 0.0);
  CHECK(theta(1) == 0.0);
  CHECK(theta(2) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(theta(10) == doctest::Approx(std::log(210.0)).epsilon(1e-12));
}

TEST_CASE("theta matches trial-division sum") {
  for (std::uint64_t x : {37ULL, 1000ULL, 12345ULL, 100000ULL}) {
    double expected = oracle::theta(x);
    CHECK(theta(x) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("theta is nondecreasing") {
  double prev = -1.0;
  for (std::uint64_t x = 0; x <= 300; ++x) {
    double t = theta(x);
    CHECK(t >= prev);
    prev = t;
  }
}

TEST_CASE("pi_two point values") {
  CHECK(pi_two(3) == 0);
  CHECK(pi_two(10) == 4);  // {4, 6, 9, 10}
  CHECK(pi_two(100) == 34);
  CHECK(oracle::pi_two(100) == 34);
}

TEST_CASE("pi_two matches brute force and is nondecreasing") {
  std::uint64_t prev = 0;
  for (std::uint64_t x = 0; x <= 400; ++x) {
    std::uint64_t c = pi_two(x);
    CHECK(c == oracle::pi_two(x));
    CHECK(c >= prev);
    prev = c;
  }
  CHECK(pi_two(100000) == oracle::pi_two(100000));
}

TEST_CASE("pi_two_at_points agrees with pi_two") {
  std::vector<std::uint64_t> thr = {1, 3, 4, 10, 97, 1000, 4096, 0};
  auto got = pi_two_at_points(thr);
  for (std::size_t i = 0; i < thr.size(); ++i)
    CHECK(got[i] == pi_two(thr[i]));
}

TEST_CASE("pi_at_points agrees with pi_sieve") {
  std::vector<std::uint64_t> thr = {0, 1, 2, 10, 100, 541, 99991};
  auto got = pi_at_points(thr);
  for (std::size_t i = 0; i < thr.size(); ++i)
    CHECK(got[i] == pi_sieve(thr[i]));
}

TEST_CASE("theta_at_points examples") {
  auto sweep = theta_at_points(10, {1, 5, 10});
  CHECK(sweep.theta_for(1) == doctest::Approx(std::log(210.0)).epsilon(1e-12));
  CHECK(sweep.theta_for(5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(sweep.theta_for(10) == 0.0);
}

TEST_CASE("theta_at_points is bit-identical to theta at each floor(x/k)") {
  std::mt19937_64 rng(123);
  for (int rep = 0; rep < 5; ++rep) {
    std::uint64_t x = 100 + rng() % 50000;
    std::vector<std::uint64_t> ks;
    for (int i = 0; i < 20; ++i) ks.push_back(1 + rng() % x);
    auto sweep = theta_at_points(x, ks);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      double direct = theta(x / ks[i]);
      REQUIRE(sweep.theta_values[i] == direct);  // same summation order
    }
    // k1 < k2 implies theta[k1] >= theta[k2]
    for (std::size_t a = 0; a < ks.size(); ++a)
      for (std::size_t b = 0; b < ks.size(); ++b)
        if (ks[a] < ks[b])
          REQUIRE(sweep.theta_values[a] >= sweep.theta_values[b]);
  }
}

TEST_CASE("theta_at_points validates input") {
  CHECK_THROWS_AS(theta_at_points(1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(theta_at_points(10, {0}), std::invalid_argument);
}

TEST_CASE("isqrt and is_prime") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(3) == 1);
  CHECK(isqrt(4) == 2);
  CHECK(isqrt(999999999999ULL) == 999999);
  for (std::uint64_t n = 0; n < 500; ++n)
    CHECK(is_prime(n) == oracle::is_prime(n));
}
