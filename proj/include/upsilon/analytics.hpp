#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace upsilon {

// Offset logarithmic integral, integral of dt/log t from 2 to x. Adaptive
// quadrature on the u = log t substitution, 1e-10 relative tolerance.
double li(double x);

// A(x) = sum over primes 2p <= x of pi(p)/p.
double cor1_sum(std::uint64_t x);

// sum over primes 2p <= x of pi(p) * theta(floor(x/p)); an upper bound for
// the master partial sum.
double cor1_majorant(std::uint64_t x);

// B(x) = sum over primes 2p <= x of theta(floor(x/p)) * log p / log(x/p).
double cor2_sum(std::uint64_t x);

// Exact step-function integral I(y) = integral from 2 to y of
// theta(t) / (t log^2 t) dt, via the antiderivative -1/log t on each
// constancy interval of theta. No quadrature error.
double theta_integral(std::uint64_t y);
std::vector<double> theta_integral_at_points(
    const std::vector<std::uint64_t>& ys);

// R(x) = sum over primes 2p <= x of log p * I(floor(x/p)); the remainder in
// the exact decomposition S(x) = B(x) + R(x).
double cor2_integral_remainder(std::uint64_t x);

struct IdentityCheck {
  std::uint64_t x = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;

  bool passed(double tol) const { return rel_diff <= tol; }
};

// pi(x) versus theta(x)/log x + I(x); exact partial-summation identity,
// passes at 1e-9 relative.
IdentityCheck rosser_identity_check(std::uint64_t x);

// C(x) = sum over primes 2p <= x of Li(x/p), real quotient.
double cor3_sum(std::uint64_t x);

// sum over primes 2p <= x of pi(p)^m / p; m = 1 is cor1_sum, same
// summation order.
double moment_sum(std::uint64_t x, int m);

// Strictly increasing geometric grid of integer sample points.
struct EvalGrid {
  std::uint64_t from = 3;
  std::uint64_t to = 3;
  int points = 2;
  std::vector<std::uint64_t> values;

  static EvalGrid geometric(std::uint64_t from, std::uint64_t to, int points);
};

enum class Claim {
  theorem_master,
  landau,
  chebyshev,
  cor1,
  cor2,
  cor3,
  moment,
};

std::optional<Claim> parse_claim(std::string_view name);

struct TrendRow {
  std::uint64_t x = 0;
  double value = 0.0;
  double reference = 0.0;
  double ratio = 0.0;
};

struct TrendSeries {
  std::string claim;
  std::vector<TrendRow> rows;
};

// One row per grid value; rows computed independently. m is used only for
// Claim::moment.
TrendSeries trend_series(Claim claim, const EvalGrid& grid, int m = 1);

// log log x, natural logs.
double log_log(std::uint64_t x);

}  // namespace upsilon
