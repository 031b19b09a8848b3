#include "upsilon/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "upsilon/config.hpp"
#include "upsilon/errors.hpp"
#include "upsilon/kahan.hpp"
#include "upsilon/master.hpp"
#include "upsilon/parallel.hpp"
#include "upsilon/primecount.hpp"
#include "upsilon/sieve.hpp"

namespace upsilon {

namespace {

constexpr double kLiRelTol = 1e-10;
constexpr int kLiMaxDepth = 60;

double li_integrand(double u) { return std::exp(u) / u; }

double simpson(double a, double fa, double fm, double fb, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double li_adapt(double a, double fa, double m, double fm, double b, double fb,
                double whole, double eps, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = li_integrand(lm), frm = li_integrand(rm);
  double left = simpson(a, fa, flm, fm, m);
  double right = simpson(m, fm, frm, fb, b);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
    return left + right + delta / 15.0;
  return li_adapt(a, fa, lm, flm, m, fm, left, 0.5 * eps, depth - 1) +
         li_adapt(m, fm, rm, frm, b, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace

double li(double x) {
  if (!(x >= 2.0)) throw std::domain_error("li: need x >= 2");
  if (x == 2.0) return 0.0;
  double a = std::log(2.0), b = std::log(x);
  double m = 0.5 * (a + b);
  double fa = li_integrand(a), fm = li_integrand(m), fb = li_integrand(b);
  double whole = simpson(a, fa, fm, fb, b);
  double eps = kLiRelTol * std::max(std::abs(whole), 1e-300);
  return li_adapt(a, fa, m, fm, b, fb, whole, eps, kLiMaxDepth);
}

namespace {

// Shared kernel: sum over primes 2p <= x of pi(p)^m / p, where pi(p) is the
// prime's 1-based index in the ascending sweep.
double moment_kernel(std::uint64_t x, int m) {
  if (x < 4) return 0.0;
  KahanSum s;
  std::uint64_t index = 0;
  for_each_prime(x / 2, [&](std::uint64_t p) {
    ++index;
    double t = 1.0;
    for (int i = 0; i < m; ++i) t *= static_cast<double>(index);
    s += t / static_cast<double>(p);
  });
  return s.value();
}

// Primes p with 2p <= x as a vector.
std::vector<std::uint64_t> half_range_primes(std::uint64_t x) {
  if (x < 4) return {};
  return primes_up_to(x / 2).primes;
}

}  // namespace

double cor1_sum(std::uint64_t x) { return moment_kernel(x, 1); }

double moment_sum(std::uint64_t x, int m) {
  if (m < 1) throw std::invalid_argument("moment_sum: need m >= 1");
  return moment_kernel(x, m);
}

double cor1_majorant(std::uint64_t x) {
  if (x < 2) throw std::invalid_argument("cor1_majorant: need x >= 2");
  std::vector<std::uint64_t> ps = half_range_primes(x);
  if (ps.empty()) return 0.0;
  ThresholdSweepResult sweep = theta_at_points(x, std::move(ps));
  KahanSum s;
  for (std::size_t i = 0; i < sweep.divisors.size(); ++i)
    s += static_cast<double>(i + 1) * sweep.theta_values[i];
  return s.value();
}

double cor2_sum(std::uint64_t x) {
  if (x < 4) return 0.0;
  std::vector<std::uint64_t> ps = half_range_primes(x);
  if (ps.empty()) return 0.0;
  ThresholdSweepResult sweep = theta_at_points(x, std::move(ps));
  double log_x = std::log(static_cast<double>(x));
  KahanSum s;
  for (std::size_t i = 0; i < sweep.divisors.size(); ++i) {
    double log_p = std::log(static_cast<double>(sweep.divisors[i]));
    s += sweep.theta_values[i] * log_p / (log_x - log_p);
  }
  return s.value();
}

namespace {

// I(y_i) and theta(y_i) for each integer threshold, one prime sweep.
struct StepIntegralSweep {
  std::vector<double> integral;
  std::vector<double> theta;
};

StepIntegralSweep theta_integral_sweep(const std::vector<std::uint64_t>& ys);

}  // namespace

std::vector<double> theta_integral_at_points(
    const std::vector<std::uint64_t>& ys) {
  return theta_integral_sweep(ys).integral;
}

namespace {

StepIntegralSweep theta_integral_sweep(const std::vector<std::uint64_t>& ys) {
  StepIntegralSweep out;
  out.integral.assign(ys.size(), 0.0);
  out.theta.assign(ys.size(), 0.0);
  if (ys.empty()) return out;
  auto order = detail::ascending_order(ys);
  std::uint64_t max_y = ys[order.back()];
  std::size_t i = 0;
  while (i < order.size() && ys[order[i]] < 2) ++i;
  if (max_y < 2) return out;

  // theta is constant theta(p_j) on [p_j, p_{j+1}); the antiderivative of
  // 1/(t log^2 t) is -1/log t, so each completed interval contributes
  // theta(p_j) * (1/log p_j - 1/log p_{j+1}) exactly.
  KahanSum integral;          // I(prev), prev = last prime seen
  KahanSum theta_run;         // theta(prev)
  std::uint64_t prev = 0;
  double inv_log_prev = 0.0;  // 1/log(prev)
  auto record = [&](std::size_t idx) {
    std::uint64_t y = ys[idx];
    double v = integral.value();
    if (prev >= 2 && y > prev)
      v += theta_run.value() *
           (inv_log_prev - 1.0 / std::log(static_cast<double>(y)));
    out.integral[idx] = v;
    out.theta[idx] = theta_run.value();
  };
  for_each_prime(max_y, [&](std::uint64_t p) {
    while (i < order.size() && ys[order[i]] < p) record(order[i++]);
    double inv_log_p = 1.0 / std::log(static_cast<double>(p));
    if (prev >= 2) integral += theta_run.value() * (inv_log_prev - inv_log_p);
    theta_run += std::log(static_cast<double>(p));
    prev = p;
    inv_log_prev = inv_log_p;
  });
  while (i < order.size()) record(order[i++]);
  return out;
}

}  // namespace

double theta_integral(std::uint64_t y) {
  return theta_integral_at_points({y})[0];
}

double cor2_integral_remainder(std::uint64_t x) {
  if (x < 4) throw std::invalid_argument("cor2_integral_remainder: x >= 4");
  std::vector<std::uint64_t> ps = half_range_primes(x);
  std::vector<std::uint64_t> ys(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) ys[i] = x / ps[i];
  StepIntegralSweep sweep = theta_integral_sweep(ys);
  double xd = static_cast<double>(x);
  KahanSum s;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    // extend the last constancy interval from floor(x/p) to the real
    // quotient; theta is flat there, so this stays exact and matches the
    // real-log denominator used in cor2_sum
    double term = sweep.integral[i];
    if (ps[i] * ys[i] != x)
      term += sweep.theta[i] *
              (1.0 / std::log(static_cast<double>(ys[i])) -
               1.0 / std::log(xd / static_cast<double>(ps[i])));
    s += std::log(static_cast<double>(ps[i])) * term;
  }
  return s.value();
}

IdentityCheck rosser_identity_check(std::uint64_t x) {
  if (x < 2) throw std::invalid_argument("rosser_identity_check: x >= 2");
  IdentityCheck c;
  c.x = x;
  c.lhs = static_cast<double>(pi(x));
  c.rhs = theta(x) / std::log(static_cast<double>(x)) + theta_integral(x);
  c.abs_diff = std::abs(c.lhs - c.rhs);
  c.rel_diff = c.abs_diff / std::max(c.lhs, 1.0);
  return c;
}

double cor3_sum(std::uint64_t x) {
  if (x > caps().cor3)
    throw capacity_error("cor3_sum: x = " + std::to_string(x) +
                         " exceeds cap " + std::to_string(caps().cor3));
  if (x < 4) return 0.0;
  std::vector<std::uint64_t> ps = half_range_primes(x);
  double xd = static_cast<double>(x);
  return parallel_block_sum(
      0, ps.size(), 1ULL << 15, [&](std::uint64_t lo, std::uint64_t hi) {
        KahanSum s;
        for (std::uint64_t i = lo; i < hi; ++i)
          s += li(xd / static_cast<double>(ps[i]));
        return s.value();
      });
}

EvalGrid EvalGrid::geometric(std::uint64_t from, std::uint64_t to,
                             int points) {
  if (from < 3) throw std::invalid_argument("EvalGrid: need from >= 3");
  if (to < from) throw std::invalid_argument("EvalGrid: need to >= from");
  if (points < 2) throw std::invalid_argument("EvalGrid: need points >= 2");
  EvalGrid g;
  g.from = from;
  g.to = to;
  g.points = points;
  double la = std::log(static_cast<double>(from));
  double lb = std::log(static_cast<double>(to));
  for (int i = 0; i < points; ++i) {
    double u = la + (lb - la) * static_cast<double>(i) /
                        static_cast<double>(points - 1);
    std::uint64_t v =
        static_cast<std::uint64_t>(std::llround(std::exp(u)));
    v = std::clamp(v, from, to);
    if (i == 0) v = from;
    if (i == points - 1) v = to;
    if (g.values.empty() || v > g.values.back()) g.values.push_back(v);
  }
  if (g.values.back() != to) g.values.push_back(to);
  return g;
}

std::optional<Claim> parse_claim(std::string_view name) {
  if (name == "theorem-master") return Claim::theorem_master;
  if (name == "landau") return Claim::landau;
  if (name == "chebyshev") return Claim::chebyshev;
  if (name == "cor1") return Claim::cor1;
  if (name == "cor2") return Claim::cor2;
  if (name == "cor3") return Claim::cor3;
  if (name == "moment") return Claim::moment;
  return std::nullopt;
}

double log_log(std::uint64_t x) {
  return std::log(std::log(static_cast<double>(x)));
}

TrendSeries trend_series(Claim claim, const EvalGrid& grid, int m) {
  TrendSeries out;
  switch (claim) {
    case Claim::theorem_master:
      out.claim = "theorem-master";
      break;
    case Claim::landau:
      out.claim = "landau";
      break;
    case Claim::chebyshev:
      out.claim = "chebyshev";
      break;
    case Claim::cor1:
      out.claim = "cor1";
      break;
    case Claim::cor2:
      out.claim = "cor2";
      break;
    case Claim::cor3:
      out.claim = "cor3";
      break;
    case Claim::moment:
      if (m < 1) throw std::invalid_argument("trend_series: need m >= 1");
      out.claim = "moment-" + std::to_string(m);
      break;
  }
  out.rows.reserve(grid.values.size());
  for (std::uint64_t x : grid.values) {
    TrendRow row;
    row.x = x;
    double xd = static_cast<double>(x);
    double lx = std::log(xd);
    double llx = log_log(x);
    switch (claim) {
      case Claim::theorem_master:
        row.value = sum_upsilon(x);
        row.reference = xd * llx;
        break;
      case Claim::landau:
        row.value = static_cast<double>(pi_two(x));
        row.reference = xd * llx / lx;
        break;
      case Claim::chebyshev:
        row.value = theta(x);
        row.reference = xd;
        break;
      case Claim::cor1:
        row.value = cor1_sum(x);
        row.reference = llx;
        break;
      case Claim::cor2:
        row.value = cor2_sum(x);
        row.reference = xd * llx;
        break;
      case Claim::cor3:
        row.value = cor3_sum(x);
        row.reference = xd * llx / lx;
        break;
      case Claim::moment:
        row.value = moment_sum(x, m);
        row.reference = llx;
        break;
    }
    row.ratio = row.reference > 0.0 ? row.value / row.reference : 0.0;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace upsilon
