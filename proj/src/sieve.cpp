#include "upsilon/sieve.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "upsilon/config.hpp"
#include "upsilon/kahan.hpp"
#include "upsilon/parallel.hpp"

namespace upsilon {

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t r =
      static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  std::vector<std::uint32_t> ps;
  if (limit < 2) return ps;
  std::vector<std::uint8_t> comp(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (comp[static_cast<std::size_t>(i)]) continue;
    ps.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i)
      comp[static_cast<std::size_t>(j)] = 1;
  }
  return ps;
}

std::vector<std::uint32_t> ascending_order(
    const std::vector<std::uint64_t>& v) {
  std::vector<std::uint32_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0u);
  if (std::is_sorted(v.begin(), v.end())) return idx;
  if (std::is_sorted(v.rbegin(), v.rend())) {
    std::reverse(idx.begin(), idx.end());
    return idx;
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::uint32_t a, std::uint32_t b) {
                     return v[a] < v[b];
                   });
  return idx;
}

}  // namespace detail

PrimeList primes_up_to(std::uint64_t limit) {
  PrimeList out;
  out.limit = limit;
  if (limit >= 2) {
    double d = static_cast<double>(limit);
    if (limit >= 17)
      out.primes.reserve(static_cast<std::size_t>(1.2 * d / std::log(d)) + 8);
    for_each_prime(limit, [&](std::uint64_t p) { out.primes.push_back(p); });
  }
  return out;
}

SieveSegment omega_segment(std::uint64_t lo, std::uint64_t hi,
                           const PrimeList& base) {
  if (lo < 2 || hi <= lo)
    throw std::invalid_argument("omega_segment: need 2 <= lo < hi");
  std::uint64_t need = isqrt(hi - 1);
  if (base.limit < need)
    throw std::invalid_argument(
        "omega_segment: base prime list covers " +
        std::to_string(base.limit) + " but sqrt(hi-1) = " +
        std::to_string(need));
  std::size_t n = static_cast<std::size_t>(hi - lo);
  SieveSegment seg;
  seg.lo = lo;
  seg.hi = hi;
  seg.omega.assign(n, 0);
  std::vector<std::uint64_t> residual(n);
  std::iota(residual.begin(), residual.end(), lo);
  for (std::uint64_t p : base.primes) {
    if (p > need) break;
    std::uint64_t first = ((lo + p - 1) / p) * p;
    for (std::uint64_t m = first; m < hi; m += p) {
      std::size_t i = static_cast<std::size_t>(m - lo);
      while (residual[i] % p == 0) {
        residual[i] /= p;
        if (seg.omega[i] < 255) ++seg.omega[i];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (residual[i] > 1 && seg.omega[i] < 255) ++seg.omega[i];
  return seg;
}

double theta(std::uint64_t x) {
  KahanSum s;
  for_each_prime(x, [&](std::uint64_t p) {
    s += std::log(static_cast<double>(p));
  });
  return s.value();
}

namespace {

// Scan n = lo..hi-1 in windows, invoking f(segment) per window.
template <class F>
void omega_scan(std::uint64_t lo, std::uint64_t hi, const PrimeList& base,
                F&& f) {
  for (std::uint64_t w = lo; w < hi; w += kDefaultSegmentSize) {
    std::uint64_t whi = std::min(hi, w + kDefaultSegmentSize);
    f(omega_segment(w, whi, base));
  }
}

}  // namespace

std::uint64_t pi_two(std::uint64_t x) {
  if (x < 4) return 0;
  PrimeList base = primes_up_to(isqrt(x));
  return parallel_block_count(
      2, x + 1, 1ULL << 22, [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t c = 0;
        omega_scan(lo, hi, base, [&](const SieveSegment& seg) {
          for (std::uint8_t o : seg.omega) c += (o == 2);
        });
        return c;
      });
}

ThresholdSweepResult theta_at_points(std::uint64_t x,
                                     std::vector<std::uint64_t> divisors) {
  if (x < 2) throw std::invalid_argument("theta_at_points: need x >= 2");
  for (std::uint64_t k : divisors)
    if (k < 1) throw std::invalid_argument("theta_at_points: need k >= 1");
  ThresholdSweepResult out;
  out.x = x;
  out.divisors = std::move(divisors);
  out.theta_values.assign(out.divisors.size(), 0.0);
  if (out.divisors.empty()) return out;

  // Visit thresholds floor(x/k) ascending, i.e. divisors descending.
  std::vector<std::uint32_t> order;
  {
    std::vector<std::uint64_t> thr(out.divisors.size());
    for (std::size_t i = 0; i < thr.size(); ++i) thr[i] = x / out.divisors[i];
    order = detail::ascending_order(thr);
  }
  std::uint64_t max_thr = x / out.divisors[order.back()];

  KahanSum running;
  std::size_t i = 0;
  for_each_prime(max_thr, [&](std::uint64_t p) {
    while (i < order.size() && x / out.divisors[order[i]] < p) {
      out.theta_values[order[i]] = running.value();
      ++i;
    }
    running += std::log(static_cast<double>(p));
  });
  for (; i < order.size(); ++i) out.theta_values[order[i]] = running.value();
  return out;
}

double ThresholdSweepResult::theta_for(std::uint64_t k) const {
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (divisors[i] == k) return theta_values[i];
  throw std::domain_error("theta_for: divisor " + std::to_string(k) +
                          " not in sweep");
}

std::vector<std::uint64_t> pi_at_points(
    const std::vector<std::uint64_t>& thresholds) {
  std::vector<std::uint64_t> out(thresholds.size(), 0);
  if (thresholds.empty()) return out;
  auto order = detail::ascending_order(thresholds);
  std::uint64_t max_thr = thresholds[order.back()];
  std::uint64_t count = 0;
  std::size_t i = 0;
  for_each_prime(max_thr, [&](std::uint64_t p) {
    while (i < order.size() && thresholds[order[i]] < p) {
      out[order[i]] = count;
      ++i;
    }
    ++count;
  });
  for (; i < order.size(); ++i) out[order[i]] = count;
  return out;
}

std::vector<std::uint64_t> pi_two_at_points(
    const std::vector<std::uint64_t>& thresholds) {
  std::vector<std::uint64_t> out(thresholds.size(), 0);
  if (thresholds.empty()) return out;
  auto order = detail::ascending_order(thresholds);
  std::uint64_t max_thr = thresholds[order.back()];
  std::size_t i = 0;
  while (i < order.size() && thresholds[order[i]] < 4) out[order[i++]] = 0;
  if (max_thr < 4) return out;

  PrimeList base = primes_up_to(isqrt(max_thr));
  std::uint64_t count = 0;
  omega_scan(2, max_thr + 1, base, [&](const SieveSegment& seg) {
    for (std::uint64_t n = seg.lo; n < seg.hi; ++n) {
      while (i < order.size() && thresholds[order[i]] < n) {
        out[order[i]] = count;
        ++i;
      }
      count += (seg.omega[static_cast<std::size_t>(n - seg.lo)] == 2);
    }
  });
  for (; i < order.size(); ++i) out[order[i]] = count;
  return out;
}

std::uint64_t pi_sieve(std::uint64_t x) {
  std::uint64_t c = 0;
  for_each_prime(x, [&](std::uint64_t) { ++c; });
  return c;
}

}  // namespace upsilon
