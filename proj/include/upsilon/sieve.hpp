#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace upsilon {

// Default sieve/scan window: 2^20 integers, sized so the per-segment arrays
// stay in L2-sized working sets. Configurable at the call sites that matter.
inline constexpr std::uint64_t kDefaultSegmentSize = 1ULL << 20;

std::uint64_t isqrt(std::uint64_t n);
bool is_prime(std::uint64_t n);

// Ascending list of all primes <= limit.
struct PrimeList {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
};

PrimeList primes_up_to(std::uint64_t limit);

// Half-open window [lo, hi) annotated with Omega(n), the number of prime
// factors counted with multiplicity, for every n in it. Omega is stored as
// an 8-bit saturating counter (Omega(n) <= 64 below 2^64, so saturation is
// unreachable at supported scales).
struct SieveSegment {
  std::uint64_t lo = 2;
  std::uint64_t hi = 3;
  std::vector<std::uint8_t> omega;  // omega[n - lo] = Omega(n)
};

// Requires base.limit >= isqrt(hi - 1). Divides out each base prime's powers
// per element; a surviving cofactor > 1 counts as one extra factor.
SieveSegment omega_segment(std::uint64_t lo, std::uint64_t hi,
                           const PrimeList& base);

// Chebyshev theta: sum of log p over primes p <= x, natural log, compensated
// summation over ascending primes.
double theta(std::uint64_t x);

// Count of n <= x with Omega(n) = 2.
std::uint64_t pi_two(std::uint64_t x);

// theta evaluated at every threshold floor(x/k) in one ascending prime
// sweep. theta_values is aligned with divisors.
struct ThresholdSweepResult {
  std::uint64_t x = 0;
  std::vector<std::uint64_t> divisors;
  std::vector<double> theta_values;
  double theta_for(std::uint64_t k) const;
};

ThresholdSweepResult theta_at_points(std::uint64_t x,
                                     std::vector<std::uint64_t> divisors);

// One-sweep batch counters; results aligned with the input thresholds.
std::vector<std::uint64_t> pi_at_points(
    const std::vector<std::uint64_t>& thresholds);
std::vector<std::uint64_t> pi_two_at_points(
    const std::vector<std::uint64_t>& thresholds);

// pi(x) by segmented sieve.
std::uint64_t pi_sieve(std::uint64_t x);

namespace detail {

// Simple sieve for the base primes <= limit.
std::vector<std::uint32_t> base_primes(std::uint64_t limit);

// Index order that visits thresholds ascending (identity if already sorted).
std::vector<std::uint32_t> ascending_order(
    const std::vector<std::uint64_t>& v);

}  // namespace detail

// Segmented ascending prime traversal over [lo, hi] inclusive. Odd-only
// storage; memory O(sqrt(hi) + segment size).
template <class F>
void for_each_prime_in(std::uint64_t lo, std::uint64_t hi, F&& f) {
  if (hi < 2 || hi < lo) return;
  if (lo < 2) lo = 2;
  if (lo == 2) {
    f(std::uint64_t{2});
    lo = 3;
    if (lo > hi) return;
  }
  if (lo % 2 == 0) {
    ++lo;
    if (lo > hi) return;
  }
  auto base = detail::base_primes(isqrt(hi));
  const std::uint64_t seg =
      std::min<std::uint64_t>(kDefaultSegmentSize, (hi - lo) / 2 + 1);
  std::vector<std::uint8_t> flags(seg);
  for (std::uint64_t low = lo; low <= hi; low += 2 * seg) {
    std::uint64_t high = std::min(hi, low + 2 * seg - 2);
    std::size_t n = static_cast<std::size_t>((high - low) / 2 + 1);
    std::fill(flags.begin(), flags.begin() + n, std::uint8_t{1});
    for (std::uint32_t bp : base) {
      std::uint64_t p = bp;
      if (p == 2) continue;
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t m = start; m <= high; m += 2 * p)
        flags[static_cast<std::size_t>((m - low) / 2)] = 0;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (flags[i]) f(low + 2 * i);
  }
}

template <class F>
void for_each_prime(std::uint64_t hi, F&& f) {
  for_each_prime_in(2, hi, std::forward<F>(f));
}

}  // namespace upsilon
