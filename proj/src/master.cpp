#include "upsilon/master.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "upsilon/config.hpp"
#include "upsilon/errors.hpp"
#include "upsilon/kahan.hpp"
#include "upsilon/parallel.hpp"
#include "upsilon/primecount.hpp"
#include "upsilon/sieve.hpp"

namespace upsilon {

const char* to_string(UpsilonKind k) {
  switch (k) {
    case UpsilonKind::prime_square:
      return "prime-square";
    case UpsilonKind::distinct_semiprime:
      return "distinct-semiprime";
    case UpsilonKind::zero:
      return "zero";
  }
  return "zero";
}

UpsilonValue upsilon(std::uint64_t n) {
  UpsilonValue v;
  v.n = n;
  if (n < 4) return v;
  std::uint64_t r = isqrt(n);
  if (r * r == n && is_prime(r)) {
    v.value = std::log(static_cast<double>(r));
    v.kind = UpsilonKind::prime_square;
    return v;
  }
  // smallest prime factor by trial division; integer sqrt bound, never a
  // floating-point root
  std::uint64_t p = 0;
  if (n % 2 == 0) {
    p = 2;
  } else {
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) {
        p = d;
        break;
      }
    }
  }
  if (p == 0) return v;  // n prime
  std::uint64_t m = n / p;
  if (m != p && is_prime(m)) {
    v.value = std::log(static_cast<double>(n));
    v.kind = UpsilonKind::distinct_semiprime;
  }
  return v;
}

namespace {

// Upsilon restricted to n with Omega(n) = 2: log n for pq with p != q,
// (1/2) log n for p^2 (a perfect square with Omega = 2 is a prime square).
inline double upsilon_semiprime_term(std::uint64_t n) {
  std::uint64_t r = isqrt(n);
  double ln = std::log(static_cast<double>(n));
  return (r * r == n) ? 0.5 * ln : ln;
}

}  // namespace

double sum_upsilon_direct(std::uint64_t x) {
  if (x > caps().direct)
    throw capacity_error("sum_upsilon_direct: x = " + std::to_string(x) +
                         " exceeds cap " + std::to_string(caps().direct));
  if (x < 4) return 0.0;
  PrimeList base = primes_up_to(isqrt(x));
  return parallel_block_sum(
      2, x + 1, 1ULL << 22, [&](std::uint64_t lo, std::uint64_t hi) {
        KahanSum s;
        for (std::uint64_t w = lo; w < hi; w += kDefaultSegmentSize) {
          SieveSegment seg =
              omega_segment(w, std::min(hi, w + kDefaultSegmentSize), base);
          for (std::uint64_t n = seg.lo; n < seg.hi; ++n)
            if (seg.omega[static_cast<std::size_t>(n - seg.lo)] == 2)
              s += upsilon_semiprime_term(n);
        }
        return s.value();
      });
}

std::vector<double> sum_upsilon_direct_many(
    const std::vector<std::uint64_t>& xs) {
  std::vector<double> out(xs.size(), 0.0);
  if (xs.empty()) return out;
  auto order = detail::ascending_order(xs);
  std::uint64_t max_x = xs[order.back()];
  if (max_x > caps().direct)
    throw capacity_error("sum_upsilon_direct_many: x = " +
                         std::to_string(max_x) + " exceeds cap " +
                         std::to_string(caps().direct));
  std::size_t i = 0;
  while (i < order.size() && xs[order[i]] < 4) out[order[i++]] = 0.0;
  if (max_x < 4) return out;

  PrimeList base = primes_up_to(isqrt(max_x));
  KahanSum s;
  for (std::uint64_t w = 2; w <= max_x; w += kDefaultSegmentSize) {
    SieveSegment seg =
        omega_segment(w, std::min(max_x + 1, w + kDefaultSegmentSize), base);
    for (std::uint64_t n = seg.lo; n < seg.hi; ++n) {
      while (i < order.size() && xs[order[i]] < n) {
        out[order[i]] = s.value();
        ++i;
      }
      if (seg.omega[static_cast<std::size_t>(n - seg.lo)] == 2)
        s += upsilon_semiprime_term(n);
    }
  }
  for (; i < order.size(); ++i) out[order[i]] = s.value();
  return out;
}

double sum_upsilon_identity(std::uint64_t x) {
  if (x > caps().identity)
    throw capacity_error("sum_upsilon_identity: x = " + std::to_string(x) +
                         " exceeds cap " + std::to_string(caps().identity));
  if (x < 4) return 0.0;
  PrimeCountTable table = build_prime_count_table(x);
  // primes p with 2p <= x, i.e. p <= floor(x/2)
  std::uint64_t pmax = x / 2;
  return parallel_block_sum(
      2, pmax + 1, 1ULL << 24, [&](std::uint64_t lo, std::uint64_t hi) {
        KahanSum s;
        for_each_prime_in(lo, hi - 1, [&](std::uint64_t p) {
          s += static_cast<double>(table.lookup(x / p)) *
               std::log(static_cast<double>(p));
        });
        return s.value();
      });
}

double sum_upsilon(std::uint64_t x) {
  std::uint64_t crossover = std::min(caps().direct, kDirectIdentityCrossover);
  return x <= crossover ? sum_upsilon_direct(x) : sum_upsilon_identity(x);
}

double reference_xloglog(std::uint64_t x) {
  if (x < 3) return std::numeric_limits<double>::quiet_NaN();
  double xd = static_cast<double>(x);
  return xd * std::log(std::log(xd));
}

SummationReport verify_identity(std::uint64_t x) {
  if (x < 2) throw std::invalid_argument("verify_identity: need x >= 2");
  SummationReport r;
  r.x = x;
  r.direct = sum_upsilon_direct(x);
  r.identity = sum_upsilon_identity(x);
  r.abs_diff = std::abs(r.direct - r.identity);
  r.rel_diff = r.abs_diff / std::max(r.direct, 1.0);
  r.reference = reference_xloglog(x);
  r.ratio = r.direct / r.reference;
  return r;
}

}  // namespace upsilon
