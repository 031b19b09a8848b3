#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace upsilon {

enum class UpsilonKind { prime_square, distinct_semiprime, zero };

const char* to_string(UpsilonKind k);

// Point value of the master function: log p if n = p^2, log(pq) if n = pq
// with p != q prime, 0 otherwise. n in {0, 1} returns zero so partial sums
// need no special-casing.
struct UpsilonValue {
  std::uint64_t n = 0;
  double value = 0.0;
  UpsilonKind kind = UpsilonKind::zero;
};

UpsilonValue upsilon(std::uint64_t n);

// Partial sum S(x) = sum of Upsilon(n) for n <= x, by the segmented Omega
// scan. Oracle of record below the crossover.
double sum_upsilon_direct(std::uint64_t x);

// S(x) at many thresholds from one scan; results aligned with xs.
std::vector<double> sum_upsilon_direct_many(
    const std::vector<std::uint64_t>& xs);

// S(x) as sum over primes 2p <= x of pi(floor(x/p)) log p, served by one
// prime-count table. Production path above the crossover.
double sum_upsilon_identity(std::uint64_t x);

// Crossover dispatch.
double sum_upsilon(std::uint64_t x);

// x log log x, natural logs; NaN below 3.
double reference_xloglog(std::uint64_t x);

struct SummationReport {
  std::uint64_t x = 0;
  double direct = 0.0;
  double identity = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double reference = 0.0;  // NaN when x < 3
  double ratio = 0.0;      // direct / reference; NaN when x < 3

  bool passed(double tol = 1e-8) const { return rel_diff <= tol; }
};

// Both summation paths at one x; a tolerance miss is reported in the
// result, not thrown.
SummationReport verify_identity(std::uint64_t x);

}  // namespace upsilon
