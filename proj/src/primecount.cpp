#include "upsilon/primecount.hpp"

#include <stdexcept>
#include <string>

#include "upsilon/config.hpp"
#include "upsilon/errors.hpp"
#include "upsilon/sieve.hpp"

namespace upsilon {

std::int64_t PrimeCountTable::lookup(std::uint64_t v) const {
  if (v < 1) throw std::domain_error("PrimeCountTable::lookup: v < 1");
  if (v <= sqrt_x) return small[static_cast<std::size_t>(v)];
  std::uint64_t k = x / v;
  if (x / k != v)
    throw std::domain_error("PrimeCountTable::lookup: " + std::to_string(v) +
                            " is not a hyperbola point of x = " +
                            std::to_string(x));
  return large[static_cast<std::size_t>(k)];
}

PrimeCountTable build_prime_count_table(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("build_prime_count_table: x < 1");
  if (x > caps().identity)
    throw capacity_error("build_prime_count_table: x = " + std::to_string(x) +
                         " exceeds cap " + std::to_string(caps().identity));
  PrimeCountTable t;
  t.x = x;
  std::uint64_t r = isqrt(x);
  t.sqrt_x = r;
  t.small.resize(static_cast<std::size_t>(r) + 1);
  t.large.resize(static_cast<std::size_t>(r) + 1);
  for (std::uint64_t v = 1; v <= r; ++v)
    t.small[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(v - 1);
  t.large[0] = 0;
  for (std::uint64_t k = 1; k <= r; ++k)
    t.large[static_cast<std::size_t>(k)] =
        static_cast<std::int64_t>(x / k - 1);

  // S(v) <- S(v) - (S(v/q) - S(q-1)) for each prime q ascending, covered
  // v >= q^2. After processing all q <= sqrt(x), S(v) = pi(v).
  for (std::uint64_t q = 2; q <= r; ++q) {
    if (t.small[static_cast<std::size_t>(q)] ==
        t.small[static_cast<std::size_t>(q - 1)])
      continue;  // q composite
    std::int64_t sq = t.small[static_cast<std::size_t>(q - 1)];
    std::uint64_t qq = q * q;
    std::uint64_t kmax = std::min(r, x / qq);
    for (std::uint64_t k = 1; k <= kmax; ++k) {
      std::uint64_t u = x / k / q;  // floor(x / (k q))
      std::int64_t inner = (u <= r)
                               ? t.small[static_cast<std::size_t>(u)]
                               : t.large[static_cast<std::size_t>(x / u)];
      t.large[static_cast<std::size_t>(k)] -= inner - sq;
    }
    for (std::uint64_t v = r; v >= qq; --v)
      t.small[static_cast<std::size_t>(v)] -=
          t.small[static_cast<std::size_t>(v / q)] - sq;
  }
  return t;
}

std::uint64_t pi(std::uint64_t x) {
  if (x < 2) return 0;
  if (x <= kDirectIdentityCrossover) return pi_sieve(x);
  PrimeCountTable t = build_prime_count_table(x);
  return static_cast<std::uint64_t>(t.lookup(x));
}

}  // namespace upsilon
