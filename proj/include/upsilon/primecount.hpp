#pragma once

#include <cstdint>
#include <vector>

namespace upsilon {

// pi at every distinct value floor(x/k), built by the square-root
// decomposition dynamic program. small[v] holds pi(v) for v <= sqrt(x);
// large[k] holds pi(floor(x/k)) for k <= sqrt(x). The sqrt(x) boundary
// point itself is served from small.
struct PrimeCountTable {
  std::uint64_t x = 1;
  std::uint64_t sqrt_x = 1;
  std::vector<std::int64_t> small;  // index v = 0..sqrt_x
  std::vector<std::int64_t> large;  // index k = 0..sqrt_x (0 unused)

  // v must be a hyperbola point, i.e. floor(x/k) for some k >= 1.
  std::int64_t lookup(std::uint64_t v) const;
};

// ~O(x^{3/4}) time, O(sqrt x) memory.
PrimeCountTable build_prime_count_table(std::uint64_t x);

// Exact pi(x): segmented sieve below the crossover, table lookup above.
std::uint64_t pi(std::uint64_t x);

}  // namespace upsilon
