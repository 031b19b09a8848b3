#pragma once

#include <cstdint>

namespace upsilon {

// Capacity caps for the expensive paths. Defaults: 1e9 for the table-backed
// identity path, 1e7 for the direct Omega scan, 1e8 for the quadrature sum.
// UPSILON_MAX_X overrides the identity cap; the other two caps keep their
// default ratio to it.
struct Caps {
  std::uint64_t identity = 1'000'000'000ULL;
  std::uint64_t direct = 10'000'000ULL;
  std::uint64_t cor3 = 100'000'000ULL;
};

Caps& caps();

// Crossover between the direct scan and the table-backed identity path.
inline constexpr std::uint64_t kDirectIdentityCrossover = 10'000'000ULL;

}  // namespace upsilon
