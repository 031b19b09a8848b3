#include "upsilon/config.hpp"

#include <algorithm>
#include <cstdlib>

namespace upsilon {

Caps& caps() {
  static Caps c = [] {
    Caps c;
    if (const char* e = std::getenv("UPSILON_MAX_X")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(e, &end, 10);
      if (end && *end == '\0' && v >= 1) {
        c.identity = v;
        c.direct = std::max<std::uint64_t>(v / 100, 16);
        c.cor3 = std::max<std::uint64_t>(v / 10, 16);
      }
    }
    return c;
  }();
  return c;
}

}  // namespace upsilon
