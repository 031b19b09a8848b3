#pragma once

#include <stdexcept>

namespace upsilon {

// Thrown when an argument exceeds a configured capacity cap (see Caps and
// the UPSILON_MAX_X environment variable).
class capacity_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace upsilon
