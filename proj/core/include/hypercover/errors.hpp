#pragma once

#include <cstdint>
#include <stdexcept>

namespace hypercover {

// Thrown when an enumeration space exceeds the configured budget. Guards are
// hard errors, never silent truncation.
struct GuardLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when two independent computation routes disagree. This always
// signals an implementation bug, never bad input.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// Budget for point-enumeration searches (witness scans, oracle cubes,
// symbolic-power enumeration). The default matches the documented guard.
struct SearchLimits {
  std::uint64_t max_points = std::uint64_t{1} << 24;
};

}  // namespace hypercover
