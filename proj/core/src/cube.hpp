#pragma once

// Internal helpers for scans over the grid {0..radix-1}^n. Points are
// indexed in mixed radix with the first coordinate most significant, so
// ascending index order is ascending lexicographic order of the vectors.

#include <cstdint>
#include <vector>

#include "hypercover/errors.hpp"

namespace hypercover::detail {

struct Cube {
  int n = 0;
  int radix = 0;
  std::uint64_t size = 0;
  std::vector<std::uint64_t> stride;  // stride[i] = radix^(n-1-i)

  Cube(int n_, int radix_, std::uint64_t max_points) : n(n_), radix(radix_) {
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) {
      if (s > max_points / static_cast<std::uint64_t>(radix)) {
        throw GuardLimitError("enumeration space " + std::to_string(radix) +
                              "^" + std::to_string(n) +
                              " exceeds the limit of " +
                              std::to_string(max_points) + " points");
      }
      s *= static_cast<std::uint64_t>(radix);
    }
    size = s;
    stride.resize(n);
    std::uint64_t t = 1;
    for (int i = n - 1; i >= 0; --i) {
      stride[i] = t;
      t *= static_cast<std::uint64_t>(radix);
    }
  }

  std::uint64_t index(const std::vector<int>& v) const {
    std::uint64_t idx = 0;
    for (int i = 0; i < n; ++i) idx += static_cast<std::uint64_t>(v[i]) * stride[i];
    return idx;
  }
};

// Marks every point dominating a marked point (coordinatewise >=), one
// dimension at a time.
inline void upward_close(const Cube& c, std::vector<std::uint8_t>& bits) {
  for (int d = 0; d < c.n; ++d) {
    const std::uint64_t s = c.stride[d];
    const std::uint64_t block = s * static_cast<std::uint64_t>(c.radix);
    for (std::uint64_t hi = 0; hi < c.size; hi += block) {
      for (int dg = 1; dg < c.radix; ++dg) {
        const std::uint64_t base = hi + static_cast<std::uint64_t>(dg) * s;
        for (std::uint64_t lo = 0; lo < s; ++lo) {
          bits[base + lo] = static_cast<std::uint8_t>(bits[base + lo] |
                                                      bits[base + lo - s]);
        }
      }
    }
  }
}

// Advances v through the cube in index order; false once exhausted.
inline bool advance(const Cube& c, std::vector<int>& v) {
  int i = c.n - 1;
  while (i >= 0 && v[i] == c.radix - 1) v[i--] = 0;
  if (i < 0) return false;
  ++v[i];
  return true;
}

}  // namespace hypercover::detail
