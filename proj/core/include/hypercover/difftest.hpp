#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercover/hypergraph.hpp"
#include "hypercover/prng.hpp"

namespace hypercover {

// Seeded random-corpus configuration for differential testing. When m is
// unset, each trial draws m uniformly from {2, 3}.
struct DiffTestConfig {
  int trials = 200;
  std::uint64_t seed = 1;
  int max_n = 7;
  std::optional<int> m;
  int max_e = 8;
  SearchLimits limits;
};

struct DiffInstance {
  int trial = 0;
  std::uint64_t instance_seed = 0;
  Hypergraph hypergraph;
};

// Draws trial parameters from the master stream in a fixed order (m if
// unset, then n, then e, then the instance seed) so corpora are reproducible.
DiffInstance draw_instance(int trial, Xorshift64Star& master,
                           const DiffTestConfig& cfg);

// Runs every cross-route agreement invariant on one instance and returns the
// failures (empty means all hold): criterion vs oracle prime sets, the
// independent-set characterization of embedded-freeness, the 2-uniform
// bipartite/odd-cycle equivalences, the balancedness implication, induced
// 2-cover validity, 2-cover reduction, and embedded-witness validity.
std::vector<std::string> check_instance(const Hypergraph& h,
                                        const SearchLimits& limits = {});

}  // namespace hypercover
