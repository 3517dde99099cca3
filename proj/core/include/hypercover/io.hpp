#pragma once

#include <string>

#include "hypercover/ass_primes.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/monomial_ideal.hpp"

namespace hypercover {

// Hypergraph JSON: {"n": int, "m": int, "edges": [[int,...],...]}, 1-indexed
// and order-insensitive on input; serialization is canonical (edges sorted
// lexicographically). Unknown keys are ignored on input.
std::string to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

// Ideal JSON: {"n": int, "generators": [[int,...],...]} exponent vectors.
std::string to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const std::string& text);

// AssProfile JSON: {"power": k, "minimal": [[vars]...],
// "embedded": [{"prime": [vars], "witness": [ints]|null}...]},
// canonically sorted.
std::string to_json(const AssProfile& profile);

// Macaulay2 script declaring QQ[x_1..x_n] and the edge ideal as a
// monomialIdeal, for third-party cross-checks.
std::string macaulay2_script(const Hypergraph& h);

}  // namespace hypercover
