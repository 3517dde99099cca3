#pragma once

#include <optional>
#include <vector>

#include "hypercover/cover.hpp"
#include "hypercover/hypergraph.hpp"
#include "hypercover/monomial_ideal.hpp"

namespace hypercover {

// A monomial prime is determined by its variable index set; the height is
// the cardinality.
using MonomialPrime = VertexSet;

struct WitnessedPrime {
  MonomialPrime prime;
  // For embedded primes of the dual square: a 2-cover that is not a sum of
  // two 1-covers, whose single-entry bumps inside the prime all split and
  // whose saturated bump outside does not. Absent for criterion-only paths.
  std::optional<CoverVector> witness;

  friend bool operator==(const WitnessedPrime&, const WitnessedPrime&) = default;
};

struct AssProfile {
  int power = 2;
  std::vector<MonomialPrime> minimal;     // canonical order
  std::vector<WitnessedPrime> embedded;   // by (height, variable set)

  std::vector<MonomialPrime> prime_set() const;
};

// By (height, then variable set).
bool canonical_prime_less(const MonomialPrime& a, const MonomialPrime& b);

// One prime per edge.
std::vector<MonomialPrime> minimal_primes(const Hypergraph& h);

// Witness search over {0,1,2}^n: keep 2-covers C that do not split into two
// 1-covers, read off S(C) = { i : C + e_i splits }, and accept the prime on
// S(C) when S(C) is non-empty and the bump of C by 2 on the complement of
// S(C) still does not split (which certifies the full colon equality; see
// the docs for the truncation and monotonicity facts this rests on). The
// first witness found per prime is kept, so witnesses are lexicographically
// least. Guard: 3^n points.
std::vector<WitnessedPrime> embedded_primes(const Hypergraph& h,
                                            const SearchLimits& limits = {});

// minimal_primes + embedded_primes at power 2.
AssProfile ass_square(const Hypergraph& h, const SearchLimits& limits = {});

// Independent oracle over an arbitrary monomial ideal: scans every monomial
// z with exponents <= expbound, and reports (prime on S, witness z) whenever
// z is outside the ideal, S = { i : x_i z inside } is non-empty, and the
// saturation of z outside S stays outside. Uses only divisibility
// membership. Requires expbound >= every generator exponent; guard:
// (expbound+1)^n points.
std::vector<WitnessedPrime> ass_oracle(const MonomialIdeal& ideal, int expbound,
                                       const SearchLimits& limits = {});

// ass_oracle over dual_power_ordinary(h, k) with expbound k, partitioned
// into the edge primes and the rest. k in {1,2,3}.
AssProfile ass_dual_power(const Hypergraph& h, int k,
                          const SearchLimits& limits = {});

// The 2-uniform criterion: edge primes plus one prime per induced odd cycle
// (no witnesses). Requires m == 2.
AssProfile graph_ass_criterion(const Hypergraph& g);

struct PrimeCheck {
  bool associated = false;
  std::optional<CoverVector> witness;
};

// Membership of a single prime in the associated set of the dual square,
// decided on the induced subhypergraph: at height m the prime must be an
// edge; above that, the witness search runs on the induced subhypergraph
// restricted to candidates whose bump set is everything, and the witness is
// translated back (entries 2 outside the prime). Equivalent to membership in
// ass_square(h) at much lower cost.
PrimeCheck is_prime_associated(const Hypergraph& h, const MonomialPrime& p,
                               const SearchLimits& limits = {});

}  // namespace hypercover
