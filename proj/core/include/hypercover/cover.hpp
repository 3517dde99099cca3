#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hypercover/hypergraph.hpp"

namespace hypercover {

// Nonnegative integer weight per vertex. Doubles as a monomial exponent
// vector under the cover <-> monomial correspondence, so the same layout is
// shared with Monomial.
using CoverVector = std::vector<int>;

// Canonical order for listings of covers and monomial generators: total
// degree ascending, ties broken by descending lexicographic comparison of
// the entries (x1 heaviest). This is the order every canonical list in the
// library uses.
bool canonical_exponent_less(const CoverVector& a, const CoverVector& b);

// True iff v is nonzero and every edge's entry sum is >= k. k = 0 asks only
// for v nonzero. The zero vector is never a k-cover.
bool is_k_cover(const Hypergraph& h, const CoverVector& v, int k);

// All inclusion-minimal 0/1 vectors whose support meets every edge (the
// irreducible 1-covers), in canonical order.
std::vector<CoverVector> minimal_vertex_covers(const Hypergraph& h);

// Splits a k-cover into k parts that are each 1-covers and sum exactly to x,
// or reports that no such split exists. The first part ranges over minimal
// covers in canonical order (any 1-cover dominates a minimal cover, and
// surplus can be absorbed into the remainder, so this search is complete);
// the first hit gives the canonically least decomposition.
std::optional<std::vector<CoverVector>> decompose_into_one_covers(
    const Hypergraph& h, const CoverVector& x, int k);

// The 2-cover induced by an independent set S: 0 on S, 2 on N(S), 1
// elsewhere.
CoverVector cover_from_independent(const Hypergraph& h, const VertexSet& s);

struct EmbeddedFreeResult {
  bool embedded_free = false;
  std::optional<VertexSet> counterexample;  // first failing S when not free
};

// True iff the induced 2-cover of every independent set (the empty set
// included) splits into two 1-covers.
EmbeddedFreeResult embedded_free_by_independent_sets(const Hypergraph& h);

// Writes a 2-cover w as A + y where A is the induced cover of the
// independent set S = { i : w_i = 0 } and y >= 0. y is zero exactly when w
// is already an induced cover.
std::pair<VertexSet, CoverVector> reduce_two_cover(const Hypergraph& h,
                                                   const CoverVector& w);

namespace detail {

// decompose_into_one_covers against a precomputed minimal-cover list, for
// callers that split many vectors over the same hypergraph. Returns nullopt
// instead of throwing when x is not a k-cover.
std::optional<std::vector<CoverVector>> decompose_given_covers(
    const Hypergraph& h, const std::vector<CoverVector>& covers,
    const CoverVector& x, int k);

}  // namespace detail

}  // namespace hypercover
