#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hypercover/errors.hpp"

namespace hypercover {

// Vertices are the 1-based indices 1..n throughout; a VertexSet is kept
// sorted ascending with no repeats.
using VertexSet = std::vector<int>;

// An m-uniform hypergraph on vertices 1..n. Edges are m-element vertex sets,
// each stored sorted ascending, deduplicated, and ordered lexicographically.
// Values are immutable after construction.
class Hypergraph {
 public:
  // Validates and canonicalizes. Rejects edges of the wrong cardinality,
  // repeated or out-of-range vertices, duplicate edges, an empty edge set,
  // and n < m or m < 2. Input edge order is irrelevant.
  Hypergraph(int n, int m, std::vector<VertexSet> edges);

  int vertex_count() const { return n_; }
  int uniformity() const { return m_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(const VertexSet& e) const;

  // Bitmask per edge, bit (v-1) set for vertex v. Requires n <= 62.
  std::vector<std::uint64_t> edge_masks() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  int m_;
  std::vector<VertexSet> edges_;
};

// 0/1 vertex-by-edge matrix; column j lists the vertices of the j-th edge in
// canonical order, so every column has exactly m ones. Vertices index rows
// 1-based, edges index columns 0-based.
struct IncidenceMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> bits;  // row-major

  bool at(int vertex, int edge) const {
    return bits[static_cast<std::size_t>(vertex - 1) * cols + edge] != 0;
  }
};

IncidenceMatrix incidence_matrix(const Hypergraph& h);

// Restriction to a vertex subset, keeping only fully contained edges. The
// edge set may come out empty, so the result is not itself a Hypergraph;
// graph() converts and throws if there are no edges. to_parent maps the new
// 1-based indices back to the original vertices.
struct Induced {
  int n = 0;
  int m = 0;
  std::vector<VertexSet> edges;
  std::vector<int> to_parent;

  bool has_edges() const { return !edges.empty(); }
  Hypergraph graph() const;
};

// Requires |w| >= m.
Induced induced(const Hypergraph& h, const VertexSet& w);

bool is_connected(const Hypergraph& h);

bool is_independent(const Hypergraph& h, const VertexSet& s);

// N(S): vertices outside S completing an edge whose other m-1 vertices all
// lie in S. Requires S independent.
VertexSet neighborhood(const Hypergraph& h, const VertexSet& s);

// Restartable enumeration of all independent sets, the empty set included.
// Order is by increasing subset bitmask (bit v-1 for vertex v), so it is
// deterministic and identical on every pass.
class IndependentSetStream {
 public:
  explicit IndependentSetStream(const Hypergraph& h);

  std::optional<VertexSet> next();
  void reset() {
    mask_ = 0;
    done_ = false;
  }

 private:
  int n_;
  std::vector<std::uint64_t> edge_masks_;
  std::uint64_t mask_ = 0;
  bool done_ = false;
};

std::vector<VertexSet> independent_sets(const Hypergraph& h);

// 2-coloring of a 2-uniform hypergraph; vertices in no edge go to the first
// class. Absent when no proper 2-coloring exists. Requires m == 2.
std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Hypergraph& g);

// All odd vertex sets of size >= 3 whose induced subgraph is exactly a
// cycle, canonically sorted. Requires m == 2.
std::vector<VertexSet> induced_odd_cycles(const Hypergraph& g);

struct BalanceWitness {
  VertexSet vertices;                      // row subset
  std::vector<std::size_t> edge_indices;   // column subset, into edges()
};

struct BalanceResult {
  bool balanced = false;
  std::optional<BalanceWitness> witness;  // present iff not balanced
};

// Exhaustive scan for an odd square submatrix with all row and column sums
// exactly 2. Guarded to n <= 14 and |E| <= 14.
BalanceResult is_balanced(const Hypergraph& h);

// --- family constructors ---------------------------------------------------

// The "t2" family: 3-hypergraphs of size n whose dual square acquires an
// associated prime of full height n. n = 3 is the single edge {1,2,3}; for
// n >= 4 the edge set depends on n mod 4 (a cyclic strip of triples plus, for
// two residues, one extra edge).
Hypergraph family_t2(int n);

// All C(n,m) edges.
Hypergraph complete(int n, int m);

// Adds vertices q+1..n to a connected 3-hypergraph of size q, each joined by
// the edge {1,2,j}. The input is the induced subhypergraph on 1..q.
Hypergraph pad_connected_3(const Hypergraph& h, int n);

// Raises a 3-hypergraph of size s to uniformity m by adding m-3 fresh
// vertices s+1..s+(m-3) to every edge. m = 3 is the identity.
Hypergraph lift_to_m(const Hypergraph& h, int m);

// Adds vertices q+1..n, each joined by the edge prefix+{j}. The prefix must
// be m-1 distinct vertices of h; h stays the induced subhypergraph on 1..q.
Hypergraph pad_to_n(const Hypergraph& h, const VertexSet& prefix, int n);

// The combined pipeline family_t2(q-m+3) -> lift_to_m(m) -> pad_to_n(n) with
// prefix 1..m-1. Produces a connected m-hypergraph of size n whose dual
// square has an associated prime on the first q variables. 3 <= m <= q <= n.
Hypergraph construct_family(int m, int q, int n);

// e distinct edges sampled uniformly without replacement; deterministic in
// the seed (xorshift64*, Floyd sampling of combination ranks, lexicographic
// unranking). 1 <= e <= C(n,m).
Hypergraph random_hypergraph(int n, int m, std::uint64_t e, std::uint64_t seed);

// C(n, k) in unsigned 64-bit arithmetic; GuardLimitError on overflow.
std::uint64_t binomial(int n, int k);

}  // namespace hypercover
