#include "hypercover/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "hypercover/prng.hpp"

namespace hypercover {

namespace {

std::string edge_text(const VertexSet& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

void require_mask_width(int n) {
  if (n > 62) throw GuardLimitError("instance too large: n > 62");
}

}  // namespace

Hypergraph::Hypergraph(int n, int m, std::vector<VertexSet> edges)
    : n_(n), m_(m) {
  if (m < 2) throw std::invalid_argument("uniformity m must be at least 2");
  if (n < m) throw std::invalid_argument("vertex count n must be at least m");
  if (edges.empty()) throw std::invalid_argument("edge set must be non-empty");
  for (VertexSet& e : edges) {
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != m) {
      throw std::invalid_argument("edge " + edge_text(e) + " does not have " +
                                  std::to_string(m) + " vertices");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("edge " + edge_text(e) + " repeats a vertex");
    }
    if (e.front() < 1 || e.back() > n) {
      throw std::invalid_argument("edge " + edge_text(e) +
                                  " has an out-of-range vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge in edge set");
  }
  edges_ = std::move(edges);
}

bool Hypergraph::has_edge(const VertexSet& e) const {
  VertexSet s = e;
  std::sort(s.begin(), s.end());
  return std::binary_search(edges_.begin(), edges_.end(), s);
}

std::vector<std::uint64_t> Hypergraph::edge_masks() const {
  require_mask_width(n_);
  std::vector<std::uint64_t> masks;
  masks.reserve(edges_.size());
  for (const VertexSet& e : edges_) {
    std::uint64_t m = 0;
    for (int v : e) m |= std::uint64_t{1} << (v - 1);
    masks.push_back(m);
  }
  return masks;
}

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  IncidenceMatrix mat;
  mat.rows = h.vertex_count();
  mat.cols = static_cast<int>(h.edge_count());
  mat.bits.assign(static_cast<std::size_t>(mat.rows) * mat.cols, 0);
  for (int j = 0; j < mat.cols; ++j) {
    for (int v : h.edges()[j]) {
      mat.bits[static_cast<std::size_t>(v - 1) * mat.cols + j] = 1;
    }
  }
  return mat;
}

Hypergraph Induced::graph() const {
  if (edges.empty()) {
    throw std::invalid_argument("induced subhypergraph has no edges");
  }
  return Hypergraph(n, m, edges);
}

Induced induced(const Hypergraph& h, const VertexSet& w) {
  VertexSet sorted = w;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && (sorted.front() < 1 || sorted.back() > h.vertex_count())) {
    throw std::invalid_argument("vertex subset out of range");
  }
  if (static_cast<int>(sorted.size()) < h.uniformity()) {
    throw std::invalid_argument("vertex subset smaller than the uniformity");
  }

  std::vector<int> new_index(h.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    new_index[sorted[i]] = static_cast<int>(i) + 1;
  }

  Induced out;
  out.n = static_cast<int>(sorted.size());
  out.m = h.uniformity();
  out.to_parent = sorted;
  for (const VertexSet& e : h.edges()) {
    bool inside = std::all_of(e.begin(), e.end(),
                              [&](int v) { return new_index[v] != 0; });
    if (!inside) continue;
    VertexSet mapped;
    mapped.reserve(e.size());
    for (int v : e) mapped.push_back(new_index[v]);
    out.edges.push_back(std::move(mapped));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

bool is_connected(const Hypergraph& h) {
  const int n = h.vertex_count();
  std::vector<std::vector<int>> vertex_edges(n + 1);
  for (std::size_t j = 0; j < h.edge_count(); ++j) {
    for (int v : h.edges()[j]) vertex_edges[v].push_back(static_cast<int>(j));
  }
  std::vector<char> vertex_seen(n + 1, 0);
  std::vector<char> edge_seen(h.edge_count(), 0);
  std::vector<int> stack = {1};
  vertex_seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int j : vertex_edges[v]) {
      if (edge_seen[j]) continue;
      edge_seen[j] = 1;
      for (int u : h.edges()[j]) {
        if (!vertex_seen[u]) {
          vertex_seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
  }
  return reached == n;
}

bool is_independent(const Hypergraph& h, const VertexSet& s) {
  std::vector<char> in(h.vertex_count() + 1, 0);
  for (int v : s) {
    if (v < 1 || v > h.vertex_count()) {
      throw std::invalid_argument("vertex subset out of range");
    }
    in[v] = 1;
  }
  for (const VertexSet& e : h.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](int v) { return in[v] != 0; })) {
      return false;
    }
  }
  return true;
}

VertexSet neighborhood(const Hypergraph& h, const VertexSet& s) {
  if (!is_independent(h, s)) {
    throw std::invalid_argument("neighborhood requires an independent set");
  }
  std::vector<char> in(h.vertex_count() + 1, 0);
  for (int v : s) in[v] = 1;
  std::set<int> nb;
  for (const VertexSet& e : h.edges()) {
    int outside = 0;
    int candidate = 0;
    for (int v : e) {
      if (!in[v]) {
        ++outside;
        candidate = v;
      }
    }
    if (outside == 1) nb.insert(candidate);
  }
  return VertexSet(nb.begin(), nb.end());
}

IndependentSetStream::IndependentSetStream(const Hypergraph& h)
    : n_(h.vertex_count()), edge_masks_(h.edge_masks()) {
  if (n_ > 62) throw GuardLimitError("instance too large: n > 62");
}

std::optional<VertexSet> IndependentSetStream::next() {
  while (!done_) {
    const std::uint64_t mask = mask_;
    if (mask_ == (std::uint64_t{1} << n_) - 1) {
      done_ = true;
    } else {
      ++mask_;
    }
    bool independent = true;
    for (std::uint64_t em : edge_masks_) {
      if ((mask & em) == em) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    VertexSet s;
    for (int v = 1; v <= n_; ++v) {
      if (mask >> (v - 1) & 1) s.push_back(v);
    }
    return s;
  }
  return std::nullopt;
}

std::vector<VertexSet> independent_sets(const Hypergraph& h) {
  IndependentSetStream stream(h);
  std::vector<VertexSet> out;
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Hypergraph& g) {
  if (g.uniformity() != 2) {
    throw std::invalid_argument("bipartite test requires a 2-hypergraph");
  }
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n + 1);
  for (const VertexSet& e : g.edges()) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<int> color(n + 1, -1);
  for (int start = 1; start <= n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> stack = {start};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet a, b;
  for (int v = 1; v <= n; ++v) (color[v] == 0 ? a : b).push_back(v);
  return std::make_pair(std::move(a), std::move(b));
}

std::vector<VertexSet> induced_odd_cycles(const Hypergraph& g) {
  if (g.uniformity() != 2) {
    throw std::invalid_argument("cycle enumeration requires a 2-hypergraph");
  }
  const int n = g.vertex_count();
  if (n > 24) throw GuardLimitError("instance too large: n > 24");
  std::vector<std::uint64_t> adj(n + 1, 0);
  for (const VertexSet& e : g.edges()) {
    adj[e[0]] |= std::uint64_t{1} << (e[1] - 1);
    adj[e[1]] |= std::uint64_t{1} << (e[0] - 1);
  }
  std::vector<VertexSet> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const int size = std::popcount(mask);
    if (size < 3 || size % 2 == 0) continue;
    // every vertex of the subset has exactly two neighbours inside it
    bool degree_two = true;
    for (int v = 1; v <= n && degree_two; ++v) {
      if (mask >> (v - 1) & 1) {
        degree_two = std::popcount(adj[v] & mask) == 2;
      }
    }
    if (!degree_two) continue;
    // connected => the subset is exactly one cycle
    const int first = std::countr_zero(mask) + 1;
    std::uint64_t seen = std::uint64_t{1} << (first - 1);
    std::vector<int> stack = {first};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      std::uint64_t nb = adj[u] & mask & ~seen;
      while (nb) {
        const int v = std::countr_zero(nb) + 1;
        nb &= nb - 1;
        seen |= std::uint64_t{1} << (v - 1);
        stack.push_back(v);
      }
    }
    if (seen != mask) continue;
    VertexSet cycle;
    for (int v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1) cycle.push_back(v);
    }
    out.push_back(std::move(cycle));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

// Chooses k rows from the candidate list so that every selected column ends
// up with exactly two ones; first solution in ascending row order wins.
bool pick_rows(const std::vector<int>& candidates, std::size_t from,
               const std::vector<std::vector<int>>& row_cols, int k,
               std::vector<int>& col_count, VertexSet& chosen) {
  if (static_cast<int>(chosen.size()) == k) {
    for (int c : col_count) {
      if (c != 2) return false;
    }
    return true;
  }
  if (candidates.size() - from < static_cast<std::size_t>(k) - chosen.size()) {
    return false;
  }
  for (std::size_t i = from; i < candidates.size(); ++i) {
    const int row = candidates[i];
    bool feasible = true;
    for (int col : row_cols[row]) {
      if (col_count[col] + 1 > 2) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    for (int col : row_cols[row]) ++col_count[col];
    chosen.push_back(row);
    if (pick_rows(candidates, i + 1, row_cols, k, col_count, chosen)) return true;
    chosen.pop_back();
    for (int col : row_cols[row]) --col_count[col];
  }
  return false;
}

}  // namespace

BalanceResult is_balanced(const Hypergraph& h) {
  const int n = h.vertex_count();
  const int e = static_cast<int>(h.edge_count());
  if (n > 14 || e > 14) {
    throw GuardLimitError("instance too large for the balancedness scan");
  }
  const IncidenceMatrix mat = incidence_matrix(h);
  const int kmax = std::min(n, e);
  for (int k = 3; k <= kmax; k += 2) {
    // lexicographic enumeration of k-element column subsets
    std::vector<int> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    for (;;) {
      std::vector<int> candidates;
      std::vector<std::vector<int>> row_cols(n + 1);
      for (int v = 1; v <= n; ++v) {
        int ones = 0;
        for (int j = 0; j < k; ++j) {
          if (mat.at(v, cols[j])) {
            ++ones;
            row_cols[v].push_back(j);
          }
        }
        if (ones == 2) candidates.push_back(v);
      }
      if (static_cast<int>(candidates.size()) >= k) {
        std::vector<int> col_count(k, 0);
        VertexSet chosen;
        if (pick_rows(candidates, 0, row_cols, k, col_count, chosen)) {
          BalanceWitness witness;
          witness.vertices = chosen;
          witness.edge_indices.assign(cols.begin(), cols.end());
          return BalanceResult{false, std::move(witness)};
        }
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && cols[i] == e - k + i) --i;
      if (i < 0) break;
      ++cols[i];
      for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
  }
  return BalanceResult{true, std::nullopt};
}

Hypergraph family_t2(int n) {
  if (n < 3) throw std::invalid_argument("family requires n >= 3");
  if (n == 3) return Hypergraph(3, 3, {{1, 2, 3}});
  std::vector<VertexSet> edges;
  switch (n % 4) {
    case 1:  // x1x2x3, x3x4x5, ..., x_{n-2}x_{n-1}x_n, x_n x1 x2
      for (int k = 1; k <= n - 2; k += 2) edges.push_back({k, k + 1, k + 2});
      edges.push_back({n, 1, 2});
      break;
    case 3:  // the n = 4t+1 strip plus the extra edge x4x5x6
      for (int k = 1; k <= n - 2; k += 2) edges.push_back({k, k + 1, k + 2});
      edges.push_back({n, 1, 2});
      edges.push_back({4, 5, 6});
      break;
    case 2:  // x1x2x3, ..., x_{n-3}x_{n-2}x_{n-1}, x_{n-1} x_n x1
      for (int k = 1; k <= n - 3; k += 2) edges.push_back({k, k + 1, k + 2});
      edges.push_back({n - 1, n, 1});
      break;
    default:  // n % 4 == 0: the n = 4t+2 strip plus the extra edge x2x3x4
      for (int k = 1; k <= n - 3; k += 2) edges.push_back({k, k + 1, k + 2});
      edges.push_back({n - 1, n, 1});
      edges.push_back({2, 3, 4});
      break;
  }
  return Hypergraph(n, 3, std::move(edges));
}

Hypergraph complete(int n, int m) {
  if (n < m) throw std::invalid_argument("complete hypergraph requires n >= m");
  std::vector<VertexSet> edges;
  VertexSet combo(m);
  std::iota(combo.begin(), combo.end(), 1);
  for (;;) {
    edges.push_back(combo);
    int i = m - 1;
    while (i >= 0 && combo[i] == n - m + i + 1) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < m; ++j) combo[j] = combo[j - 1] + 1;
  }
  return Hypergraph(n, m, std::move(edges));
}

Hypergraph pad_connected_3(const Hypergraph& h, int n) {
  if (h.uniformity() != 3) {
    throw std::invalid_argument("padding requires a 3-hypergraph");
  }
  if (n < h.vertex_count()) {
    throw std::invalid_argument("target size smaller than the hypergraph");
  }
  if (!is_connected(h)) {
    throw std::invalid_argument("padding requires a connected hypergraph");
  }
  std::vector<VertexSet> edges = h.edges();
  for (int j = h.vertex_count() + 1; j <= n; ++j) edges.push_back({1, 2, j});
  return Hypergraph(n, 3, std::move(edges));
}

Hypergraph lift_to_m(const Hypergraph& h, int m) {
  if (h.uniformity() != 3) {
    throw std::invalid_argument("lift requires a 3-hypergraph");
  }
  if (m < 3) throw std::invalid_argument("lift requires m >= 3");
  if (m == 3) return h;
  const int s = h.vertex_count();
  const int q = s + (m - 3);
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (const VertexSet& e : h.edges()) {
    VertexSet lifted = e;
    for (int v = s + 1; v <= q; ++v) lifted.push_back(v);
    edges.push_back(std::move(lifted));
  }
  return Hypergraph(q, m, std::move(edges));
}

Hypergraph pad_to_n(const Hypergraph& h, const VertexSet& prefix, int n) {
  const int q = h.vertex_count();
  const int m = h.uniformity();
  if (n < q) throw std::invalid_argument("target size smaller than the hypergraph");
  VertexSet p = prefix;
  std::sort(p.begin(), p.end());
  if (static_cast<int>(p.size()) != m - 1 ||
      std::adjacent_find(p.begin(), p.end()) != p.end()) {
    throw std::invalid_argument("prefix must be m-1 distinct vertices");
  }
  if (p.front() < 1 || p.back() > q) {
    throw std::invalid_argument("prefix vertex out of range");
  }
  std::vector<VertexSet> edges = h.edges();
  for (int j = q + 1; j <= n; ++j) {
    VertexSet e = p;
    e.push_back(j);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, m, std::move(edges));
}

Hypergraph construct_family(int m, int q, int n) {
  if (!(3 <= m && m <= q && q <= n)) {
    throw std::invalid_argument("construction requires 3 <= m <= q <= n");
  }
  Hypergraph core = lift_to_m(family_t2(q - m + 3), m);
  VertexSet prefix(m - 1);
  std::iota(prefix.begin(), prefix.end(), 1);
  return pad_to_n(core, prefix, n);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // r * num / i is exact at each step; guard the multiply
    if (r > UINT64_MAX / num) {
      throw GuardLimitError("instance too large: C(n,m) exceeds 64 bits");
    }
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

namespace {

VertexSet unrank_combination(int n, int m, std::uint64_t rank) {
  VertexSet combo;
  combo.reserve(m);
  int x = 1;
  for (int i = 0; i < m; ++i) {
    for (;;) {
      const std::uint64_t block = binomial(n - x, m - i - 1);
      if (block <= rank) {
        rank -= block;
        ++x;
      } else {
        break;
      }
    }
    combo.push_back(x);
    ++x;
  }
  return combo;
}

}  // namespace

Hypergraph random_hypergraph(int n, int m, std::uint64_t e, std::uint64_t seed) {
  if (m < 2 || n < m) throw std::invalid_argument("need n >= m >= 2");
  const std::uint64_t total = binomial(n, m);
  if (e < 1 || e > total) {
    throw std::invalid_argument("edge count out of range [1, C(n,m)]");
  }
  Xorshift64Star rng(seed);
  // Floyd sampling of e distinct combination ranks
  std::set<std::uint64_t> ranks;
  for (std::uint64_t j = total - e; j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!ranks.insert(t).second) ranks.insert(j);
  }
  std::vector<VertexSet> edges;
  edges.reserve(ranks.size());
  for (std::uint64_t r : ranks) edges.push_back(unrank_combination(n, m, r));
  return Hypergraph(n, m, std::move(edges));
}

}  // namespace hypercover
