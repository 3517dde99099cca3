#include "hypercover/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cube.hpp"

namespace hypercover {

namespace {

bool divides(const Monomial& g, const Monomial& q) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > q[i]) return false;
  }
  return true;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_exponent_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept) {
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
  if (n < 1) throw std::invalid_argument("need at least one variable");
  if (generators.empty()) {
    throw std::invalid_argument("generator list must be non-empty");
  }
  for (const Monomial& g : generators) {
    if (static_cast<int>(g.size()) != n) {
      throw std::invalid_argument("generator length does not match n");
    }
    for (int e : g) {
      if (e < 0) throw std::invalid_argument("negative exponent");
    }
  }
  gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& q) const {
  if (static_cast<int>(q.size()) != n_) {
    throw std::invalid_argument("monomial length does not match n");
  }
  for (const Monomial& g : gens_) {
    if (divides(g, q)) return true;
  }
  return false;
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  if (other.n_ != n_) {
    throw std::invalid_argument("variable counts do not match");
  }
  for (const Monomial& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

MonomialIdeal ideal_from_generators(int n, std::vector<Monomial> gens) {
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal variable_prime(int n, const VertexSet& vars) {
  if (vars.empty()) throw std::invalid_argument("prime needs a variable");
  std::vector<Monomial> gens;
  gens.reserve(vars.size());
  for (int v : vars) {
    if (v < 1 || v > n) throw std::invalid_argument("variable out of range");
    Monomial g(n, 0);
    g[v - 1] = 1;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& i, const Monomial& q) {
  if (static_cast<int>(q.size()) != i.vars()) {
    throw std::invalid_argument("monomial length does not match n");
  }
  std::vector<Monomial> gens;
  gens.reserve(i.generators().size());
  for (const Monomial& g : i.generators()) {
    Monomial r(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) r[k] = std::max(g[k] - q[k], 0);
    gens.push_back(std::move(r));
  }
  return MonomialIdeal(i.vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& i, const MonomialIdeal& j) {
  if (i.vars() != j.vars()) {
    throw std::invalid_argument("variable counts do not match");
  }
  std::vector<Monomial> gens;
  gens.reserve(i.generators().size() * j.generators().size());
  for (const Monomial& a : i.generators()) {
    for (const Monomial& b : j.generators()) {
      Monomial lcm(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) lcm[k] = std::max(a[k], b[k]);
      gens.push_back(std::move(lcm));
    }
  }
  return MonomialIdeal(i.vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& i, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be at least 1");
  const std::vector<Monomial>& base = i.generators();
  std::vector<Monomial> gens;
  // k-fold products = sums over multisets of generator indices
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    Monomial sum(i.vars(), 0);
    for (std::size_t idx : pick) {
      for (int v = 0; v < i.vars(); ++v) sum[v] += base[idx][v];
    }
    gens.push_back(std::move(sum));
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == base.size() - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = pick[pos] + 1;
    for (int p = pos; p < k; ++p) pick[p] = next;
  }
  return MonomialIdeal(i.vars(), std::move(gens));
}

MonomialIdeal edge_ideal(const Hypergraph& h) {
  std::vector<Monomial> gens;
  gens.reserve(h.edge_count());
  for (const VertexSet& e : h.edges()) {
    Monomial g(h.vertex_count(), 0);
    for (int v : e) g[v - 1] = 1;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(h.vertex_count(), std::move(gens));
}

MonomialIdeal alexander_dual(const Hypergraph& h) {
  const int n = h.vertex_count();
  // route 1: intersection of the edge primes
  MonomialIdeal by_intersection = variable_prime(n, h.edges().front());
  for (std::size_t j = 1; j < h.edge_count(); ++j) {
    by_intersection = intersect(by_intersection, variable_prime(n, h.edges()[j]));
  }
  // route 2: minimal vertex covers
  MonomialIdeal by_covers(n, minimal_vertex_covers(h));
  if (!(by_intersection == by_covers)) {
    throw ConsistencyError(
        "Alexander dual routes disagree (edge-prime intersection vs minimal "
        "vertex covers)");
  }
  return by_covers;
}

MonomialIdeal dual_power_ordinary(const Hypergraph& h, int k) {
  return power(alexander_dual(h), k);
}

namespace {

// all exponent patterns of total degree k on the variables of one edge
std::vector<Monomial> edge_prime_power_gens(int n, const VertexSet& edge, int k) {
  std::vector<Monomial> out;
  const int m = static_cast<int>(edge.size());
  std::vector<int> part(m, 0);
  part[0] = k;
  for (;;) {
    Monomial g(n, 0);
    for (int i = 0; i < m; ++i) g[edge[i] - 1] = part[i];
    out.push_back(std::move(g));
    // next composition of k into m parts
    int i = m - 2;
    while (i >= 0 && part[i] == 0) --i;
    if (i < 0) break;
    --part[i];
    int tail = std::accumulate(part.begin() + i + 1, part.end(), 0) + 1;
    for (int j = i + 1; j < m; ++j) part[j] = 0;
    part[i + 1] = tail;
  }
  return out;
}

}  // namespace

MonomialIdeal dual_power_symbolic(const Hypergraph& h, int k,
                                  const SearchLimits& limits) {
  if (k < 1) throw std::invalid_argument("power exponent must be at least 1");
  const int n = h.vertex_count();

  // route (a): locally minimal k-covers with entries <= k (larger entries
  // are reducible, so nothing is lost)
  const detail::Cube cube(n, k + 1, limits.max_points);
  std::vector<Monomial> by_covers_gens;
  std::vector<int> v(n, 0);
  const auto& edges = h.edges();
  do {
    bool kcover = true;
    for (const VertexSet& e : edges) {
      int sum = 0;
      for (int vtx : e) sum += v[vtx - 1];
      if (sum < k) {
        kcover = false;
        break;
      }
    }
    if (!kcover) continue;
    bool minimal = true;
    for (int i = 0; i < n && minimal; ++i) {
      if (v[i] == 0) continue;
      // dropping coordinate i must break some edge sum
      bool tight = false;
      for (const VertexSet& e : edges) {
        if (std::find(e.begin(), e.end(), i + 1) == e.end()) continue;
        int sum = 0;
        for (int vtx : e) sum += v[vtx - 1];
        if (sum == k) {
          tight = true;
          break;
        }
      }
      minimal = tight;
    }
    if (minimal) by_covers_gens.push_back(v);
  } while (detail::advance(cube, v));
  MonomialIdeal by_covers(n, std::move(by_covers_gens));

  // route (b): intersection of k-th powers of the edge primes
  MonomialIdeal by_intersection(n, edge_prime_power_gens(n, edges.front(), k));
  for (std::size_t j = 1; j < edges.size(); ++j) {
    by_intersection = intersect(
        by_intersection, MonomialIdeal(n, edge_prime_power_gens(n, edges[j], k)));
  }

  if (!(by_covers == by_intersection)) {
    throw ConsistencyError(
        "symbolic power routes disagree (k-cover enumeration vs edge-prime "
        "power intersection)");
  }
  return by_covers;
}

}  // namespace hypercover
