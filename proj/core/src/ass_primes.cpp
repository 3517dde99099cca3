#include "hypercover/ass_primes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cube.hpp"

namespace hypercover {

namespace {

// Decomposability of min(v,2) into two 1-covers, tabulated over {0,1,2}^n.
// Splitting depends only on the truncation at 2 and is upward monotone
// (v splits iff two minimal covers sum below it), so the table answers for
// arbitrary vectors.
struct SplitTable {
  detail::Cube cube;
  std::vector<std::uint8_t> splits;

  SplitTable(const Hypergraph& h, std::uint64_t max_points)
      : cube(h.vertex_count(), 3, max_points) {
    const std::vector<CoverVector> covers = minimal_vertex_covers(h);
    splits.assign(cube.size, 0);
    for (std::size_t i = 0; i < covers.size(); ++i) {
      for (std::size_t j = i; j < covers.size(); ++j) {
        std::uint64_t idx = 0;
        for (int v = 0; v < cube.n; ++v) {
          idx += static_cast<std::uint64_t>(covers[i][v] + covers[j][v]) *
                 cube.stride[v];
        }
        splits[idx] = 1;
      }
    }
    detail::upward_close(cube, splits);
  }
};

// Shared candidate scan over {0,1,2}^n in ascending lexicographic order.
// Yields (S(C), C) for every 2-cover C that does not split, has a non-empty
// bump set S(C), and passes the saturated-bump certificate. The callback
// returns true to stop the scan.
template <typename Fn>
void scan_witnesses(const Hypergraph& h, const SplitTable& table, Fn&& accept) {
  const int n = h.vertex_count();
  const auto& edges = h.edges();
  std::vector<int> v(n, 0);
  do {
    const std::uint64_t idx = table.cube.index(v);
    if (table.splits[idx]) continue;
    // edge sums >= 2 (nonzero follows, the edge set being non-empty)
    bool two_cover = true;
    for (const VertexSet& e : edges) {
      int sum = 0;
      for (int vtx : e) sum += v[vtx - 1];
      if (sum < 2) {
        two_cover = false;
        break;
      }
    }
    if (!two_cover) continue;
    VertexSet bumps;
    for (int i = 0; i < n; ++i) {
      if (v[i] < 2 && table.splits[idx + table.cube.stride[i]]) {
        bumps.push_back(i + 1);
      }
    }
    if (bumps.empty()) continue;
    // saturate all coordinates outside the bump set to 2
    std::uint64_t saturated = idx;
    {
      std::size_t at = 0;
      for (int i = 0; i < n; ++i) {
        if (at < bumps.size() && bumps[at] == i + 1) {
          ++at;
          continue;
        }
        saturated += static_cast<std::uint64_t>(2 - v[i]) * table.cube.stride[i];
      }
    }
    if (table.splits[saturated]) continue;
    if (accept(bumps, v)) return;
  } while (detail::advance(table.cube, v));
}

}  // namespace

bool canonical_prime_less(const MonomialPrime& a, const MonomialPrime& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<MonomialPrime> AssProfile::prime_set() const {
  std::vector<MonomialPrime> out = minimal;
  for (const WitnessedPrime& w : embedded) out.push_back(w.prime);
  std::sort(out.begin(), out.end(), canonical_prime_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MonomialPrime> minimal_primes(const Hypergraph& h) {
  std::vector<MonomialPrime> out = h.edges();
  std::sort(out.begin(), out.end(), canonical_prime_less);
  return out;
}

std::vector<WitnessedPrime> embedded_primes(const Hypergraph& h,
                                            const SearchLimits& limits) {
  const SplitTable table(h, limits.max_points);
  const int m = h.uniformity();
  std::map<VertexSet, CoverVector> found;
  scan_witnesses(h, table, [&](const VertexSet& s, const std::vector<int>& c) {
    if (static_cast<int>(s.size()) < m) {
      throw ConsistencyError("witness scan produced a prime of height < m");
    }
    if (static_cast<int>(s.size()) == m) {
      // certified associated at height m, so it must be a minimal prime
      if (!h.has_edge(s)) {
        throw ConsistencyError(
            "witness scan produced a height-m prime that is not an edge");
      }
      return false;  // reported through minimal_primes instead
    }
    found.try_emplace(s, c);  // first hit per prime = lexicographically least
    return false;
  });
  std::vector<WitnessedPrime> out;
  out.reserve(found.size());
  for (auto& [prime, witness] : found) {
    out.push_back(WitnessedPrime{prime, witness});
  }
  std::sort(out.begin(), out.end(),
            [](const WitnessedPrime& a, const WitnessedPrime& b) {
              return canonical_prime_less(a.prime, b.prime);
            });
  return out;
}

AssProfile ass_square(const Hypergraph& h, const SearchLimits& limits) {
  AssProfile profile;
  profile.power = 2;
  profile.minimal = minimal_primes(h);
  profile.embedded = embedded_primes(h, limits);
  return profile;
}

std::vector<WitnessedPrime> ass_oracle(const MonomialIdeal& ideal, int expbound,
                                       const SearchLimits& limits) {
  const int n = ideal.vars();
  for (const Monomial& g : ideal.generators()) {
    for (int e : g) {
      if (e > expbound) {
        throw std::invalid_argument(
            "expbound must cover every generator exponent");
      }
    }
  }
  const detail::Cube cube(n, expbound + 1, limits.max_points);
  std::vector<std::uint8_t> member(cube.size, 0);
  for (const Monomial& g : ideal.generators()) member[cube.index(g)] = 1;
  detail::upward_close(cube, member);

  std::map<VertexSet, Monomial> found;
  std::vector<int> z(n, 0);
  do {
    const std::uint64_t idx = cube.index(z);
    if (member[idx]) continue;
    VertexSet s;
    for (int i = 0; i < n; ++i) {
      // at z_i = expbound a bump changes nothing: every generator exponent
      // already fits below it
      if (z[i] < expbound && member[idx + cube.stride[i]]) s.push_back(i + 1);
    }
    if (s.empty()) continue;
    std::uint64_t saturated = idx;
    std::size_t at = 0;
    for (int i = 0; i < n; ++i) {
      if (at < s.size() && s[at] == i + 1) {
        ++at;
        continue;
      }
      saturated += static_cast<std::uint64_t>(expbound - z[i]) * cube.stride[i];
    }
    if (member[saturated]) continue;
    found.try_emplace(s, z);
  } while (detail::advance(cube, z));

  std::vector<WitnessedPrime> out;
  out.reserve(found.size());
  for (auto& [prime, witness] : found) {
    out.push_back(WitnessedPrime{prime, witness});
  }
  std::sort(out.begin(), out.end(),
            [](const WitnessedPrime& a, const WitnessedPrime& b) {
              return canonical_prime_less(a.prime, b.prime);
            });
  return out;
}

AssProfile ass_dual_power(const Hypergraph& h, int k,
                          const SearchLimits& limits) {
  if (k < 1 || k > 3) throw std::invalid_argument("power must be 1, 2 or 3");
  const MonomialIdeal ideal = dual_power_ordinary(h, k);
  AssProfile profile;
  profile.power = k;
  for (WitnessedPrime& wp : ass_oracle(ideal, k, limits)) {
    if (h.has_edge(wp.prime)) {
      profile.minimal.push_back(wp.prime);
    } else {
      profile.embedded.push_back(std::move(wp));
    }
  }
  std::sort(profile.minimal.begin(), profile.minimal.end(),
            canonical_prime_less);
  return profile;
}

AssProfile graph_ass_criterion(const Hypergraph& g) {
  if (g.uniformity() != 2) {
    throw std::invalid_argument("graph criterion requires a 2-hypergraph");
  }
  AssProfile profile;
  profile.power = 2;
  profile.minimal = minimal_primes(g);
  for (VertexSet& cycle : induced_odd_cycles(g)) {
    profile.embedded.push_back(WitnessedPrime{std::move(cycle), std::nullopt});
  }
  std::sort(profile.embedded.begin(), profile.embedded.end(),
            [](const WitnessedPrime& a, const WitnessedPrime& b) {
              return canonical_prime_less(a.prime, b.prime);
            });
  return profile;
}

PrimeCheck is_prime_associated(const Hypergraph& h, const MonomialPrime& p,
                               const SearchLimits& limits) {
  VertexSet vars = p;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.empty() || vars.front() < 1 || vars.back() > h.vertex_count()) {
    throw std::invalid_argument("prime variables out of range");
  }
  const int m = h.uniformity();
  if (static_cast<int>(vars.size()) < m) return PrimeCheck{false, std::nullopt};
  if (static_cast<int>(vars.size()) == m) {
    return PrimeCheck{h.has_edge(vars), std::nullopt};
  }

  const Induced sub = induced(h, vars);
  if (!sub.has_edges()) return PrimeCheck{false, std::nullopt};
  const Hypergraph hsub = sub.graph();
  const SplitTable table(hsub, limits.max_points);

  std::optional<CoverVector> local;
  scan_witnesses(hsub, table, [&](const VertexSet& s, const std::vector<int>& c) {
    if (static_cast<int>(s.size()) == hsub.vertex_count()) {
      local = c;
      return true;
    }
    return false;
  });
  if (!local) return PrimeCheck{false, std::nullopt};

  // translate back: witness entries on the prime, 2 elsewhere
  CoverVector witness(h.vertex_count(), 2);
  for (int i = 0; i < hsub.vertex_count(); ++i) {
    witness[sub.to_parent[i] - 1] = (*local)[i];
  }
  return PrimeCheck{true, std::move(witness)};
}

}  // namespace hypercover
