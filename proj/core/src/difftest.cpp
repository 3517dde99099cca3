#include "hypercover/difftest.hpp"

#include <algorithm>
#include <sstream>

#include "hypercover/ass_primes.hpp"
#include "hypercover/cover.hpp"
#include "hypercover/monomial_ideal.hpp"

namespace hypercover {

namespace {

std::string primes_text(const std::vector<MonomialPrime>& ps) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out << " ";
    out << "{";
    for (std::size_t j = 0; j < ps[i].size(); ++j) {
      if (j) out << ",";
      out << ps[i][j];
    }
    out << "}";
  }
  out << "]";
  return out.str();
}

}  // namespace

DiffInstance draw_instance(int trial, Xorshift64Star& master,
                           const DiffTestConfig& cfg) {
  const int m = cfg.m ? *cfg.m : 2 + static_cast<int>(master.below(2));
  const int n = m + static_cast<int>(master.below(
                        static_cast<std::uint64_t>(cfg.max_n - m + 1)));
  const std::uint64_t total = binomial(n, m);
  const std::uint64_t emax =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.max_e), total);
  const std::uint64_t e = 1 + master.below(emax);
  const std::uint64_t instance_seed = master.next();
  return DiffInstance{trial, instance_seed,
                      random_hypergraph(n, m, e, instance_seed)};
}

std::vector<std::string> check_instance(const Hypergraph& h,
                                        const SearchLimits& limits) {
  std::vector<std::string> failures;
  const int n = h.vertex_count();
  const int m = h.uniformity();
  const std::vector<CoverVector> covers = minimal_vertex_covers(h);

  const AssProfile profile = ass_square(h, limits);
  const std::vector<MonomialPrime> primes = profile.prime_set();

  // criterion vs independent oracle
  {
    const MonomialIdeal square = dual_power_ordinary(h, 2);
    std::vector<MonomialPrime> oracle_primes;
    for (const WitnessedPrime& wp : ass_oracle(square, 2, limits)) {
      oracle_primes.push_back(wp.prime);
    }
    if (oracle_primes != primes) {
      failures.push_back("criterion/oracle prime sets differ: " +
                         primes_text(primes) + " vs " +
                         primes_text(oracle_primes));
    }
  }

  // embedded-freeness vs the independent-set characterization
  {
    const EmbeddedFreeResult free = embedded_free_by_independent_sets(h);
    if (free.embedded_free != profile.embedded.empty()) {
      failures.push_back("independent-set test disagrees with embedded set");
    }
  }

  // minimal primes are exactly the edges; heights never drop below m
  if (profile.minimal != minimal_primes(h)) {
    failures.push_back("minimal primes are not the edge set");
  }
  for (const MonomialPrime& p : primes) {
    if (static_cast<int>(p.size()) < m) {
      failures.push_back("associated prime of height below m");
      break;
    }
  }

  // every reported witness re-certifies from scratch
  for (const WitnessedPrime& wp : profile.embedded) {
    const CoverVector& c = *wp.witness;
    if (!is_k_cover(h, c, 2) ||
        detail::decompose_given_covers(h, covers, c, 2)) {
      failures.push_back("embedded witness is not a non-split 2-cover");
      continue;
    }
    bool bumps_ok = true;
    std::vector<char> inside(n + 1, 0);
    for (int v : wp.prime) inside[v] = 1;
    for (int v : wp.prime) {
      CoverVector bumped = c;
      ++bumped[v - 1];
      if (!detail::decompose_given_covers(h, covers, bumped, 2)) {
        bumps_ok = false;
      }
    }
    CoverVector outside_bump = c;
    for (int i = 0; i < n; ++i) {
      if (!inside[i + 1]) outside_bump[i] += 2;
    }
    if (detail::decompose_given_covers(h, covers, outside_bump, 2)) {
      bumps_ok = false;
    }
    if (!bumps_ok) failures.push_back("embedded witness fails re-certification");
  }

  // induced 2-covers, and reduction of the minimal 2-covers
  {
    IndependentSetStream stream(h);
    while (auto s = stream.next()) {
      if (!is_k_cover(h, cover_from_independent(h, *s), 2)) {
        failures.push_back("induced cover of an independent set is not a 2-cover");
        break;
      }
    }
    const MonomialIdeal symbolic = dual_power_symbolic(h, 2, limits);
    for (const Monomial& g : symbolic.generators()) {
      const auto [s, rest] = reduce_two_cover(h, g);
      CoverVector back = cover_from_independent(h, s);
      for (std::size_t i = 0; i < back.size(); ++i) back[i] += rest[i];
      if (back != g) {
        failures.push_back("2-cover reduction does not reassemble");
        break;
      }
    }
  }

  // balanced instances never carry embedded primes
  if (n <= 14 && static_cast<int>(h.edge_count()) <= 14) {
    if (is_balanced(h).balanced && !profile.embedded.empty()) {
      failures.push_back("balanced instance has embedded primes");
    }
  }

  if (m == 2) {
    const bool bip = is_bipartite(h).has_value();
    const bool ones_split =
        detail::decompose_given_covers(h, covers, CoverVector(n, 1), 2)
            .has_value();
    if (bip != ones_split) {
      failures.push_back("bipartite and all-ones splitting disagree");
    }
    if (bip != profile.embedded.empty()) {
      failures.push_back("bipartite and embedded-freeness disagree");
    }
    const AssProfile criterion = graph_ass_criterion(h);
    if (criterion.prime_set() != primes) {
      failures.push_back("odd-cycle criterion disagrees: " +
                         primes_text(criterion.prime_set()) + " vs " +
                         primes_text(primes));
    }
  }

  return failures;
}

}  // namespace hypercover
