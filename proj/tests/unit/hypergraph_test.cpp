#include "hypercover/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "hypercover/prng.hpp"

using namespace hypercover;

namespace {

Hypergraph k3() { return Hypergraph(3, 2, {{1, 2}, {2, 3}, {1, 3}}); }

Hypergraph cycle_graph(int n) {
  std::vector<VertexSet> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({n, 1});
  return Hypergraph(n, 2, std::move(edges));
}

}  // namespace

TEST_CASE("construction validates and canonicalizes") {
  const Hypergraph smallest(3, 3, {{1, 2, 3}});
  CHECK(smallest.edge_count() == 1);

  // input order and vertex order inside edges are irrelevant
  const Hypergraph a(6, 3, {{3, 4, 5}, {5, 6, 1}, {1, 2, 3}});
  const Hypergraph b(6, 3, {{2, 1, 3}, {3, 5, 4}, {6, 5, 1}});
  CHECK(a == b);
  CHECK(a.edges() == std::vector<VertexSet>{{1, 2, 3}, {1, 5, 6}, {3, 4, 5}});

  CHECK_THROWS_AS(Hypergraph(4, 2, {{1, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 3, {{1, 2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 3, {{1, 2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(2, 3, {{1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Hypergraph(3, 1, {{1}}), std::invalid_argument);
}

TEST_CASE("incidence matrix columns carry exactly m ones") {
  const Hypergraph h = family_t2(6);
  const IncidenceMatrix mat = incidence_matrix(h);
  REQUIRE(mat.rows == 6);
  REQUIRE(mat.cols == 3);
  for (int j = 0; j < mat.cols; ++j) {
    int ones = 0;
    for (int v = 1; v <= mat.rows; ++v) ones += mat.at(v, j);
    CHECK(ones == 3);
  }
  CHECK(mat.at(1, 0));
  CHECK_FALSE(mat.at(4, 0));
}

TEST_CASE("induced keeps only fully contained edges") {
  const Hypergraph h = family_t2(6);
  const Induced sub = induced(h, {1, 2, 3, 4, 5});
  CHECK(sub.n == 5);
  CHECK(sub.edges == std::vector<VertexSet>{{1, 2, 3}, {3, 4, 5}});
  CHECK(sub.to_parent == VertexSet{1, 2, 3, 4, 5});

  // full vertex set gives the hypergraph back
  const Induced full = induced(h, {1, 2, 3, 4, 5, 6});
  CHECK(full.graph() == h);

  CHECK_THROWS_AS(induced(Hypergraph(3, 3, {{1, 2, 3}}), {1, 2}),
                  std::invalid_argument);

  // reindexing through the map
  const Induced gap = induced(h, {1, 2, 3, 5, 6});
  CHECK(gap.to_parent == VertexSet{1, 2, 3, 5, 6});
  CHECK(gap.edges == std::vector<VertexSet>{{1, 2, 3}, {1, 4, 5}});

  const Induced empty = induced(h, {2, 4, 6});
  CHECK_FALSE(empty.has_edges());
  CHECK_THROWS_AS(empty.graph(), std::invalid_argument);
}

TEST_CASE("induced restriction composes") {
  const Hypergraph h = family_t2(9);
  const Induced once = induced(h, {1, 2, 3, 4, 5, 6, 7});
  const Induced twice = induced(once.graph(), {1, 2, 3, 4, 5});
  const Induced direct = induced(h, {1, 2, 3, 4, 5});
  CHECK(twice.edges == direct.edges);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(family_t2(5)));
  CHECK_FALSE(is_connected(Hypergraph(6, 3, {{1, 2, 3}})));
  CHECK(is_connected(pad_connected_3(family_t2(5), 8)));
  for (int n = 3; n <= 13; ++n) CHECK(is_connected(family_t2(n)));
}

TEST_CASE("independent sets stream") {
  const Hypergraph h = family_t2(5);
  const auto sets = independent_sets(h);
  CHECK(std::find(sets.begin(), sets.end(), VertexSet{2, 4}) != sets.end());
  // the empty set always comes first
  REQUIRE(!sets.empty());
  CHECK(sets.front().empty());

  // a single 3-edge leaves every proper subset independent
  const auto one_edge = independent_sets(Hypergraph(3, 3, {{1, 2, 3}}));
  CHECK(one_edge.size() == 7);
  CHECK(std::find(one_edge.begin(), one_edge.end(), VertexSet{1, 2, 3}) ==
        one_edge.end());

  const auto triangle = independent_sets(k3());
  CHECK(triangle == std::vector<VertexSet>{{}, {1}, {2}, {3}});

  // no yielded set contains an edge, and streams restart cleanly
  IndependentSetStream stream(h);
  std::size_t count = 0;
  while (auto s = stream.next()) {
    CHECK(is_independent(h, *s));
    ++count;
  }
  stream.reset();
  std::size_t again = 0;
  while (stream.next()) ++again;
  CHECK(count == again);
  CHECK(count == sets.size());
}

TEST_CASE("neighborhood completes edges") {
  CHECK(neighborhood(family_t2(6), {2, 4, 6}) == VertexSet{});
  CHECK(neighborhood(k3(), {1}) == VertexSet{2, 3});
  CHECK(neighborhood(Hypergraph(3, 3, {{1, 2, 3}}), {1, 2}) == VertexSet{3});
  CHECK_THROWS_AS(neighborhood(k3(), {1, 2}), std::invalid_argument);
}

TEST_CASE("bipartition") {
  const auto c4 = is_bipartite(cycle_graph(4));
  REQUIRE(c4.has_value());
  CHECK(c4->first == VertexSet{1, 3});
  CHECK(c4->second == VertexSet{2, 4});

  CHECK_FALSE(is_bipartite(cycle_graph(5)).has_value());
  CHECK_FALSE(is_bipartite(k3()).has_value());
  CHECK_THROWS_AS(is_bipartite(family_t2(5)), std::invalid_argument);

  // isolated vertices land in the first class
  const auto iso = is_bipartite(Hypergraph(4, 2, {{2, 3}}));
  REQUIRE(iso.has_value());
  CHECK(iso->first == VertexSet{1, 2, 4});
}

TEST_CASE("induced odd cycles") {
  CHECK(induced_odd_cycles(cycle_graph(5)) ==
        std::vector<VertexSet>{{1, 2, 3, 4, 5}});
  CHECK(induced_odd_cycles(k3()) == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(induced_odd_cycles(cycle_graph(4)).empty());
  CHECK_THROWS_AS(induced_odd_cycles(family_t2(5)), std::invalid_argument);

  // bipartite <=> no induced odd cycle, over a small random corpus
  Xorshift64Star rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const std::uint64_t total = binomial(n, 2);
    const std::uint64_t e = 1 + rng.below(std::min<std::uint64_t>(8, total));
    const Hypergraph g = random_hypergraph(n, 2, e, rng.next());
    CHECK(is_bipartite(g).has_value() == induced_odd_cycles(g).empty());
  }
}

TEST_CASE("balancedness witness scan") {
  const auto triangle = is_balanced(k3());
  REQUIRE_FALSE(triangle.balanced);
  REQUIRE(triangle.witness.has_value());
  CHECK(triangle.witness->vertices == VertexSet{1, 2, 3});
  CHECK(triangle.witness->edge_indices == std::vector<std::size_t>{0, 1, 2});

  const Hypergraph four(6, 3, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}, {2, 3, 4}});
  const auto res = is_balanced(four);
  REQUIRE_FALSE(res.balanced);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->vertices == VertexSet{1, 3, 5});
  // witness edges are {1,2,3},{3,4,5},{5,6,1} under canonical edge order
  std::vector<VertexSet> witness_edges;
  for (std::size_t j : res.witness->edge_indices) {
    witness_edges.push_back(four.edges()[j]);
  }
  CHECK(witness_edges ==
        std::vector<VertexSet>{{1, 2, 3}, {1, 5, 6}, {3, 4, 5}});

  CHECK(is_balanced(cycle_graph(4)).balanced);

  CHECK_THROWS_AS(is_balanced(complete(15, 2)), GuardLimitError);
}

TEST_CASE("balance witness satisfies the submatrix condition") {
  Xorshift64Star rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(2));
    const int n = m + static_cast<int>(rng.below(static_cast<std::uint64_t>(7 - m)));
    const std::uint64_t total = binomial(n, m);
    const std::uint64_t e = 1 + rng.below(std::min<std::uint64_t>(8, total));
    const Hypergraph h = random_hypergraph(n, m, e, rng.next());
    const auto res = is_balanced(h);
    if (res.balanced) continue;
    REQUIRE(res.witness.has_value());
    const auto& w = *res.witness;
    REQUIRE(w.vertices.size() == w.edge_indices.size());
    CHECK(w.vertices.size() >= 3);
    CHECK(w.vertices.size() % 2 == 1);
    const IncidenceMatrix mat = incidence_matrix(h);
    for (int v : w.vertices) {
      int sum = 0;
      for (std::size_t j : w.edge_indices) sum += mat.at(v, static_cast<int>(j));
      CHECK(sum == 2);
    }
    for (std::size_t j : w.edge_indices) {
      int sum = 0;
      for (int v : w.vertices) sum += mat.at(v, static_cast<int>(j));
      CHECK(sum == 2);
    }
  }
}

TEST_CASE("family t2 edge sets") {
  CHECK(family_t2(3).edges() == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(family_t2(5).edges() ==
        std::vector<VertexSet>{{1, 2, 3}, {1, 2, 5}, {3, 4, 5}});
  CHECK(family_t2(6).edges() ==
        std::vector<VertexSet>{{1, 2, 3}, {1, 5, 6}, {3, 4, 5}});
  CHECK(family_t2(7).edges() ==
        std::vector<VertexSet>{
            {1, 2, 3}, {1, 2, 7}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}});
  CHECK(family_t2(8).edges() ==
        std::vector<VertexSet>{
            {1, 2, 3}, {1, 7, 8}, {2, 3, 4}, {3, 4, 5}, {5, 6, 7}});
  CHECK_THROWS_AS(family_t2(2), std::invalid_argument);
}

TEST_CASE("complete hypergraphs") {
  CHECK(complete(3, 3).edge_count() == 1);
  CHECK(complete(5, 2).edge_count() == 10);
  CHECK(complete(10, 3).edge_count() == 120);
  CHECK_THROWS_AS(complete(2, 3), std::invalid_argument);
}

TEST_CASE("padding and lifting") {
  const Hypergraph base = family_t2(5);

  const Hypergraph padded = pad_connected_3(base, 7);
  CHECK(padded.vertex_count() == 7);
  CHECK(padded.has_edge({1, 2, 6}));
  CHECK(padded.has_edge({1, 2, 7}));
  CHECK(induced(padded, {1, 2, 3, 4, 5}).edges == base.edges());
  CHECK(pad_connected_3(base, 5) == base);
  CHECK_THROWS_AS(pad_connected_3(Hypergraph(6, 3, {{1, 2, 3}}), 8),
                  std::invalid_argument);

  CHECK(lift_to_m(base, 3) == base);
  const Hypergraph lifted = lift_to_m(base, 4);
  CHECK(lifted.vertex_count() == 6);
  CHECK(lifted.edges() ==
        std::vector<VertexSet>{{1, 2, 3, 6}, {1, 2, 5, 6}, {3, 4, 5, 6}});
  const Hypergraph lifted5 = lift_to_m(family_t2(6), 5);
  CHECK(lifted5.vertex_count() == 8);
  const VertexSet fresh = {7, 8};
  for (const VertexSet& e : lifted5.edges()) {
    CHECK(std::includes(e.begin(), e.end(), fresh.begin(), fresh.end()));
  }
  CHECK(is_connected(lifted5));

  const Hypergraph wide = pad_to_n(lifted, {1, 2, 3}, 8);
  CHECK(wide.vertex_count() == 8);
  CHECK(wide.has_edge({1, 2, 3, 7}));
  CHECK(wide.has_edge({1, 2, 3, 8}));
  CHECK(is_connected(wide));
  CHECK(induced(wide, {1, 2, 3, 4, 5, 6}).edges == lifted.edges());
  CHECK(pad_to_n(lifted, {1, 2, 3}, 6) == lifted);
  CHECK_THROWS_AS(pad_to_n(lifted, {1, 1, 2}, 8), std::invalid_argument);
  CHECK_THROWS_AS(pad_to_n(lifted, {1, 2, 3}, 5), std::invalid_argument);
}

TEST_CASE("construct_family pipeline") {
  CHECK(construct_family(3, 3, 5).edges() ==
        std::vector<VertexSet>{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}});
  const Hypergraph h = construct_family(4, 6, 8);
  CHECK(h.vertex_count() == 8);
  CHECK(h.uniformity() == 4);
  CHECK(is_connected(h));
  CHECK_THROWS_AS(construct_family(2, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(construct_family(3, 5, 4), std::invalid_argument);
}

TEST_CASE("xorshift64* reference vectors") {
  Xorshift64Star one(1);
  CHECK(one.next() == 0x47e4ce4b896cdd1dULL);
  CHECK(one.next() == 0xabcfa6a8e079651dULL);
  CHECK(one.next() == 0xb9d10d8feb731f57ULL);
  CHECK(one.next() == 0x4db418a0bb1b019dULL);

  Xorshift64Star fortytwo(42);
  CHECK(fortytwo.next() == 0x56ce4ab7719ba3a0ULL);
  CHECK(fortytwo.next() == 0xc841eb53ebbb2ddaULL);

  // zero seeds get the fixed replacement register
  Xorshift64Star zero(0);
  CHECK(zero.next() == 0x0d83b3e29a21487aULL);
}

TEST_CASE("random hypergraphs are deterministic and exact") {
  CHECK(random_hypergraph(5, 2, 10, 7) == complete(5, 2));
  CHECK(random_hypergraph(6, 3, 1, 9).edge_count() == 1);
  CHECK(random_hypergraph(7, 3, 12, 123) == random_hypergraph(7, 3, 12, 123));
  CHECK_THROWS_AS(random_hypergraph(4, 2, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_hypergraph(4, 2, 0, 1), std::invalid_argument);

  // distinct edges, right count, and sane structure across seeds
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Hypergraph h = random_hypergraph(7, 3, 9, seed);
    CHECK(h.edge_count() == 9);
    std::set<VertexSet> dedup(h.edges().begin(), h.edges().end());
    CHECK(dedup.size() == 9);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(14, 7) == 3432);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial(70, 35), GuardLimitError);
}
