#include "hypercover/io.hpp"

#include <algorithm>

#include "doctest.h"
#include "hypercover/prng.hpp"

using namespace hypercover;

TEST_CASE("hypergraph JSON round trip") {
  Xorshift64Star rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(2));
    const int n = m + static_cast<int>(rng.below(static_cast<std::uint64_t>(8 - m + 1)));
    const std::uint64_t total = binomial(n, m);
    const std::uint64_t edges_drawn = 1 + rng.below(std::min<std::uint64_t>(8, total));
        const std::uint64_t inst_seed = rng.next();
        const Hypergraph h = random_hypergraph(n, m, edges_drawn, inst_seed);
    CHECK(hypergraph_from_json(to_json(h)) == h);
  }
}

TEST_CASE("hypergraph JSON is order-insensitive and strict") {
  const Hypergraph a = hypergraph_from_json(
      R"({"n": 6, "m": 3, "edges": [[5,6,1],[1,2,3],[3,4,5]]})");
  CHECK(a == family_t2(6));

  // serialization is canonical and repeatable
  CHECK(to_json(a) == to_json(family_t2(6)));

  CHECK_THROWS_AS(hypergraph_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(hypergraph_from_json(R"({"n": 3, "m": 3})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      hypergraph_from_json(R"({"n": 4, "m": 2, "edges": [[1,2],[1,2]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      hypergraph_from_json(R"({"n": 2, "m": 2, "edges": [[1,3]]})"),
      std::invalid_argument);
}

TEST_CASE("profile JSON shape") {
  const std::string text = to_json(ass_square(family_t2(6)));
  CHECK(text.find("\"power\": 2") != std::string::npos);
  CHECK(text.find("\"minimal\"") != std::string::npos);
  CHECK(text.find("\"prime\": [") != std::string::npos);
  CHECK(text.find("\"witness\": [") != std::string::npos);

  // criterion-only profiles carry null witnesses
  const Hypergraph k3(3, 2, {{1, 2}, {2, 3}, {1, 3}});
  const std::string crit = to_json(graph_ass_criterion(k3));
  CHECK(crit.find("\"witness\": null") != std::string::npos);
}

TEST_CASE("analyze output is byte-identical across runs") {
  const std::string once = to_json(ass_square(family_t2(9)));
  const std::string twice = to_json(ass_square(family_t2(9)));
  CHECK(once == twice);
}

TEST_CASE("export of the 9-vertex cube-gap example lists all ten generators") {
  const Hypergraph h(9, 3,
                     {{2, 4, 8},
                      {3, 5, 6},
                      {4, 7, 9},
                      {6, 8, 9},
                      {3, 4, 7},
                      {1, 2, 9},
                      {1, 4, 6},
                      {1, 8, 9},
                      {2, 5, 9},
                      {3, 4, 6}});
  const std::string script = macaulay2_script(h);
  CHECK(script.find("R = QQ[x_1..x_9];") != std::string::npos);
  const std::string ideal_line = script.substr(script.find("monomialIdeal"));
  std::size_t vars = 0;
  for (std::size_t at = ideal_line.find("x_"); at != std::string::npos;
       at = ideal_line.find("x_", at + 1)) {
    ++vars;
  }
  CHECK(vars == 30);  // 10 edges of 3 variables each
  CHECK(std::count(ideal_line.begin(), ideal_line.end(), ',') == 9);
}
