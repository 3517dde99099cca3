#include "hypercover/difftest.hpp"

#include "doctest.h"

using namespace hypercover;

TEST_CASE("instance draws are deterministic") {
  DiffTestConfig cfg;
  cfg.max_n = 7;
  Xorshift64Star a(1);
  Xorshift64Star b(1);
  for (int t = 0; t < 10; ++t) {
    const DiffInstance x = draw_instance(t, a, cfg);
    const DiffInstance y = draw_instance(t, b, cfg);
    CHECK(x.hypergraph == y.hypergraph);
    CHECK(x.instance_seed == y.instance_seed);
    CHECK(x.hypergraph.vertex_count() <= 7);
    CHECK(x.hypergraph.edge_count() <= 8);
    const int m = x.hypergraph.uniformity();
    CHECK((m == 2 || m == 3));
  }
}

TEST_CASE("fixed uniformity draws") {
  DiffTestConfig cfg;
  cfg.max_n = 8;
  cfg.m = 2;
  Xorshift64Star master(1);
  for (int t = 0; t < 10; ++t) {
    CHECK(draw_instance(t, master, cfg).hypergraph.uniformity() == 2);
  }
}

TEST_CASE("agreement invariants hold on a seeded corpus") {
  DiffTestConfig cfg;
  cfg.max_n = 6;
  Xorshift64Star master(3);
  for (int t = 0; t < 30; ++t) {
    const DiffInstance inst = draw_instance(t, master, cfg);
    const auto failures = check_instance(inst.hypergraph, cfg.limits);
    for (const std::string& f : failures) {
      FAIL_CHECK("trial ", t, ": ", f);
    }
  }
}

TEST_CASE("agreement invariants hold on forced complete instances") {
  // a full edge set forces every triangle to show up as an induced cycle
  CHECK(check_instance(complete(5, 2)).empty());
  CHECK(check_instance(complete(5, 3)).empty());
  CHECK(check_instance(random_hypergraph(5, 2, binomial(5, 2), 1)).empty());
}

TEST_CASE("agreement invariants hold at higher uniformities") {
  CHECK(check_instance(construct_family(4, 5, 7)).empty());
  CHECK(check_instance(construct_family(5, 6, 9)).empty());
}
