#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdfree/generators.hpp"
#include "cdfree/recognition.hpp"
#include "oracles.hpp"

using namespace cdfree;

TEST_CASE("incidence plane generator") {
  SUBCASE("order 2 is the 3-regular graph on 14 vertices") {
    Graph g = projective_plane_graph(2);
    CHECK(g.vertex_count() == 14);
    CHECK(g.edge_count() == 21);
    for (int v = 0; v < 14; ++v) CHECK(g.degree(v) == 3);
    CHECK(recognize_naive(g).free);
  }
  SUBCASE("order 3 is 4-regular on 26 vertices") {
    Graph g = projective_plane_graph(3);
    CHECK(g.vertex_count() == 26);
    CHECK(g.edge_count() == 52);
    for (int v = 0; v < 26; ++v) CHECK(g.degree(v) == 4);
    CHECK(recognize_naive(g).free);
  }
  SUBCASE("non-prime orders are rejected with a pointer at prime powers") {
    CHECK_THROWS_AS(projective_plane_graph(4), unsupported_order);
    CHECK_THROWS_AS(projective_plane_graph(9), unsupported_order);
    CHECK_THROWS_AS(projective_plane_graph(1), std::invalid_argument);
    CHECK_THROWS_AS(projective_plane_graph(-3), std::invalid_argument);
  }
  SUBCASE("plane axioms pairwise up to order 13") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
      Graph g = projective_plane_graph(p);
      int q = (g.vertex_count()) / 2;
      CHECK(q == p * p + p + 1);
      CHECK(g.edge_count() == q * (p + 1));
      // any two lines meet in exactly one point, and dually
      for (int offset : {0, q}) {
        for (int a = offset; a < offset + q; ++a)
          for (int b = a + 1; b < offset + q; ++b)
            REQUIRE(common_neighbors(g, a, b).size() == 1);
      }
      REQUIRE(recognize_naive(g).free);
    }
  }
}

TEST_CASE("named graphs") {
  SUBCASE("diamond degrees") {
    Graph d = named_graph("diamond");
    CHECK(d.vertex_count() == 4);
    CHECK(d.edge_count() == 5);
    CHECK(d.degree(0) == 3);
    CHECK(d.degree(1) == 3);
    CHECK(d.degree(2) == 2);
    CHECK(d.degree(3) == 2);
  }
  SUBCASE("house is the complement of P5 and contains an induced C4") {
    Graph h = named_graph("house");
    CHECK(h.vertex_count() == 5);
    CHECK(h.edge_count() == 6);
    Graph p5 = named_graph("p_k", std::vector<int>{5});
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) CHECK(h.adjacent(u, v) == !p5.adjacent(u, v));
    CHECK(oracle::contains_induced_c4(h));
  }
  SUBCASE("petersen") {
    Graph p = named_graph("petersen");
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    // girth 5: adjacent pairs have no common neighbour, others exactly one
    for (int u = 0; u < 10; ++u)
      for (int v = u + 1; v < 10; ++v)
        CHECK(common_neighbors(p, u, v).size() == (p.adjacent(u, v) ? 0u : 1u));
    CHECK(recognize_naive(p).free);
  }
  SUBCASE("parameterized families") {
    CHECK(named_graph("c_k", std::vector<int>{6}).edge_count() == 6);
    CHECK(named_graph("k_n", std::vector<int>{5}).edge_count() == 10);
    CHECK(named_graph("k_ab", std::vector<int>{2, 3}).edge_count() == 6);
    CHECK(named_graph("friendship", std::vector<int>{3}).vertex_count() == 7);
    CHECK(named_graph("star", std::vector<int>{4}).edge_count() == 4);
    CHECK(named_graph("p_k", std::vector<int>{1}).vertex_count() == 1);
  }
  SUBCASE("unknown names list the supported set") {
    try {
      named_graph("tesseract");
      FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("petersen") != std::string::npos);
    }
    CHECK_THROWS_AS(named_graph("c_k", std::vector<int>{2}), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("p_k"), std::invalid_argument);
  }
}

TEST_CASE("seeded random in-class graphs") {
  SUBCASE("degenerate arguments") {
    CHECK(random_free_graph(1, 5, 7).vertex_count() == 1);
    CHECK(random_free_graph(10, 0, 7).edge_count() == 0);
    CHECK_THROWS_AS(random_free_graph(0, 0, 7), std::invalid_argument);
  }
  SUBCASE("deterministic in the seed, byte for byte") {
    Graph a = random_free_graph(20, 30, 42);
    Graph b = random_free_graph(20, 30, 42);
    CHECK(serialize_graph(a) == serialize_graph(b));
    Graph c = random_free_graph(20, 30, 43);
    CHECK(serialize_graph(a) != serialize_graph(c));
  }
  SUBCASE("outputs stay in class over 200 seeds") {
    for (int seed = 1; seed <= 200; ++seed) {
      int n = 2 + seed % 29;
      Graph g = random_free_graph(n, n * 2, static_cast<std::uint64_t>(seed));
      REQUIRE(recognize_naive(g).free);
      REQUIRE(oracle::is_c4_diamond_free(g));
    }
  }
  SUBCASE("budget is honoured when satisfiable") {
    Graph g = random_free_graph(12, 5, 9);
    CHECK(g.edge_count() == 5);
  }
}
