#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdfree/generators.hpp"
#include "cdfree/recognition.hpp"
#include "oracles.hpp"

using namespace cdfree;

namespace {

Graph c4_graph() { return parse_graph("4 4\n0 1\n1 2\n2 3\n0 3\n"); }
Graph diamond_graph() { return parse_graph("4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n"); }

void check_witness(const Graph& g, const Verdict& v) {
  REQUIRE_FALSE(v.free);
  auto kind = find_witness_kind(g, v.witness);
  REQUIRE(kind.has_value());
  CHECK(*kind == v.kind);
}

}  // namespace

TEST_CASE("witness classification") {
  Graph c4 = c4_graph();
  CHECK(find_witness_kind(c4, {0, 1, 2, 3}) == ForbiddenKind::c4);
  Graph d = diamond_graph();
  CHECK(find_witness_kind(d, {0, 1, 2, 3}) == ForbiddenKind::diamond);
  Graph empty(4);
  CHECK_FALSE(find_witness_kind(empty, {0, 1, 2, 3}).has_value());
  CHECK_THROWS_AS(find_witness_kind(c4, {0, 1, 1, 3}), std::invalid_argument);
}

TEST_CASE("pairwise engine") {
  SUBCASE("C4 and diamond, pinned witnesses") {
    Verdict v = recognize_naive(c4_graph());
    CHECK_FALSE(v.free);
    CHECK(v.kind == ForbiddenKind::c4);
    CHECK(v.witness == std::array<int, 4>{0, 2, 1, 3});
    Verdict w = recognize_naive(diamond_graph());
    CHECK(w.kind == ForbiddenKind::diamond);
    CHECK(w.witness == std::array<int, 4>{2, 3, 0, 1});
  }
  SUBCASE("Petersen graph is free") { CHECK(recognize_naive(named_graph("petersen")).free); }
  SUBCASE("order-2 incidence plane (Heawood) is free") {
    CHECK(recognize_naive(projective_plane_graph(2)).free);
  }
  SUBCASE("agrees with the matrix-counting oracle") {
    for (int seed = 0; seed < 300; ++seed) {
      Graph g = oracle::random_graph(1 + seed % 12, 10 + seed % 70,
                                     static_cast<std::uint64_t>(seed));
      CHECK(recognize_naive(g).free == oracle::is_c4_diamond_free(g));
    }
  }
}

TEST_CASE("bounded-search engine") {
  SUBCASE("C4 found from vertex 0") {
    Verdict v = recognize_mdelta(c4_graph());
    CHECK_FALSE(v.free);
    CHECK(v.kind == ForbiddenKind::c4);
    CHECK(v.witness == std::array<int, 4>{0, 2, 1, 3});
  }
  SUBCASE("two triangles sharing a vertex are free") {
    CHECK(recognize_mdelta(named_graph("friendship", std::vector<int>{2})).free);
  }
  SUBCASE("K_{2,3} has an induced C4") {
    Verdict v = recognize_mdelta(named_graph("k_ab", std::vector<int>{2, 3}));
    CHECK_FALSE(v.free);
    CHECK(v.kind == ForbiddenKind::c4);
    check_witness(named_graph("k_ab", std::vector<int>{2, 3}), v);
  }
}

TEST_CASE("ball pruning") {
  SUBCASE("diamond: neighbourhood P3 fires at the degree-3 vertex") {
    Graph d = diamond_graph();
    PrunableGraph pg(d);
    auto r = prune_ball_check(pg, 0);
    auto* v = std::get_if<Verdict>(&r);
    REQUIRE(v != nullptr);
    CHECK(v->kind == ForbiddenKind::diamond);
    check_witness(d, *v);
  }
  SUBCASE("C5: clean ball, three vertices removed, one edge remains") {
    Graph c5 = named_graph("c_k", std::vector<int>{5});
    PrunableGraph pg(c5);
    auto r = prune_ball_check(pg, 0);
    auto* b = std::get_if<BallDeleted>(&r);
    REQUIRE(b != nullptr);
    CHECK(b->removed == 3);
    CHECK(pg.live_count() == 2);
    std::vector<int> live;
    for (int v = 0; v < 5; ++v)
      if (pg.alive(v)) live.push_back(v);
    CHECK(live == std::vector<int>{2, 3});
    CHECK(c5.adjacent(2, 3));
    // live degrees track the surviving neighbours only
    CHECK(pg.live_degree(2) == 1);
    CHECK(pg.live_degree(3) == 1);
  }
  SUBCASE("star: the whole graph is one ball") {
    Graph star = named_graph("star", std::vector<int>{4});
    PrunableGraph pg(star);
    auto r = prune_ball_check(pg, 0);
    auto* b = std::get_if<BallDeleted>(&r);
    REQUIRE(b != nullptr);
    CHECK(b->removed == 5);
    CHECK(pg.live_count() == 0);
  }
  SUBCASE("dead vertex is rejected") {
    Graph star = named_graph("star", std::vector<int>{4});
    PrunableGraph pg(star);
    prune_ball_check(pg, 0);
    CHECK_THROWS_AS(prune_ball_check(pg, 1), std::invalid_argument);
  }
  SUBCASE("a clean deletion never changes the verdict") {
    for (int seed = 0; seed < 120; ++seed) {
      Graph g = oracle::random_graph(2 + seed % 11, 15 + seed % 65,
                                     static_cast<std::uint64_t>(40000 + seed));
      bool before = oracle::is_c4_diamond_free(g);
      for (int v = 0; v < g.vertex_count(); ++v) {
        PrunableGraph pg(g);
        auto r = prune_ball_check(pg, v);
        if (std::holds_alternative<Verdict>(r)) {
          check_witness(g, std::get<Verdict>(r));
          continue;
        }
        std::vector<int> survivors;
        for (int u = 0; u < g.vertex_count(); ++u)
          if (pg.alive(u)) survivors.push_back(u);
        Graph rest = induced_subgraph(g, survivors).graph;
        REQUIRE(oracle::is_c4_diamond_free(rest) == before);
      }
    }
  }
}

TEST_CASE("threshold engine") {
  SUBCASE("order-3 plane: loop never entered, free via the direct scan") {
    Graph g = projective_plane_graph(3);
    CHECK(g.edge_count() == 52);
    CHECK(default_degree_threshold(g) == 4);
    CHECK(recognize_threshold(g).free);
  }
  SUBCASE("diamond: default threshold 2, pruning fires immediately") {
    Graph d = diamond_graph();
    CHECK(default_degree_threshold(d) == 2);
    Verdict v = recognize_threshold(d);
    CHECK_FALSE(v.free);
    CHECK(v.kind == ForbiddenKind::diamond);
    check_witness(d, v);
  }
  SUBCASE("empty graph is free") { CHECK(recognize_threshold(Graph(10)).free); }
  SUBCASE("six-cycle stays free for every threshold") {
    Graph c6 = named_graph("c_k", std::vector<int>{6});
    for (int f : {1, 2, 3, 6}) CHECK(recognize_threshold(c6, RecognitionConfig{f}).free);
  }
  SUBCASE("bad threshold rejected") {
    CHECK_THROWS_AS(recognize_threshold(Graph(3), RecognitionConfig{0}), std::invalid_argument);
  }
}

TEST_CASE("engines agree on random graphs for every threshold") {
  for (int seed = 0; seed < 10000; ++seed) {
    int n = 1 + seed % 12;
    Graph g = oracle::random_graph(n, 10 + seed % 75, static_cast<std::uint64_t>(90000 + seed));
    bool expect = recognize_naive(g).free;
    Verdict naive = recognize_naive(g);
    if (!naive.free) check_witness(g, naive);
    Verdict mdelta = recognize_mdelta(g);
    REQUIRE(mdelta.free == expect);
    if (!mdelta.free) check_witness(g, mdelta);
    for (int f : {1, 2, 3, n}) {
      Verdict th = recognize_threshold(g, RecognitionConfig{f});
      REQUIRE(th.free == expect);
      if (!th.free) check_witness(g, th);
    }
  }
}
