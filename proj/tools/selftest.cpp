#include "selftest.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "cdfree/cliques.hpp"
#include "cdfree/generators.hpp"
#include "cdfree/recognition.hpp"

namespace cdfree::tools {

namespace {

Graph graph_from_mask(int n, unsigned long long mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

bool verdict_ok(const Graph& g, const Verdict& v, std::ostream& out, const char* engine) {
  if (v.free) return true;
  auto kind = find_witness_kind(g, v.witness);
  if (kind && *kind == v.kind) return true;
  out << "FAIL: " << engine << " produced an invalid witness on " << serialize_graph(g);
  return false;
}

bool engines_agree_exhaustive(std::ostream& out, long long& graphs) {
  for (int n = 0; n <= 6; ++n) {
    int bits = n * (n - 1) / 2;
    for (unsigned long long mask = 0; mask < (1ull << bits); ++mask) {
      Graph g = graph_from_mask(n, mask);
      Verdict naive = recognize_naive(g);
      Verdict mdelta = recognize_mdelta(g);
      if (!verdict_ok(g, naive, out, "naive") || !verdict_ok(g, mdelta, out, "mdelta")) return false;
      bool agree = naive.free == mdelta.free;
      for (int f : {1, 2, 3}) {
        Verdict th = recognize_threshold(g, RecognitionConfig{f});
        if (!verdict_ok(g, th, out, "threshold")) return false;
        agree = agree && naive.free == th.free;
      }
      if (!agree) {
        out << "FAIL: engines disagree on " << serialize_graph(g);
        return false;
      }
      ++graphs;
    }
  }
  return true;
}

bool clique_set_contains(const CliqueSet& cs, const std::vector<int>& c) {
  return std::binary_search(cs.cliques.begin(), cs.cliques.end(), c);
}

bool clique_properties(std::ostream& out, long long& checks) {
  for (int seed = 1; seed <= 150; ++seed) {
    int n = 4 + seed % 22;
    int budget = n + (seed * 7) % (2 * n);
    Graph g = random_free_graph(n, budget, static_cast<std::uint64_t>(seed));
    CliqueSet brute = brute_force_cliques(g);
    CliqueSet enumd = enumerate_maximal_cliques(g);
    if (brute.cliques != enumd.cliques) {
      out << "FAIL: enumeration disagrees with brute force on seed " << seed << "\n";
      return false;
    }
    auto best = max_clique(g);
    size_t brute_best = 0;
    for (const auto& c : brute.cliques) brute_best = std::max(brute_best, c.size());
    if (best.size() != brute_best) {
      out << "FAIL: max_clique size " << best.size() << " vs brute " << brute_best << " on seed "
          << seed << "\n";
      return false;
    }
    for (int v = 0; v < n; ++v) {
      auto at = cliques_at_vertex(g, v);
      int d = g.degree(v);
      if (d >= 1 &&
          (static_cast<int>(at.cliques.size()) > d || at.size_sum() > 2 * static_cast<long long>(d))) {
        out << "FAIL: per-vertex clique bounds violated at v=" << v << " seed " << seed << "\n";
        return false;
      }
      CliqueSet expect;
      for (const auto& c : brute.cliques) {
        bool touches = false;
        for (int x : c)
          if (x == v || g.adjacent(x, v)) touches = true;
        if (touches) expect.cliques.push_back(c);
      }
      auto ball = cliques_touching_ball(g, v);
      if (ball.cliques != expect.cliques) {
        out << "FAIL: ball enumeration incomplete at v=" << v << " seed " << seed << "\n";
        return false;
      }
      if (cut_edge_count(g, v) > n) {
        out << "FAIL: outgoing edge bound violated at v=" << v << " seed " << seed << "\n";
        return false;
      }
      checks += 3;
    }
  }
  return true;
}

// In a (house, diamond)-free graph, when nonadjacent v and y share two or
// more neighbours, every common neighbour x makes both {x,v} and {x,y}
// maximal. Bipartite graphs are triangle-free, hence in the class, and have
// plenty of such pairs.
bool pair_clique_property(std::ostream& out, long long& checks) {
  for (int seed = 1; seed <= 150; ++seed) {
    int a = 2 + seed % 6;
    int b = 2 + (seed / 2) % 6;
    std::mt19937_64 rng(static_cast<std::uint64_t>(seed) * 7919);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (rng() % 100 < 55) edges.emplace_back(i, a + j);
    Graph g(a + b, edges);
    CliqueSet brute = brute_force_cliques(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int y = v + 1; y < g.vertex_count(); ++y) {
        if (g.adjacent(v, y)) continue;
        auto common = common_neighbors(g, v, y);
        if (common.size() < 2) continue;
        for (int x : common) {
          std::vector<int> xv{std::min(x, v), std::max(x, v)};
          std::vector<int> xy{std::min(x, y), std::max(x, y)};
          if (!clique_set_contains(brute, xv) || !clique_set_contains(brute, xy)) {
            out << "FAIL: expected maximal pair cliques missing, seed " << seed << "\n";
            return false;
          }
          ++checks;
        }
      }
    }
  }
  return true;
}

}  // namespace

int run_selftest(std::ostream& out) {
  long long graphs = 0;
  if (!engines_agree_exhaustive(out, graphs)) return 1;
  out << "ok: engine agreement, exhaustive over all labeled graphs up to n=6 (" << graphs
      << " graphs)\n";

  long long checks = 0;
  if (!clique_properties(out, checks)) return 1;
  out << "ok: clique machinery vs brute force on seeded random instances (" << checks
      << " checks)\n";

  long long pair_checks = 0;
  if (!pair_clique_property(out, pair_checks)) return 1;
  out << "ok: two-vertex maximal cliques at distance-two meetings (" << pair_checks
      << " checks)\n";

  out << "selftest passed\n";
  return 0;
}

}  // namespace cdfree::tools
