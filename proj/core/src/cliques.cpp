#include "cdfree/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace cdfree {

namespace {

void canonicalize(CliqueSet& cs) {
  for (auto& c : cs.cliques) std::sort(c.begin(), c.end());
  std::sort(cs.cliques.begin(), cs.cliques.end());
  cs.cliques.erase(std::unique(cs.cliques.begin(), cs.cliques.end()), cs.cliques.end());
}

std::vector<int> with_vertex(int v, const std::vector<int>& block) {
  std::vector<int> c;
  c.reserve(block.size() + 1);
  c.push_back(v);
  c.insert(c.end(), block.begin(), block.end());
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

CliqueSet cliques_at_vertex(const Graph& g, int v) {
  if (g.degree(v) == 0) return {{{v}}};
  auto part = disjoint_clique_partition(g, g.neighbors(v));
  if (auto* p3 = std::get_if<P3Witness>(&part)) throw not_diamond_free(p3->path);
  CliqueSet out;
  for (const auto& block : std::get<CliquePartition>(part).blocks)
    out.cliques.push_back(with_vertex(v, block));
  canonicalize(out);
  return out;
}

CliqueSet cliques_touching_ball(const Graph& g, int v) {
  if (g.degree(v) == 0) return {{{v}}};
  const int n = g.vertex_count();
  const auto& n1 = g.neighbors(v);

  // 0 = elsewhere, 1 = N(v), 2 = distance two, 3 = the root.
  std::vector<char> state(static_cast<size_t>(n), 0);
  std::vector<int> n1_hits(static_cast<size_t>(n), 0);
  state[static_cast<size_t>(v)] = 3;
  for (int w : n1) state[static_cast<size_t>(w)] = 1;
  for (int w : n1)
    for (int x : g.neighbors(w)) {
      if (state[static_cast<size_t>(x)] == 3 || state[static_cast<size_t>(x)] == 1) continue;
      state[static_cast<size_t>(x)] = 2;
      ++n1_hits[static_cast<size_t>(x)];
    }

  detail::CliquePartitioner partitioner(g);
  CliqueSet out;

  auto top = partitioner.run(n1);
  if (auto* p3 = std::get_if<P3Witness>(&top)) throw not_diamond_free(p3->path);
  for (const auto& block : std::get<CliquePartition>(top).blocks)
    out.cliques.push_back(with_vertex(v, block));

  std::vector<int> ax, ax_deep;
  for (int x : n1) {
    ax.clear();
    ax_deep.clear();
    for (int y : g.neighbors(x))
      if (state[static_cast<size_t>(y)] == 2) ax.push_back(y);
    for (int y : ax) {
      if (n1_hits[static_cast<size_t>(y)] >= 2) {
        // y also sees another neighbour of v, so {x, y} cannot extend:
        // a third mutual neighbour would close a diamond or a house.
        out.cliques.push_back({std::min(x, y), std::max(x, y)});
      } else {
        ax_deep.push_back(y);
      }
    }
    auto sub = partitioner.run(ax_deep);
    if (auto* p3 = std::get_if<P3Witness>(&sub)) throw not_diamond_free(p3->path);
    for (const auto& block : std::get<CliquePartition>(sub).blocks)
      out.cliques.push_back(with_vertex(x, block));
  }
  canonicalize(out);
  return out;
}

CliqueSet enumerate_maximal_cliques(const Graph& g) {
  CliqueSet out;
  detail::CliquePartitioner partitioner(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      out.cliques.push_back({v});
      continue;
    }
    auto part = partitioner.run(g.neighbors(v));
    if (auto* p3 = std::get_if<P3Witness>(&part)) throw not_diamond_free(p3->path);
    for (const auto& block : std::get<CliquePartition>(part).blocks)
      if (v < block.front()) out.cliques.push_back(with_vertex(v, block));
  }
  canonicalize(out);
  return out;
}

std::vector<int> max_clique(const Graph& g, std::optional<RecognitionConfig> cfg) {
  if (g.vertex_count() == 0) return {};
  const int f = cfg ? cfg->degree_threshold : default_degree_threshold(g);
  if (f < 1) throw std::invalid_argument("degree threshold must be >= 1");

  std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
  std::vector<int> best;
  auto consider = [&](const std::vector<int>& clique, const std::vector<int>& ids) {
    if (clique.size() <= best.size()) return;
    best.clear();
    for (int x : clique) best.push_back(ids[static_cast<size_t>(x)]);
    std::sort(best.begin(), best.end());
  };
  auto remap_p3 = [&](const std::array<int, 3>& p3, const std::vector<int>& ids) {
    return std::array<int, 3>{ids[static_cast<size_t>(p3[0])], ids[static_cast<size_t>(p3[1])],
                              ids[static_cast<size_t>(p3[2])]};
  };

  InducedSubgraph live;
  for (;;) {
    std::vector<int> keep;
    for (int u = 0; u < g.vertex_count(); ++u)
      if (alive[static_cast<size_t>(u)]) keep.push_back(u);
    live = induced_subgraph(g, keep);
    const Graph& h = live.graph;
    if (h.vertex_count() == 0) return best;

    int vmax = 0;
    for (int u = 1; u < h.vertex_count(); ++u)
      if (h.degree(u) > h.degree(vmax)) vmax = u;
    if (h.degree(vmax) <= f) break;

    CliqueSet around;
    try {
      around = cliques_touching_ball(h, vmax);
    } catch (const not_diamond_free& e) {
      throw not_diamond_free(remap_p3(e.p3(), live.vertices));
    }
    for (const auto& c : around.cliques) consider(c, live.vertices);

    alive[static_cast<size_t>(live.vertices[static_cast<size_t>(vmax)])] = 0;
    for (int u : h.neighbors(vmax))
      alive[static_cast<size_t>(live.vertices[static_cast<size_t>(u)])] = 0;
  }

  const Graph& h = live.graph;
  for (int u = 0; u < h.vertex_count(); ++u) {
    CliqueSet at;
    try {
      at = cliques_at_vertex(h, u);
    } catch (const not_diamond_free& e) {
      throw not_diamond_free(remap_p3(e.p3(), live.vertices));
    }
    for (const auto& c : at.cliques) consider(c, live.vertices);
  }
  return best;
}

namespace {

struct BronKerbosch {
  const std::vector<std::uint64_t>& adj;
  std::vector<std::uint64_t> found;

  void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
    if (p == 0 && x == 0) {
      found.push_back(r);
      return;
    }
    // Pivot on the vertex covering most of P.
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t rest = px; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      int cover = std::popcount(p & adj[static_cast<size_t>(u)]);
      if (cover > best) {
        best = cover;
        pivot = u;
      }
    }
    std::uint64_t cand = p & ~adj[static_cast<size_t>(pivot)];
    for (std::uint64_t rest = cand; rest;) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint64_t bit = std::uint64_t{1} << u;
      run(r | bit, p & adj[static_cast<size_t>(u)], x & adj[static_cast<size_t>(u)]);
      p &= ~bit;
      x |= bit;
    }
  }
};

}  // namespace

CliqueSet brute_force_cliques(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 40)
    throw std::invalid_argument("brute_force_cliques: guarded at n <= 40, got n = " +
                                std::to_string(n));
  CliqueSet out;
  if (n == 0) return out;
  std::vector<std::uint64_t> adj(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) adj[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
  BronKerbosch bk{adj, {}};
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  bk.run(0, all, 0);
  for (std::uint64_t mask : bk.found) {
    std::vector<int> c;
    for (std::uint64_t rest = mask; rest;) {
      c.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
    out.cliques.push_back(std::move(c));
  }
  canonicalize(out);
  return out;
}

CliqueStats clique_stats(const Graph& g) {
  auto cs = enumerate_maximal_cliques(g);
  return {static_cast<std::int64_t>(cs.cliques.size()), cs.size_sum()};
}

std::int64_t cut_edge_count(const Graph& g, int v) {
  std::int64_t count = 0;
  for (int w : g.neighbors(v))
    for (int x : g.neighbors(w))
      if (x != v && !g.adjacent(v, x)) ++count;
  return count;
}

}  // namespace cdfree
