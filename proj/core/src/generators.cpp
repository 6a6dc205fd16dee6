#include "cdfree/generators.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <string>

#include "cdfree/recognition.hpp"

namespace cdfree {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// All projective triples over F_p, normalized (first nonzero coordinate 1),
// in lexicographic order: (0,0,1), (0,1,z), (1,y,z).
std::vector<std::array<int, 3>> projective_triples(int p) {
  std::vector<std::array<int, 3>> out;
  out.reserve(static_cast<size_t>(p) * p + p + 1);
  out.push_back({0, 0, 1});
  for (int z = 0; z < p; ++z) out.push_back({0, 1, z});
  for (int y = 0; y < p; ++y)
    for (int z = 0; z < p; ++z) out.push_back({1, y, z});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Graph projective_plane_graph(int p) {
  if (p < 2) throw std::invalid_argument("projective_plane_graph: order must be at least 2");
  if (!is_prime(p))
    throw unsupported_order("projective_plane_graph: order " + std::to_string(p) +
                            " is not prime; prime-power orders are not supported");
  const auto triples = projective_triples(p);
  const int q = static_cast<int>(triples.size());
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(q) * (p + 1));
  for (int line = 0; line < q; ++line) {
    const auto& l = triples[static_cast<size_t>(line)];
    for (int pt = 0; pt < q; ++pt) {
      const auto& x = triples[static_cast<size_t>(pt)];
      long long dot = static_cast<long long>(l[0]) * x[0] + static_cast<long long>(l[1]) * x[1] +
                      static_cast<long long>(l[2]) * x[2];
      if (dot % p == 0) edges.emplace_back(line, q + pt);
    }
  }
  return Graph(2 * q, edges);
}

namespace {

Graph path_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph(k, e);
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("c_k: need k >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph(k, e);
}

Graph complete_graph(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph(k, e);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("k_ab: need both sides >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph complement_of(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.vertex_count(), e);
}

int need_arg(std::string_view name, std::span<const int> args, size_t i, int min) {
  if (args.size() <= i)
    throw std::invalid_argument(std::string(name) + ": missing argument " + std::to_string(i + 1));
  if (args[i] < min)
    throw std::invalid_argument(std::string(name) + ": argument must be >= " + std::to_string(min));
  return args[i];
}

}  // namespace

Graph named_graph(std::string_view name, std::span<const int> args) {
  if (name == "c4") return cycle_graph(4);
  if (name == "diamond") {
    const std::pair<int, int> e[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return Graph(4, e);
  }
  if (name == "house") return complement_of(path_graph(5));
  if (name == "p_k") return path_graph(need_arg(name, args, 0, 1));
  if (name == "c_k") return cycle_graph(need_arg(name, args, 0, 3));
  if (name == "k_n") return complete_graph(need_arg(name, args, 0, 1));
  if (name == "k_ab") return complete_bipartite(need_arg(name, args, 0, 1), need_arg(name, args, 1, 1));
  if (name == "petersen") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(i, i + 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
  }
  if (name == "friendship") {
    int k = need_arg(name, args, 0, 1);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
      e.emplace_back(0, 2 * i + 1);
      e.emplace_back(0, 2 * i + 2);
      e.emplace_back(2 * i + 1, 2 * i + 2);
    }
    return Graph(2 * k + 1, e);
  }
  if (name == "star") {
    int k = need_arg(name, args, 0, 0);
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph(k + 1, e);
  }
  throw std::invalid_argument(
      "unknown graph name \"" + std::string(name) +
      "\"; supported: c4, diamond, house, p_k k, c_k k, k_n n, k_ab a b, petersen, "
      "friendship k, star k");
}

namespace {

// Would adding edge u-v give some nonadjacent pair a second common
// neighbour? Only pairs (u, y) with y adjacent to v, and (v, x) with x
// adjacent to u, can be affected, so the scan stays within distance two of
// the endpoints.
bool edge_breaks_class(const std::vector<std::vector<int>>& adj, int u, int v) {
  auto adjacent = [&](int a, int b) {
    return std::binary_search(adj[static_cast<size_t>(a)].begin(),
                              adj[static_cast<size_t>(a)].end(), b);
  };
  auto has_common = [&](int a, int b) {
    const auto& x = adj[static_cast<size_t>(a)];
    const auto& y = adj[static_cast<size_t>(b)];
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i] < y[j])
        ++i;
      else if (x[i] > y[j])
        ++j;
      else
        return true;
    }
    return false;
  };
  for (int y : adj[static_cast<size_t>(v)]) {
    if (y == u || adjacent(u, y)) continue;
    if (has_common(u, y)) return true;  // v would be the second common neighbour
  }
  for (int x : adj[static_cast<size_t>(u)]) {
    if (x == v || adjacent(v, x)) continue;
    if (has_common(v, x)) return true;
  }
  return false;
}

}  // namespace

Graph random_free_graph(int n, int edge_budget, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_free_graph: need n >= 1");
  if (edge_budget < 0) throw std::invalid_argument("random_free_graph: negative edge budget");

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  // Explicit Fisher-Yates with modulo draws: mt19937_64 output is fixed by
  // the standard, so the ordering is reproducible everywhere.
  std::mt19937_64 rng(seed);
  for (size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[static_cast<size_t>(rng() % i)]);

  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  int added = 0;
  for (auto [u, v] : pairs) {
    if (added >= edge_budget) break;
    if (edge_breaks_class(adj, u, v)) continue;
    adj[static_cast<size_t>(u)].insert(
        std::lower_bound(adj[static_cast<size_t>(u)].begin(), adj[static_cast<size_t>(u)].end(), v),
        v);
    adj[static_cast<size_t>(v)].insert(
        std::lower_bound(adj[static_cast<size_t>(v)].begin(), adj[static_cast<size_t>(v)].end(), u),
        u);
    ++added;
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(added));
  for (int u = 0; u < n; ++u)
    for (int v : adj[static_cast<size_t>(u)])
      if (u < v) edges.emplace_back(u, v);
  Graph g(n, edges);
  assert(recognize_naive(g).free);
  return g;
}

}  // namespace cdfree
