#include "cdfree/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace cdfree {

Graph::Graph(int n) : n_(n), m_(0), adj_(static_cast<size_t>(std::max(n, 0))) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  std::vector<std::pair<int, int>> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    es.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  for (auto [u, v] : es) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  m_ = static_cast<int>(es.size());
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

// Strips one trailing '\r' so CRLF input parses.
std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

bool is_blank_or_comment(std::string_view s) {
  size_t i = s.find_first_not_of(" \t");
  return i == std::string_view::npos || s[i] == '#';
}

// Parses exactly `count` integers and nothing else from the line.
bool parse_ints(std::string_view line, std::span<long long> out) {
  std::istringstream is{std::string(line)};
  for (auto& x : out)
    if (!(is >> x)) return false;
  std::string rest;
  if (is >> rest) return false;
  return true;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;

  auto next_data_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::string_view body = trim_cr(line);
      if (is_blank_or_comment(body)) continue;
      out.assign(body);
      return true;
    }
    return false;
  };

  std::string data;
  if (!next_data_line(data)) throw parse_error(lineno, "missing header line \"n m\"");
  {
    std::array<long long, 2> hm{};
    if (!parse_ints(data, hm) || hm[0] < 0 || hm[1] < 0)
      throw parse_error(lineno, "malformed header, expected \"n m\": \"" + data + "\"");
    n = hm[0];
    m = hm[1];
    constexpr long long kMax = 1ll << 30;
    if (n > kMax || m > 2 * kMax)
      throw parse_error(lineno, "header out of supported range: \"" + data + "\"");
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(std::min(m, 1ll << 20)));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(data))
      throw parse_error(lineno, "expected " + std::to_string(m) + " edge lines, got " +
                                    std::to_string(i));
    std::array<long long, 2> uv{};
    if (!parse_ints(data, uv)) throw parse_error(lineno, "malformed edge line: \"" + data + "\"");
    auto [u, v] = std::pair(uv[0], uv[1]);
    if (u < 0 || v < 0) throw parse_error(lineno, "negative vertex id: \"" + data + "\"");
    if (u >= n || v >= n)
      throw parse_error(lineno, "vertex id not below n=" + std::to_string(n) + ": \"" + data + "\"");
    if (u == v) throw parse_error(lineno, "self-loop: \"" + data + "\"");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_data_line(data)) throw parse_error(lineno, "trailing content after declared edges");

  Graph g(static_cast<int>(n), edges);
  if (g.edge_count() != m)
    throw parse_error(lineno, "header declares m=" + std::to_string(m) + " but the file has " +
                                  std::to_string(g.edge_count()) + " distinct edges");
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_graph(is);
}

void serialize_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  serialize_graph(g, os);
  return os.str();
}

int InducedSubgraph::index_of(int original) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), original);
  if (it == vertices.end() || *it != original) return -1;
  return static_cast<int>(it - vertices.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  InducedSubgraph out;
  out.vertices.assign(keep.begin(), keep.end());
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  std::vector<int> newid(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < out.vertices.size(); ++i) {
    int v = out.vertices[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex id out of range");
    newid[static_cast<size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : out.vertices)
    for (int w : g.neighbors(v))
      if (v < w && newid[static_cast<size_t>(w)] >= 0)
        edges.emplace_back(newid[static_cast<size_t>(v)], newid[static_cast<size_t>(w)]);
  out.graph = Graph(static_cast<int>(out.vertices.size()), edges);
  return out;
}

BfsLayers bfs_layers(const Graph& g, int root, int max_depth) {
  if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("bfs_layers: bad root");
  if (max_depth < 0) throw std::invalid_argument("bfs_layers: negative depth");
  BfsLayers out;
  out.root = root;
  out.depth.assign(static_cast<size_t>(g.vertex_count()), -1);
  out.parent.assign(static_cast<size_t>(g.vertex_count()), -1);
  out.depth[static_cast<size_t>(root)] = 0;
  out.layers.push_back({root});
  for (int d = 0; d < max_depth; ++d) {
    std::vector<int> next;
    for (int u : out.layers[static_cast<size_t>(d)]) {
      for (int w : g.neighbors(u)) {
        if (out.depth[static_cast<size_t>(w)] >= 0) continue;
        out.depth[static_cast<size_t>(w)] = d + 1;
        out.parent[static_cast<size_t>(w)] = u;
        next.push_back(w);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.layers.push_back(std::move(next));
  }
  return out;
}

std::vector<int> common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("common_neighbors: u == v");
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

namespace detail {

CliquePartitioner::CliquePartitioner(const Graph& g)
    : g_(&g),
      stamp_(static_cast<size_t>(g.vertex_count()), 0),
      comp_(static_cast<size_t>(g.vertex_count()), -1) {}

std::variant<CliquePartition, P3Witness> CliquePartitioner::run(std::span<const int> subset) {
  const Graph& g = *g_;
  ++epoch_;
  for (int v : subset) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("disjoint_clique_partition: vertex id out of range");
    stamp_[static_cast<size_t>(v)] = epoch_;
  }
  auto in_set = [&](int v) { return stamp_[static_cast<size_t>(v)] == epoch_; };

  CliquePartition part;
  std::vector<int> queue;
  std::vector<int> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  // comp_ values from earlier epochs are stale; clear for current members.
  int ncomp = 0;
  for (int s : members) comp_[static_cast<size_t>(s)] = -1;

  std::vector<std::vector<int>> comps;
  for (int s : members) {
    if (comp_[static_cast<size_t>(s)] >= 0) continue;
    int id = ncomp++;
    comps.emplace_back();
    queue.clear();
    queue.push_back(s);
    comp_[static_cast<size_t>(s)] = id;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      comps[static_cast<size_t>(id)].push_back(u);
      for (int w : g.neighbors(u)) {
        if (!in_set(w) || comp_[static_cast<size_t>(w)] >= 0) continue;
        comp_[static_cast<size_t>(w)] = id;
        queue.push_back(w);
      }
    }
  }

  // Every component must be complete; a vertex with too few in-component
  // neighbours pinpoints an induced P3 via a depth-2 search.
  for (auto& c : comps) {
    std::sort(c.begin(), c.end());
    int size = static_cast<int>(c.size());
    for (int u : c) {
      int cnt = 0;
      for (int w : g.neighbors(u))
        if (in_set(w) && comp_[static_cast<size_t>(w)] == comp_[static_cast<size_t>(u)]) ++cnt;
      if (cnt == size - 1) continue;
      // u misses someone in its component: the first vertex found at
      // distance two inside the component closes the P3.
      std::vector<int> dist1;
      for (int w : g.neighbors(u))
        if (in_set(w)) dist1.push_back(w);
      for (int w : dist1) {
        for (int x : g.neighbors(w)) {
          if (!in_set(x) || x == u) continue;
          if (!g.adjacent(u, x)) return P3Witness{{u, w, x}};
        }
      }
      throw std::logic_error("disjoint_clique_partition: inconsistent component");
    }
  }
  part.blocks = std::move(comps);
  return part;
}

int ceil_sqrt(long long n) {
  if (n <= 0) return 0;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while ((r - 1) * (r - 1) >= n) --r;
  return static_cast<int>(r);
}

int ceil_cbrt(long long n) {
  if (n <= 0) return 0;
  auto r = static_cast<long long>(std::cbrt(static_cast<double>(n)));
  while (r * r * r < n) ++r;
  while ((r - 1) * (r - 1) * (r - 1) >= n) --r;
  return static_cast<int>(r);
}

}  // namespace detail

std::variant<CliquePartition, P3Witness> disjoint_clique_partition(const Graph& g,
                                                                   std::span<const int> subset) {
  detail::CliquePartitioner p(g);
  return p.run(subset);
}

}  // namespace cdfree
