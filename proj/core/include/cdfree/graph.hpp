#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace cdfree {

/// Edge-list input could not be parsed; the message names the offending line.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A scan contradicted the structural precondition of an operation: the
/// input graph lies outside the class the operation requires.
class not_in_class : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An induced P3 turned up inside a neighbourhood, i.e. the graph has an
/// induced diamond. Carries the P3: a-b and b-c are edges, a-c is not.
class not_diamond_free : public not_in_class {
 public:
  explicit not_diamond_free(const std::array<int, 3>& p3)
      : not_in_class("neighbourhood is not a disjoint union of cliques: induced P3 " +
                     std::to_string(p3[0]) + "-" + std::to_string(p3[1]) + "-" +
                     std::to_string(p3[2])),
        p3_(p3) {}
  const std::array<int, 3>& p3() const noexcept { return p3_; }

 private:
  std::array<int, 3> p3_;
};

/// Immutable simple undirected graph over dense 0-based vertex ids.
/// Adjacency lists are kept sorted ascending; no self-loops, no parallel
/// edges. Safe to share across threads once constructed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Builds from an edge list. Edges may be given in either orientation and
  /// duplicates are collapsed. Ids out of [0,n) or self-loops throw
  /// std::invalid_argument.
  Graph(int n, std::span<const std::pair<int, int>> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  /// O(log d(u)) adjacency test. Always false for u == v.
  bool adjacent(int u, int v) const;

  /// All edges as (u, v) with u < v, in ascending lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Parses the text edge-list format: optional '#' comment lines, a header
/// line "n m", then exactly m lines "u v". Duplicate edge lines collapse to
/// one edge, but the declared m must equal the number of distinct edges.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

/// Canonical text form: "n m" header, then edges ascending with u < v,
/// every line newline-terminated. Byte-stable for equal graphs.
std::string serialize_graph(const Graph& g);
void serialize_graph(const Graph& g, std::ostream& out);

/// G[S] together with the id mapping. Vertices of the subgraph are the
/// members of S renumbered 0..|S)-1 in ascending original order.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;  // new id -> original id, ascending
  int index_of(int original) const;  // original id -> new id, -1 if absent
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep);

/// Breadth-first layering from a root, truncated at max_depth. Within a
/// layer vertices are processed in ascending id order, so the parent of a
/// discovered vertex is its smallest-id neighbour in the previous layer.
struct BfsLayers {
  int root = 0;
  std::vector<int> depth;                 // -1 when beyond max_depth / unreachable
  std::vector<int> parent;                // -1 for root and undiscovered vertices
  std::vector<std::vector<int>> layers;   // layers[0] == {root}, each ascending
};
BfsLayers bfs_layers(const Graph& g, int root, int max_depth);

/// N(u) ∩ N(v) by sorted merge, ascending. u must differ from v.
std::vector<int> common_neighbors(const Graph& g, int u, int v);

/// Partition of a vertex subset whose induced subgraph is a disjoint union
/// of cliques: one block per connected component, each complete.
struct CliquePartition {
  std::vector<std::vector<int>> blocks;  // each ascending, ordered by minimum member
};

/// Certificate that a subset is not a disjoint union of cliques:
/// path[0]-path[1] and path[1]-path[2] are edges, path[0]-path[2] is not.
struct P3Witness {
  std::array<int, 3> path;
};

std::variant<CliquePartition, P3Witness> disjoint_clique_partition(const Graph& g,
                                                                   std::span<const int> subset);

namespace detail {

/// Reusable scratch for repeated disjoint-union-of-cliques checks against
/// one graph. A run costs O(|S| + sum of degrees over S) after the first.
class CliquePartitioner {
 public:
  explicit CliquePartitioner(const Graph& g);
  std::variant<CliquePartition, P3Witness> run(std::span<const int> subset);

 private:
  const Graph* g_;
  std::vector<int> stamp_;  // epoch when the vertex was last marked as member
  std::vector<int> comp_;   // component index within the current run
  int epoch_ = 0;
};

int ceil_sqrt(long long n);
int ceil_cbrt(long long n);

}  // namespace detail

}  // namespace cdfree
