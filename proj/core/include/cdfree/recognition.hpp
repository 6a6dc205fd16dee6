#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "cdfree/graph.hpp"

namespace cdfree {

enum class ForbiddenKind { c4, diamond };

/// Outcome of a recognition run. When forbidden, `witness` holds four
/// distinct vertex ids inducing exactly the named subgraph in the input:
/// four edges in a cycle for a C4, five edges for a diamond.
struct Verdict {
  bool free = true;
  ForbiddenKind kind = ForbiddenKind::c4;
  std::array<int, 4> witness{};

  static Verdict ok() { return {}; }
  static Verdict forbidden(ForbiddenKind k, std::array<int, 4> w) { return {false, k, w}; }
};

/// Degree threshold separating ball-deletion rounds from the direct scan.
struct RecognitionConfig {
  int degree_threshold = 1;  // must be >= 1
};

/// Default threshold: max(1, ceil(m^(1/3))), computed once from the input.
int default_degree_threshold(const Graph& g);

/// Classifies the subgraph induced by four distinct vertices: C4 when it has
/// four edges all of degree two, diamond when it has five edges, otherwise
/// nothing.
std::optional<ForbiddenKind> find_witness_kind(const Graph& g, const std::array<int, 4>& four);

/// Ground-truth engine: a graph is (C4, diamond)-free iff every nonadjacent
/// vertex pair has at most one common neighbour. Scans pairs in ascending
/// lexicographic order, so the reported witness is deterministic.
Verdict recognize_naive(const Graph& g);

/// Per-vertex bounded search engine: from every vertex, walk to distance two
/// and stop as soon as a distance-2 vertex is seen by two distance-1
/// vertices. O(m * maxdeg) total.
Verdict recognize_mdelta(const Graph& g);

/// A graph with per-vertex liveness flags and live-degree counters.
/// Deletions clear flags; adjacency lists are never rebuilt.
class PrunableGraph {
 public:
  explicit PrunableGraph(const Graph& g);
  explicit PrunableGraph(Graph&&) = delete;  // must outlive this view

  const Graph& base() const noexcept { return *base_; }
  bool alive(int v) const { return alive_[static_cast<size_t>(v)] != 0; }
  int live_degree(int v) const { return live_degree_[static_cast<size_t>(v)]; }
  int live_count() const noexcept { return live_count_; }

  /// Live vertex of maximum live degree, smallest id on ties; -1 when none.
  int max_live_degree_vertex() const;

  struct BallDeleted {
    int removed = 0;
  };

  friend std::variant<Verdict, BallDeleted> prune_ball_check(PrunableGraph& pg, int v);
  friend Verdict scan_live_mdelta(PrunableGraph& pg);

 private:
  void remove_vertex(int v);

  const Graph* base_;
  std::vector<char> alive_;
  std::vector<int> live_degree_;
  int live_count_ = 0;

  // Scratch reused across prune calls; all epoch- or token-stamped.
  std::vector<int> mark_, mark_epoch_;      // BFS level + validity
  std::vector<int> parent1_;                // distance-2 vertex -> its unique live neighbour at distance 1
  std::vector<int> comp1_;                  // distance-1 vertex -> clique component label
  std::vector<long long> seen_token_;       // per-parent last-seen stamp for the sibling scan
  std::vector<int> seen_y_;
  long long seen_counter_ = 0;
  detail::CliquePartitioner partitioner_;
  int epoch_ = 0;
};

using BallDeleted = PrunableGraph::BallDeleted;

/// Checks whether any C4 or diamond of the live graph touches {v} ∪ N(v),
/// via a depth-3 search from v. On a clean ball, deletes it and reports the
/// number of removed vertices; the deletion is safe in the sense that the
/// live graph's verdict is unchanged by it.
std::variant<Verdict, BallDeleted> prune_ball_check(PrunableGraph& pg, int v);

/// Threshold engine: repeatedly prunes the ball of the maximum-live-degree
/// vertex while that degree exceeds the threshold, then runs the bounded
/// per-vertex scan on the remaining live graph. The verdict outcome matches
/// recognize_naive for every graph and every threshold >= 1.
Verdict recognize_threshold(const Graph& g, std::optional<RecognitionConfig> cfg = std::nullopt);

}  // namespace cdfree
