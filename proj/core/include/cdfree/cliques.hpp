#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdfree/graph.hpp"
#include "cdfree/recognition.hpp"

namespace cdfree {

/// Deduplicated collection of maximal cliques: every member list ascending,
/// the collection sorted lexicographically.
struct CliqueSet {
  std::vector<std::vector<int>> cliques;

  std::int64_t size_sum() const {
    std::int64_t s = 0;
    for (const auto& c : cliques) s += static_cast<std::int64_t>(c.size());
    return s;
  }
};

struct CliqueStats {
  std::int64_t count = 0;
  std::int64_t size_sum = 0;
};

/// The maximal cliques containing v in a diamond-free graph: one per block
/// of the clique partition of N(v), or {v} alone for an isolated vertex.
/// At most d(v) cliques with sizes summing to at most 2 d(v).
/// Throws not_diamond_free when N(v) is not a disjoint union of cliques.
CliqueSet cliques_at_vertex(const Graph& g, int v);

/// All maximal cliques of a (house, diamond)-free graph that intersect
/// {v} ∪ N(v). Linear in n + m: cliques through v come from the partition of
/// N(v); cliques avoiding v hang off exactly one neighbour x and live in
/// N(x) ∩ N2(v), where distance-2 vertices with two neighbours in N(v) can
/// only form two-vertex maximal cliques and are treated as singletons.
CliqueSet cliques_touching_ball(const Graph& g, int v);

/// Every maximal clique of a diamond-free graph, each emitted exactly once
/// (a clique is claimed by its minimum-id member).
CliqueSet enumerate_maximal_cliques(const Graph& g);

/// A largest clique of a (house, diamond)-free graph. While the live graph
/// has a vertex of degree above the threshold, enumerate the cliques
/// touching its ball and delete the ball; afterwards scan the low-degree
/// remainder vertex by vertex.
std::vector<int> max_clique(const Graph& g, std::optional<RecognitionConfig> cfg = std::nullopt);

/// Reference oracle: all maximal cliques of an arbitrary graph by
/// Bron-Kerbosch with pivoting. Guarded at n <= 40.
CliqueSet brute_force_cliques(const Graph& g);

/// Count and total size of enumerate_maximal_cliques(g).
CliqueStats clique_stats(const Graph& g);

/// Number of edges leaving N(v) outward: |{wx in E : w in N(v), x outside
/// N(v) and x != v}|. At most n when the graph is (C4, diamond)-free.
std::int64_t cut_edge_count(const Graph& g, int v);

}  // namespace cdfree
