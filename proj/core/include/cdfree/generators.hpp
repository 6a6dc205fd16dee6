#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "cdfree/graph.hpp"

namespace cdfree {

/// The requested incidence-structure order is not supported (only prime
/// orders are implemented; prime powers would need extension-field
/// arithmetic).
class unsupported_order : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bipartite point/line incidence graph of the projective plane of prime
/// order p. With q = p^2 + p + 1: vertices 0..q-1 are lines, q..2q-1 are
/// points; the point (x:y:z) lies on the line [a:b:c] iff ax+by+cz = 0
/// (mod p). Homogeneous triples are normalized so their first nonzero
/// coordinate is 1 and enumerated in lexicographic order, which fixes the
/// vertex numbering. Every vertex has degree p + 1.
Graph projective_plane_graph(int p);

/// Fixed small graphs by name. Supported (with canonical numbering):
///   c4            cycle 0-1-2-3-0
///   diamond       K4 minus the edge 2-3 (edges 01 02 03 12 13)
///   house         complement of the path 0-1-2-3-4
///   p_k k         path 0-1-...-(k-1)
///   c_k k         cycle on k >= 3 vertices
///   k_n n         complete graph
///   k_ab a b      complete bipartite, sides 0..a-1 and a..a+b-1
///   petersen      outer cycle 0..4, spokes i-(i+5), inner 5+i adj 5+((i+2)%5)
///   friendship k  k triangles (0, 2i+1, 2i+2) sharing vertex 0
///   star k        centre 0, leaves 1..k
Graph named_graph(std::string_view name, std::span<const int> args = {});

/// Seeded random (C4, diamond)-free graph: candidate pairs are visited in a
/// Fisher-Yates order driven by mt19937_64 and an edge is kept only when no
/// nonadjacent pair would gain a second common neighbour. Deterministic in
/// (n, edge_budget, seed) across platforms.
Graph random_free_graph(int n, int edge_budget, std::uint64_t seed);

/// Identifier of the pseudo-random scheme behind random_free_graph, recorded
/// in generated file headers so fixtures can be regenerated bit-identically.
inline constexpr std::string_view kRandomFreeAlgorithmId = "fisher-yates/mt19937_64/v1";

}  // namespace cdfree
