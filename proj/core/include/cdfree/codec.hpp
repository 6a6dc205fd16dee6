#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cdfree/graph.hpp"

namespace cdfree {

// Binary stream layout ("cdfg" format, bit-exact):
//   magic 0x43 0x44 0x46 0x47 ("CDFG"), version byte 0x01, varint n,
//   then records, each tagged by one byte:
//     0x01 REMOVE_NBR     v, k, u_1..u_k     v leaves the live set; the u_i
//                                            are exactly its live neighbours
//     0x02 REMOVE_NONNBR  v, k, w_1..w_k     v leaves the live set; v is
//                                            adjacent to every live vertex
//                                            except itself and the w_i
//     0x03 SPLIT          v, s, g1_1..g1_s,  split the live set into the
//                         c, (y_1,x_1)..     listed part (the ball of v) and
//                         (y_c,x_c)          the rest; each pair y-x is an
//                                            edge between the two parts
//     0x00 END            the current live set is exhausted
//   All integers are unsigned LEB128 varints (base-128, low group first,
//   high bit continues). A SPLIT pushes the remainder then the listed part,
//   so the listed part replays first; END pops. Every edge is asserted
//   exactly once across the whole stream.

inline constexpr std::uint8_t kCodecMagic[4] = {0x43, 0x44, 0x46, 0x47};
inline constexpr std::uint8_t kCodecVersion = 0x01;

enum class RecordTag : std::uint8_t {
  end = 0x00,
  remove_nbr = 0x01,
  remove_nonnbr = 0x02,
  split = 0x03,
};

enum class DecodeErrorKind {
  bad_magic,
  bad_version,
  varint_overflow,
  truncated,
  unknown_tag,
  id_not_live,
  duplicate_edge,
  split_member_not_live,
  end_not_empty,
  trailing_data,
};

class decode_error : public std::runtime_error {
 public:
  decode_error(DecodeErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  DecodeErrorKind kind() const noexcept { return kind_; }

 private:
  DecodeErrorKind kind_;
};

/// Canonical encoding of a (C4, diamond)-free graph. The degree bound
/// t = ceil(sqrt(n)) is fixed from the input size: a live vertex with at
/// most t live neighbours is removed with its neighbour list; failing that,
/// one with at most t live non-neighbours is removed with its non-neighbour
/// list; otherwise the live set splits at the smallest live id. Scans are by
/// ascending id and restart after every removal, so the stream is
/// deterministic. Throws not_in_class when a split finds a vertex of the
/// remainder with two neighbours in the split-off ball.
std::vector<std::uint8_t> encode_graph(const Graph& g);

/// Mechanical replay of a record stream against a live-set stack; needs no
/// knowledge of the graph class. Malformed input throws decode_error with a
/// specific kind.
Graph decode_graph(std::span<const std::uint8_t> bytes);

/// Size-bound constant calibrated over the test corpus (exhaustive small
/// in-class graphs, incidence planes, seeded random instances); the maximum
/// observed ratio bits / (ceil(n^1.5) * ceil(log2(n+2))) is 40, attained at
/// n = 1 where the fixed header dominates.
inline constexpr int kSizeBoundConstant = 40;

/// kSizeBoundConstant * ceil(n^(3/2)) * ceil(log2(n+2)), in bits.
std::int64_t size_bound_bits(int n);

struct SizeReport {
  std::int64_t bits = 0;
  std::int64_t bound = 0;
};

/// Encoded size of g in bits next to the calibrated bound.
SizeReport encoded_size_report(const Graph& g);

/// Structural accounting of an encoded stream, for bound checks: replays
/// only live-set sizes.
struct StreamStats {
  int vertex_count = 0;
  int max_remove_list = 0;   // longest REMOVE_* id list
  int split_count = 0;
  int min_split_part = 0;    // smallest part over all splits; 0 when no split
  int record_count = 0;      // including ENDs
};
StreamStats stream_stats(std::span<const std::uint8_t> bytes);

}  // namespace cdfree
