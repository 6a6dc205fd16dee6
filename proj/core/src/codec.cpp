#include "cdfree/codec.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

namespace cdfree {

namespace {

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(x & 0x7f) | 0x80);
    x >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(x));
}

struct Reader {
  std::span<const std::uint8_t> bytes;
  size_t pos = 0;

  bool eof() const { return pos >= bytes.size(); }

  std::uint8_t byte() {
    if (eof()) throw decode_error(DecodeErrorKind::truncated, "unexpected end of stream");
    return bytes[pos++];
  }

  std::uint64_t varint() {
    std::uint64_t x = 0;
    int shift = 0;
    for (;;) {
      std::uint8_t b = byte();
      if (shift >= 63 && (b & 0x7f) > 1)
        throw decode_error(DecodeErrorKind::varint_overflow, "varint exceeds 64 bits");
      x |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      if (!(b & 0x80)) return x;
      shift += 7;
      if (shift > 63) throw decode_error(DecodeErrorKind::varint_overflow, "varint too long");
    }
  }
};

// Encoder state: vertices are marked with the epoch of the subgraph that
// currently owns them; removal clears the mark.
struct Encoder {
  const Graph& g;
  const int t;
  std::vector<std::uint8_t> out;
  std::vector<long long> mark;
  std::vector<long long> ball_mark;
  std::vector<int> deg;
  long long epoch = 0;

  explicit Encoder(const Graph& graph)
      : g(graph),
        t(detail::ceil_sqrt(graph.vertex_count())),
        mark(static_cast<size_t>(graph.vertex_count()), 0),
        ball_mark(static_cast<size_t>(graph.vertex_count()), 0),
        deg(static_cast<size_t>(graph.vertex_count()), 0) {}

  void process(const std::vector<int>& members) {
    const long long ep = ++epoch;
    for (int v : members) mark[static_cast<size_t>(v)] = ep;
    auto alive = [&](int v) { return mark[static_cast<size_t>(v)] == ep; };
    int live = static_cast<int>(members.size());
    for (int v : members) {
      int d = 0;
      for (int w : g.neighbors(v))
        if (alive(w)) ++d;
      deg[static_cast<size_t>(v)] = d;
    }
    auto remove = [&](int v) {
      mark[static_cast<size_t>(v)] = 0;
      --live;
      for (int w : g.neighbors(v))
        if (alive(w)) --deg[static_cast<size_t>(w)];
    };

    for (;;) {
      if (live == 0) {
        out.push_back(static_cast<std::uint8_t>(RecordTag::end));
        return;
      }
      int low_deg = -1, low_nondeg = -1, first_live = -1;
      for (int v : members) {
        if (!alive(v)) continue;
        if (first_live < 0) first_live = v;
        if (deg[static_cast<size_t>(v)] <= t) {
          low_deg = v;
          break;
        }
        if (low_nondeg < 0 && live - 1 - deg[static_cast<size_t>(v)] <= t) low_nondeg = v;
      }

      if (low_deg >= 0) {
        int v = low_deg;
        out.push_back(static_cast<std::uint8_t>(RecordTag::remove_nbr));
        put_varint(out, static_cast<std::uint64_t>(v));
        put_varint(out, static_cast<std::uint64_t>(deg[static_cast<size_t>(v)]));
        for (int w : g.neighbors(v))
          if (alive(w)) put_varint(out, static_cast<std::uint64_t>(w));
        remove(v);
        continue;
      }

      if (low_nondeg >= 0) {
        int v = low_nondeg;
        out.push_back(static_cast<std::uint8_t>(RecordTag::remove_nonnbr));
        put_varint(out, static_cast<std::uint64_t>(v));
        put_varint(out, static_cast<std::uint64_t>(live - 1 - deg[static_cast<size_t>(v)]));
        for (int u : members) {
          if (!alive(u) || u == v || g.adjacent(v, u)) continue;
          put_varint(out, static_cast<std::uint64_t>(u));
        }
        remove(v);
        continue;
      }

      // Split at the smallest live id: the listed part is its closed live
      // neighbourhood, the rest is everything else.
      int v = first_live;
      std::vector<int> part1, part2;
      part1.push_back(v);
      for (int w : g.neighbors(v))
        if (alive(w)) part1.push_back(w);
      std::sort(part1.begin(), part1.end());
      for (int u : part1) ball_mark[static_cast<size_t>(u)] = ep;
      for (int u : members)
        if (alive(u) && ball_mark[static_cast<size_t>(u)] != ep) part2.push_back(u);

      std::vector<std::pair<int, int>> cross;
      for (int y : part2) {
        int hit = -1;
        for (int x : g.neighbors(y)) {
          if (mark[static_cast<size_t>(x)] != ep || ball_mark[static_cast<size_t>(x)] != ep)
            continue;
          if (hit >= 0)
            throw not_in_class("encode_graph: vertex " + std::to_string(y) +
                               " has two neighbours " + std::to_string(hit) + ", " +
                               std::to_string(x) + " inside a split ball");
          hit = x;
        }
        if (hit >= 0) cross.emplace_back(y, hit);
      }

      out.push_back(static_cast<std::uint8_t>(RecordTag::split));
      put_varint(out, static_cast<std::uint64_t>(v));
      put_varint(out, static_cast<std::uint64_t>(part1.size()));
      for (int u : part1) put_varint(out, static_cast<std::uint64_t>(u));
      put_varint(out, static_cast<std::uint64_t>(cross.size()));
      for (auto [y, x] : cross) {
        put_varint(out, static_cast<std::uint64_t>(y));
        put_varint(out, static_cast<std::uint64_t>(x));
      }
      process(part1);
      process(part2);
      return;
    }
  }
};

}  // namespace

std::vector<std::uint8_t> encode_graph(const Graph& g) {
  Encoder enc(g);
  enc.out.insert(enc.out.end(), std::begin(kCodecMagic), std::end(kCodecMagic));
  enc.out.push_back(kCodecVersion);
  put_varint(enc.out, static_cast<std::uint64_t>(g.vertex_count()));
  std::vector<int> all(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
  enc.process(all);
  return enc.out;
}

namespace {

void read_header(Reader& rd, int& n) {
  if (rd.bytes.size() < 5) throw decode_error(DecodeErrorKind::truncated, "stream shorter than header");
  for (std::uint8_t m : kCodecMagic)
    if (rd.byte() != m) throw decode_error(DecodeErrorKind::bad_magic, "bad magic");
  if (rd.byte() != kCodecVersion) throw decode_error(DecodeErrorKind::bad_version, "unsupported version");
  std::uint64_t nn = rd.varint();
  if (nn > 0x7fffffffull)
    throw decode_error(DecodeErrorKind::varint_overflow, "vertex count too large");
  n = static_cast<int>(nn);
}

int read_live_id(Reader& rd, const std::vector<int>& live, const char* what) {
  std::uint64_t raw = rd.varint();
  if (raw > 0x7fffffffull)
    throw decode_error(DecodeErrorKind::id_not_live, std::string(what) + ": id out of range");
  int v = static_cast<int>(raw);
  if (!std::binary_search(live.begin(), live.end(), v))
    throw decode_error(DecodeErrorKind::id_not_live,
                       std::string(what) + ": vertex " + std::to_string(v) + " is not live");
  return v;
}

void erase_sorted(std::vector<int>& live, int v) {
  live.erase(std::lower_bound(live.begin(), live.end(), v));
}

}  // namespace

Graph decode_graph(std::span<const std::uint8_t> bytes) {
  Reader rd{bytes};
  int n = 0;
  read_header(rd, n);

  std::vector<std::vector<int>> stack;
  {
    std::vector<int> all(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
    stack.push_back(std::move(all));
  }

  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> seen;
  auto assert_edge = [&](int u, int v) {
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                        static_cast<std::uint64_t>(std::max(u, v));
    if (!seen.insert(key).second)
      throw decode_error(DecodeErrorKind::duplicate_edge, "edge " + std::to_string(u) + "-" +
                                                              std::to_string(v) +
                                                              " asserted twice");
    edges.emplace_back(u, v);
  };

  while (!stack.empty()) {
    std::vector<int>& live = stack.back();
    auto tag = static_cast<RecordTag>(rd.byte());
    switch (tag) {
      case RecordTag::end: {
        if (!live.empty())
          throw decode_error(DecodeErrorKind::end_not_empty,
                             "END with " + std::to_string(live.size()) + " live vertices");
        stack.pop_back();
        break;
      }
      case RecordTag::remove_nbr: {
        int v = read_live_id(rd, live, "REMOVE_NBR");
        std::uint64_t k = rd.varint();
        for (std::uint64_t i = 0; i < k; ++i) {
          int u = read_live_id(rd, live, "REMOVE_NBR neighbour");
          if (u == v)
            throw decode_error(DecodeErrorKind::id_not_live, "REMOVE_NBR lists the removed vertex");
          assert_edge(v, u);
        }
        erase_sorted(live, v);
        break;
      }
      case RecordTag::remove_nonnbr: {
        int v = read_live_id(rd, live, "REMOVE_NONNBR");
        std::uint64_t k = rd.varint();
        std::vector<int> skip;
        skip.reserve(static_cast<size_t>(k) + 1);
        for (std::uint64_t i = 0; i < k; ++i) {
          int w = read_live_id(rd, live, "REMOVE_NONNBR non-neighbour");
          if (w == v)
            throw decode_error(DecodeErrorKind::id_not_live,
                               "REMOVE_NONNBR lists the removed vertex");
          skip.push_back(w);
        }
        skip.push_back(v);
        std::sort(skip.begin(), skip.end());
        for (int u : live)
          if (!std::binary_search(skip.begin(), skip.end(), u)) assert_edge(v, u);
        erase_sorted(live, v);
        break;
      }
      case RecordTag::split: {
        int v = read_live_id(rd, live, "SPLIT");
        std::uint64_t s = rd.varint();
        std::vector<int> part1;
        part1.reserve(static_cast<size_t>(s));
        for (std::uint64_t i = 0; i < s; ++i) {
          std::uint64_t raw = rd.varint();
          int u = raw > 0x7fffffffull ? -1 : static_cast<int>(raw);
          if (u < 0 || !std::binary_search(live.begin(), live.end(), u))
            throw decode_error(DecodeErrorKind::split_member_not_live,
                               "SPLIT member " + std::to_string(raw) + " is not live");
          part1.push_back(u);
        }
        std::sort(part1.begin(), part1.end());
        if (std::adjacent_find(part1.begin(), part1.end()) != part1.end())
          throw decode_error(DecodeErrorKind::split_member_not_live, "SPLIT member repeated");
        (void)v;
        std::vector<int> part2;
        std::set_difference(live.begin(), live.end(), part1.begin(), part1.end(),
                            std::back_inserter(part2));
        std::uint64_t c = rd.varint();
        for (std::uint64_t i = 0; i < c; ++i) {
          int y = read_live_id(rd, part2, "SPLIT cross endpoint");
          int x = read_live_id(rd, part1, "SPLIT cross endpoint");
          assert_edge(y, x);
        }
        stack.pop_back();
        stack.push_back(std::move(part2));
        stack.push_back(std::move(part1));
        break;
      }
      default:
        throw decode_error(DecodeErrorKind::unknown_tag,
                           "unknown record tag " + std::to_string(static_cast<int>(tag)));
    }
  }
  if (!rd.eof()) throw decode_error(DecodeErrorKind::trailing_data, "bytes after final END");
  return Graph(n, edges);
}

std::int64_t size_bound_bits(int n) {
  if (n < 0) throw std::invalid_argument("size_bound_bits: negative n");
  long long cube = static_cast<long long>(n) * n * n;
  std::int64_t n32 = detail::ceil_sqrt(cube);
  std::int64_t logterm = std::bit_width(static_cast<unsigned long long>(n) + 1);
  return kSizeBoundConstant * n32 * logterm;
}

SizeReport encoded_size_report(const Graph& g) {
  auto bytes = encode_graph(g);
  return {static_cast<std::int64_t>(bytes.size()) * 8, size_bound_bits(g.vertex_count())};
}

StreamStats stream_stats(std::span<const std::uint8_t> bytes) {
  Reader rd{bytes};
  StreamStats st;
  read_header(rd, st.vertex_count);
  std::vector<long long> sizes{st.vertex_count};
  while (!sizes.empty()) {
    auto tag = static_cast<RecordTag>(rd.byte());
    ++st.record_count;
    switch (tag) {
      case RecordTag::end:
        if (sizes.back() != 0)
          throw decode_error(DecodeErrorKind::end_not_empty, "END with live vertices");
        sizes.pop_back();
        break;
      case RecordTag::remove_nbr:
      case RecordTag::remove_nonnbr: {
        rd.varint();
        std::uint64_t k = rd.varint();
        st.max_remove_list = std::max<int>(st.max_remove_list, static_cast<int>(k));
        for (std::uint64_t i = 0; i < k; ++i) rd.varint();
        if (sizes.back() <= 0)
          throw decode_error(DecodeErrorKind::id_not_live, "removal from empty live set");
        --sizes.back();
        break;
      }
      case RecordTag::split: {
        rd.varint();
        std::uint64_t s = rd.varint();
        for (std::uint64_t i = 0; i < s; ++i) rd.varint();
        std::uint64_t c = rd.varint();
        for (std::uint64_t i = 0; i < 2 * c; ++i) rd.varint();
        long long rest = sizes.back() - static_cast<long long>(s);
        if (rest < 0)
          throw decode_error(DecodeErrorKind::split_member_not_live, "SPLIT larger than live set");
        ++st.split_count;
        int part = static_cast<int>(std::min<long long>(static_cast<long long>(s), rest));
        st.min_split_part =
            st.split_count == 1 ? part : std::min(st.min_split_part, part);
        sizes.pop_back();
        sizes.push_back(rest);
        sizes.push_back(static_cast<long long>(s));
        break;
      }
      default:
        throw decode_error(DecodeErrorKind::unknown_tag, "unknown record tag");
    }
  }
  if (!rd.eof()) throw decode_error(DecodeErrorKind::trailing_data, "bytes after final END");
  return st;
}

}  // namespace cdfree
