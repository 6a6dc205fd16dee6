#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cdfree/cliques.hpp"
#include "cdfree/codec.hpp"
#include "cdfree/generators.hpp"
#include "cdfree/recognition.hpp"

namespace cdfree::tools {

namespace {

const char* const kEngines[] = {"naive", "mdelta", "threshold", "maxclique", "enum", "codec"};

// outcome, aux
std::pair<std::string, long long> run_engine(const Graph& g, const std::string& engine) {
  auto verdict_outcome = [](const Verdict& v) { return v.free ? "free" : "forbidden"; };
  if (engine == "naive") return {verdict_outcome(recognize_naive(g)), 0};
  if (engine == "mdelta") return {verdict_outcome(recognize_mdelta(g)), 0};
  if (engine == "threshold") return {verdict_outcome(recognize_threshold(g)), 0};
  if (engine == "maxclique") return {"n/a", static_cast<long long>(max_clique(g).size())};
  if (engine == "enum")
    return {"n/a", static_cast<long long>(enumerate_maximal_cliques(g).cliques.size())};
  if (engine == "codec") return {"n/a", static_cast<long long>(encode_graph(g).size()) * 8};
  throw std::invalid_argument("unknown bench engine \"" + engine + "\"");
}

std::vector<BenchRow> run_cell(const BenchInstance& inst, const std::string& engine, int reps) {
  std::vector<BenchRow> rows;
  std::vector<long long> times;
  for (int rep = 0; rep < reps; ++rep) {
    BenchRow row{inst.label, inst.graph.vertex_count(), inst.graph.edge_count(),
                 engine,     "n/a",
                 0,          0};
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [outcome, aux] = run_engine(inst.graph, engine);
      row.outcome = outcome;
      row.aux = aux;
    } catch (const std::exception&) {
      row.outcome = "n/a";
      row.aux = 0;
    }
    auto t1 = std::chrono::steady_clock::now();
    row.usec = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    times.push_back(row.usec);
    rows.push_back(std::move(row));
  }
  BenchRow median = rows.front();
  median.engine = engine + ":median";
  std::sort(times.begin(), times.end());
  median.usec = times[(times.size() - 1) / 2];
  rows.push_back(std::move(median));
  return rows;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  if (spec.repetitions < 1) throw std::invalid_argument("bench: repetitions must be >= 1");
  for (const auto& e : spec.engines)
    if (std::find(std::begin(kEngines), std::end(kEngines), e) == std::end(kEngines))
      throw std::invalid_argument("unknown bench engine \"" + e + "\"");

  const size_t width = spec.engines.size();
  const size_t cells = spec.instances.size() * width;
  std::vector<std::vector<BenchRow>> per_cell(cells);
  auto work = [&](size_t cell) {
    const auto& inst = spec.instances[cell / width];
    const auto& engine = spec.engines[cell % width];
    per_cell[cell] = run_cell(inst, engine, spec.repetitions);
  };

  int threads = std::max(1, spec.threads);
  if (threads == 1 || cells <= 1) {
    for (size_t c = 0; c < cells; ++c) work(c);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t c = next.fetch_add(1); c < cells; c = next.fetch_add(1)) work(c);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<BenchRow> rows;
  for (auto& cell : per_cell)
    for (auto& r : cell) rows.push_back(std::move(r));
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows)
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.engine << ',' << r.outcome << ','
        << r.usec << ',' << r.aux << '\n';
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

long long to_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer \"" + s + "\" in " + what);
  }
}

}  // namespace

BenchInstance load_instance(const std::string& token) {
  if (token.rfind("plane:", 0) == 0) {
    auto parts = split(token, ':');
    if (parts.size() != 2) throw std::invalid_argument("expected plane:P, got \"" + token + "\"");
    return {token, projective_plane_graph(static_cast<int>(to_int(parts[1], token)))};
  }
  if (token.rfind("named:", 0) == 0) {
    auto parts = split(token, ':');
    std::vector<int> args;
    for (size_t i = 2; i < parts.size(); ++i)
      args.push_back(static_cast<int>(to_int(parts[i], token)));
    return {token, named_graph(parts[1], args)};
  }
  if (token.rfind("random:", 0) == 0) {
    auto parts = split(token, ':');
    if (parts.size() != 4)
      throw std::invalid_argument("expected random:N:E:SEED, got \"" + token + "\"");
    return {token, random_free_graph(static_cast<int>(to_int(parts[1], token)),
                                     static_cast<int>(to_int(parts[2], token)),
                                     static_cast<std::uint64_t>(to_int(parts[3], token)))};
  }
  std::ifstream f(token);
  if (!f) throw std::runtime_error("cannot open instance file \"" + token + "\"");
  return {token, parse_graph(f)};
}

}  // namespace cdfree::tools
