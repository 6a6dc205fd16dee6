#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cdfree/graph.hpp"

namespace cdfree::tools {

struct BenchRow {
  std::string instance;
  int n = 0;
  int m = 0;
  std::string engine;
  std::string outcome;  // free | forbidden | n/a
  long long usec = 0;
  long long aux = 0;  // clique count / clique size / encoded bits / 0
};

struct BenchInstance {
  std::string label;
  Graph graph;
};

struct BenchSpec {
  std::vector<BenchInstance> instances;
  std::vector<std::string> engines;  // naive mdelta threshold maxclique enum codec
  int repetitions = 1;
  int threads = 1;
};

inline constexpr const char* kBenchCsvHeader = "instance,n,m,engine,outcome,usec,aux";

/// One row per (instance, engine, repetition), followed by a median row per
/// pair whose engine column carries a ":median" suffix. An engine failure on
/// an instance becomes an "n/a" row instead of aborting the run. Distinct
/// cells may execute concurrently; row order is deterministic regardless.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

/// Resolves an instance token: "plane:P", "named:NAME[:A[:B]]",
/// "random:N:E:SEED", or a path to an edge-list file.
BenchInstance load_instance(const std::string& token);

}  // namespace cdfree::tools
