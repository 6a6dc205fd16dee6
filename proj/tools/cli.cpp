#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

#include <CLI11.hpp>

#include "bench.hpp"
#include "cdfree/cliques.hpp"
#include "cdfree/codec.hpp"
#include "cdfree/generators.hpp"
#include "cdfree/recognition.hpp"
#include "selftest.hpp"

namespace cdfree::tools {

namespace {

Graph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return parse_graph(in);
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open \"" + path + "\"");
  return parse_graph(f);
}

std::vector<std::uint8_t> load_bytes(const std::string& path, std::istream& in) {
  std::istream* src = &in;
  std::ifstream f;
  if (path != "-") {
    f.open(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open \"" + path + "\"");
    src = &f;
  }
  std::vector<std::uint8_t> bytes;
  char c;
  while (src->get(c)) bytes.push_back(static_cast<std::uint8_t>(c));
  return bytes;
}

void print_clique_line(std::ostream& out, const std::vector<int>& c) {
  for (size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
  out << '\n';
}

int bench_threads_from_env() {
  const char* env = std::getenv("CDFREE_BENCH_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

}  // namespace

int cli_dispatch(std::vector<std::string> args, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"(C4, diamond)-free graph toolkit"};
  app.name("cdfree");
  app.require_subcommand(1);

  // recognize
  std::string rec_engine, rec_file;
  int rec_f = 0;
  auto* rec = app.add_subcommand("recognize", "decide whether a graph is (C4, diamond)-free");
  rec->add_option("--engine", rec_engine, "naive | mdelta | threshold")
      ->required()
      ->check(CLI::IsMember({"naive", "mdelta", "threshold"}));
  rec->add_option("--f", rec_f, "degree threshold override (threshold engine)")
      ->check(CLI::PositiveNumber);
  rec->add_option("file", rec_file, "edge-list file, - for stdin")->required();

  // cliques
  auto* cl = app.add_subcommand("cliques", "maximal-clique operations");
  cl->require_subcommand(1);
  std::string cl_file;
  auto* cl_enum = cl->add_subcommand("enum", "list every maximal clique, one per line");
  auto* cl_max = cl->add_subcommand("max", "print one largest clique");
  auto* cl_stats = cl->add_subcommand("stats", "print count and total size of maximal cliques");
  for (auto* sub : {cl_enum, cl_max, cl_stats})
    sub->add_option("file", cl_file, "edge-list file, - for stdin")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "instance generators (edge list on stdout)");
  gen->require_subcommand(1);
  int gen_p = 0;
  auto* gen_plane = gen->add_subcommand("plane", "projective plane incidence graph of prime order");
  gen_plane->add_option("p", gen_p, "prime order")->required();
  std::string gen_name;
  std::vector<int> gen_args;
  auto* gen_named = gen->add_subcommand("named", "fixed small graph by name");
  gen_named->add_option("name", gen_name, "graph name")->required();
  gen_named->add_option("args", gen_args, "numeric arguments");
  int rnd_n = 0, rnd_e = 0;
  std::uint64_t rnd_seed = 0;
  auto* gen_random = gen->add_subcommand("random", "seeded random (C4, diamond)-free graph");
  gen_random->add_option("n", rnd_n, "vertex count")->required();
  gen_random->add_option("edges", rnd_e, "edge budget")->required();
  gen_random->add_option("seed", rnd_seed, "64-bit seed")->required();

  // codec
  auto* codec = app.add_subcommand("codec", "binary encoding of (C4, diamond)-free graphs");
  codec->require_subcommand(1);
  std::string codec_file;
  auto* codec_enc = codec->add_subcommand("encode", "edge list in, cdfg bytes on stdout");
  auto* codec_dec = codec->add_subcommand("decode", "cdfg bytes in, edge list on stdout");
  auto* codec_size = codec->add_subcommand("size", "encoded bits next to the size bound");
  codec_enc->add_option("file", codec_file, "edge-list file, - for stdin")->required();
  codec_dec->add_option("file", codec_file, "cdfg file, - for stdin")->required();
  codec_size->add_option("file", codec_file, "edge-list file, - for stdin")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "timing rows as CSV");
  std::string bench_engines = "naive,mdelta,threshold";
  int bench_reps = 1;
  std::vector<std::string> bench_instances;
  bench->add_option("--engines", bench_engines, "comma list of engines (default naive,mdelta,threshold)");
  bench->add_option("--reps", bench_reps, "repetitions per cell")->check(CLI::PositiveNumber);
  bench->add_option("instances", bench_instances,
                    "plane:P | named:NAME[:A[:B]] | random:N:E:SEED | FILE");

  auto* st = app.add_subcommand("selftest", "exhaustive engine agreement plus clique properties");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rec->parsed()) {
      Graph g = load_graph(rec_file, in);
      Verdict v = Verdict::ok();
      if (rec_engine == "naive") {
        v = recognize_naive(g);
      } else if (rec_engine == "mdelta") {
        v = recognize_mdelta(g);
      } else {
        std::optional<RecognitionConfig> cfg;
        if (rec_f > 0) cfg = RecognitionConfig{rec_f};
        v = recognize_threshold(g, cfg);
      }
      if (v.free) {
        out << "FREE\n";
        return 0;
      }
      out << (v.kind == ForbiddenKind::c4 ? "C4" : "DIAMOND");
      for (int w : v.witness) out << ' ' << w;
      out << '\n';
      return 1;
    }

    if (cl->parsed()) {
      Graph g = load_graph(cl_file, in);
      if (cl_enum->parsed()) {
        for (const auto& c : enumerate_maximal_cliques(g).cliques) print_clique_line(out, c);
      } else if (cl_max->parsed()) {
        print_clique_line(out, max_clique(g));
      } else {
        auto stats = clique_stats(g);
        out << "count=" << stats.count << " sizesum=" << stats.size_sum << '\n';
      }
      return 0;
    }

    if (gen->parsed()) {
      if (gen_plane->parsed()) {
        out << "# cdfree gen plane " << gen_p << '\n';
        serialize_graph(projective_plane_graph(gen_p), out);
      } else if (gen_named->parsed()) {
        out << "# cdfree gen named " << gen_name;
        for (int a : gen_args) out << ' ' << a;
        out << '\n';
        serialize_graph(named_graph(gen_name, gen_args), out);
      } else {
        out << "# cdfree gen random " << rnd_n << ' ' << rnd_e << ' ' << rnd_seed << ' '
            << kRandomFreeAlgorithmId << '\n';
        serialize_graph(random_free_graph(rnd_n, rnd_e, rnd_seed), out);
      }
      return 0;
    }

    if (codec->parsed()) {
      if (codec_enc->parsed()) {
        Graph g = load_graph(codec_file, in);
        auto bytes = encode_graph(g);
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
      } else if (codec_dec->parsed()) {
        auto bytes = load_bytes(codec_file, in);
        serialize_graph(decode_graph(bytes), out);
      } else {
        Graph g = load_graph(codec_file, in);
        auto report = encoded_size_report(g);
        out << "bits=" << report.bits << " bound=" << report.bound << '\n';
      }
      return 0;
    }

    if (bench->parsed()) {
      BenchSpec spec;
      spec.repetitions = bench_reps;
      spec.threads = bench_threads_from_env();
      for (size_t start = 0; start <= bench_engines.size();) {
        size_t pos = bench_engines.find(',', start);
        size_t end = pos == std::string::npos ? bench_engines.size() : pos;
        if (end > start) spec.engines.push_back(bench_engines.substr(start, end - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
      }
      for (const auto& token : bench_instances) spec.instances.push_back(load_instance(token));
      write_bench_csv(run_bench(spec), out);
      return 0;
    }

    if (st->parsed()) return run_selftest(out);
  } catch (const not_in_class& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cdfree::tools
