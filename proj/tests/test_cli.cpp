#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bench.hpp"
#include "cdfree/codec.hpp"
#include "cdfree/generators.hpp"
#include "cli.hpp"

using namespace cdfree;
using cdfree::tools::cli_dispatch;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli_dispatch(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("recognize subcommand") {
  std::string c4 = "4 4\n0 1\n1 2\n2 3\n0 3\n";
  SUBCASE("forbidden verdict prints the witness and exits 1") {
    for (std::string engine : {"naive", "mdelta", "threshold"}) {
      auto r = run_cli({"recognize", "--engine", engine, "-"}, c4);
      CHECK(r.code == 1);
      CHECK(r.out.substr(0, 3) == "C4 ");
    }
  }
  SUBCASE("free verdict prints FREE and exits 0") {
    auto r = run_cli({"recognize", "--engine", "threshold", "-"},
                     serialize_graph(projective_plane_graph(3)));
    CHECK(r.code == 0);
    CHECK(r.out == "FREE\n");
  }
  SUBCASE("threshold override") {
    auto r = run_cli({"recognize", "--engine", "threshold", "--f", "1", "-"},
                     serialize_graph(named_graph("petersen")));
    CHECK(r.code == 0);
  }
  SUBCASE("bad input exits 2") {
    CHECK(run_cli({"recognize", "--engine", "naive", "-"}, "junk\n").code == 2);
    CHECK(run_cli({"recognize", "--engine", "bogus", "-"}, c4).code == 2);
    CHECK(run_cli({"recognize", "--engine", "naive", "/nonexistent/file"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
  }
}

TEST_CASE("cliques subcommand") {
  std::string friendship = serialize_graph(named_graph("friendship", std::vector<int>{3}));
  SUBCASE("max prints one clique line") {
    auto r = run_cli({"cliques", "max", "-"}, friendship);
    CHECK(r.code == 0);
    CHECK(r.out == "0 1 2\n");
  }
  SUBCASE("enum prints sorted clique lines") {
    auto r = run_cli({"cliques", "enum", "-"}, friendship);
    CHECK(r.code == 0);
    CHECK(r.out == "0 1 2\n0 3 4\n0 5 6\n");
  }
  SUBCASE("stats format") {
    auto r = run_cli({"cliques", "stats", "-"}, friendship);
    CHECK(r.code == 0);
    CHECK(r.out == "count=3 sizesum=9\n");
  }
  SUBCASE("class violations exit 3") {
    std::string diamond = serialize_graph(named_graph("diamond"));
    auto r = run_cli({"cliques", "enum", "-"}, diamond);
    CHECK(r.code == 3);
    CHECK(r.err.find("P3") != std::string::npos);
  }
}

TEST_CASE("gen subcommand feeds the other commands") {
  SUBCASE("plane output starts with provenance and parses back") {
    auto gen = run_cli({"gen", "plane", "3"});
    CHECK(gen.code == 0);
    CHECK(gen.out.rfind("# cdfree gen plane 3\n", 0) == 0);
    auto rec = run_cli({"recognize", "--engine", "naive", "-"}, gen.out);
    CHECK(rec.code == 0);
  }
  SUBCASE("named with arguments") {
    auto gen = run_cli({"gen", "named", "friendship", "3"});
    CHECK(gen.code == 0);
    auto rec = run_cli({"cliques", "max", "-"}, gen.out);
    CHECK(rec.out == "0 1 2\n");
  }
  SUBCASE("random is reproducible and labels its algorithm") {
    auto a = run_cli({"gen", "random", "20", "30", "42"});
    auto b = run_cli({"gen", "random", "20", "30", "42"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find(std::string(kRandomFreeAlgorithmId)) != std::string::npos);
  }
  SUBCASE("generator errors exit 2") {
    CHECK(run_cli({"gen", "plane", "4"}).code == 2);
    CHECK(run_cli({"gen", "named", "nonsense"}).code == 2);
  }
}

TEST_CASE("codec subcommand") {
  std::string plane2 = serialize_graph(projective_plane_graph(2));
  auto enc = run_cli({"codec", "encode", "-"}, plane2);
  REQUIRE(enc.code == 0);
  SUBCASE("encode emits the binary format") {
    REQUIRE(enc.out.size() >= 5);
    CHECK(enc.out.compare(0, 4, "CDFG") == 0);
  }
  SUBCASE("decode restores the canonical edge list") {
    auto dec = run_cli({"codec", "decode", "-"}, enc.out);
    CHECK(dec.code == 0);
    CHECK(dec.out == plane2);
  }
  SUBCASE("size line") {
    auto size = run_cli({"codec", "size", "-"}, "1 0\n");
    CHECK(size.code == 0);
    CHECK(size.out == "bits=80 bound=80\n");
  }
  SUBCASE("corrupt stream exits 2") {
    CHECK(run_cli({"codec", "decode", "-"}, "notcdfg").code == 2);
  }
}

TEST_CASE("bench subcommand emits the CSV contract") {
  auto r = run_cli({"bench", "--reps", "3", "--engines", "naive,mdelta,threshold",
                    "plane:2", "plane:3", "named:petersen"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "instance,n,m,engine,outcome,usec,aux");
  int rows = 0, medians = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.find(":median") != std::string::npos) ++medians;
    CHECK(line.find("free") != std::string::npos);  // every instance here is free
  }
  CHECK(rows == 3 * 3 * 3 + 3 * 3);
  CHECK(medians == 9);

  SUBCASE("empty instance list gives a header-only CSV") {
    auto empty = run_cli({"bench"});
    CHECK(empty.code == 0);
    CHECK(empty.out == "instance,n,m,engine,outcome,usec,aux\n");
  }
  SUBCASE("codec rows carry encoded bits in aux") {
    auto c = run_cli({"bench", "--engines", "codec", "random:20:25:7"});
    REQUIRE(c.code == 0);
    std::istringstream cl(c.out);
    std::string row;
    std::getline(cl, row);  // header
    REQUIRE(std::getline(cl, row));
    CHECK(row.find("n/a") != std::string::npos);
    auto last_comma = row.find_last_of(',');
    CHECK(std::stoll(row.substr(last_comma + 1)) > 0);
  }
  SUBCASE("unknown engine exits 2") {
    CHECK(run_cli({"bench", "--engines", "sorcery", "plane:2"}).code == 2);
  }
  SUBCASE("engine failure becomes an n/a row instead of aborting") {
    // enumeration rejects the diamond, so its rows must read n/a
    auto c = run_cli({"bench", "--engines", "enum,naive", "named:diamond"});
    REQUIRE(c.code == 0);
    CHECK(c.out.find("named:diamond,4,5,enum,n/a,") != std::string::npos);
    CHECK(c.out.find("named:diamond,4,5,naive,forbidden,") != std::string::npos);
  }
  SUBCASE("env-controlled parallel width gives the same rows") {
    auto sequential = run_cli({"bench", "--engines", "naive,threshold", "plane:2", "plane:3"});
    setenv("CDFREE_BENCH_THREADS", "4", 1);
    auto parallel = run_cli({"bench", "--engines", "naive,threshold", "plane:2", "plane:3"});
    unsetenv("CDFREE_BENCH_THREADS");
    REQUIRE(parallel.code == 0);
    // identical apart from the timing column
    auto strip_usec = [](const std::string& csv) {
      std::istringstream in(csv);
      std::string line, acc;
      while (std::getline(in, line)) {
        auto last = line.find_last_of(',');
        auto prev = line.find_last_of(',', last - 1);
        acc += line.substr(0, prev) + line.substr(last) + '\n';
      }
      return acc;
    };
    CHECK(strip_usec(sequential.out) == strip_usec(parallel.out));
  }
}

TEST_CASE("selftest subcommand") {
  auto r = run_cli({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
}
