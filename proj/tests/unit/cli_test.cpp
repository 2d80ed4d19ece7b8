#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "domchrom/constructions.hpp"
#include "domchrom/graph6.hpp"
#include "domchrom/invariants.hpp"
#include "domchrom/serialize.hpp"
#include "domchrom_cli/cli.hpp"

using namespace domchrom;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "domchrom");
  std::istringstream in(input);
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(fs::path(DOMCHROM_GOLDEN_DIR) / name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("domchrom_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("construct writes graph6 and a labelling sidecar") {
  TempDir dir;
  const auto labels = (dir.path / "labels.json").string();
  const auto dot = (dir.path / "g.dot").string();
  auto r = run({"construct", "d-odd", "--k", "3", "--n", "9", "--labels", labels, "--dot", dot});
  CHECK(r.code == 0);
  CHECK(r.out == golden("d_odd_3_9.g6"));
  CHECK(r.out == to_graph6(build_d_odd({3, 9}).graph) + "\n");
  CHECK(slurp(labels) == golden("d_odd_3_9.labels.json"));
  CHECK(slurp(dot).find("x3") != std::string::npos);

  r = run({"construct", "d-even", "--k", "4", "--n", "12", "--labels", labels});
  CHECK(r.out == golden("d_even_4_12.g6"));
  CHECK(slurp(labels) == golden("d_even_4_12.labels.json"));

  r = run({"construct", "kpq", "--p", "2", "--q", "3"});
  CHECK(r.out == "D]o\n");

  r = run({"construct", "d-odd", "--k", "4", "--n", "16"});
  CHECK(r.code == 2);
  CHECK(r.err.find("k must be odd") != std::string::npos);
}

TEST_CASE("construct d3 from index and from a blueprint file") {
  auto r = run({"construct", "d3", "--a", "4", "--b", "3", "--index", "0"});
  CHECK(r.code == 0);
  const auto bp = enumerate_d3_blueprints(4, 3, 1).at(0);
  CHECK(r.out == to_graph6(build_d3(bp).graph) + "\n");

  TempDir dir;
  const auto file = dir.path / "bp.json";
  std::ofstream(file) << to_json(bp).dump();
  CHECK(run({"construct", "d3", "--blueprint", file.string()}).out == r.out);

  D3Blueprint bad;
  bad.v1_to_v3 = {false};
  bad.v2_to_v3 = {false};
  std::ofstream(file) << to_json(bad).dump();
  r = run({"construct", "d3", "--blueprint", file.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("\"rule\":5") != std::string::npos);

  CHECK(run({"construct", "d3", "--a", "3", "--b", "3"}).code == 2);
  CHECK(run({"construct", "d3", "--a", "2", "--b", "3"}).err.find("a >= 3") != std::string::npos);
}

TEST_CASE("classify and invariants") {
  auto r = run({"classify"}, "C]\n");
  CHECK(r.code == 0);
  CHECK(r.out == golden("classify_k22.json"));
  const auto j = Json::parse(r.out);
  CHECK(j["dk"] == 2);
  CHECK(j["gamma"] == 2);
  CHECK(j["chi"] == 2);
  CHECK(j["chi_d"] == 2);

  const std::string d9 = to_graph6(build_d_odd({3, 9}).graph);
  r = run({"invariants", "--witnesses", d9});
  CHECK(r.out == golden("invariants_d_odd_3_9.json"));
  CHECK(r.out == to_json(classify_dk(build_d_odd({3, 9}).graph), true).dump() + "\n");

  r = run({"invariants", "--format", "csv"}, "Ch\nBw\n");
  CHECK(r.out == "n,edge_count,gamma,gamma_t,chi,chi_d,chi_dom,dk,graph6\n4,3,2,2,2,3,2,,Ch\n3,3,1,2,3,3,3,,Bw\n");

  CHECK(run({"invariants", "A?"}).code == 2);  // disconnected
  CHECK(run({"invariants", "B"}).code == 2);   // malformed
  CHECK(run({"invariants"}, "").code == 2);    // no input
}

TEST_CASE("planar") {
  CHECK(run({"planar", "D~{"}).out == golden("planar_k5.json"));
  CHECK(run({"planar"}, "Bw\n").out == golden("planar_k3.json"));
}

TEST_CASE("verify exit codes") {
  auto r = run({"verify", "--theorem1"}, "Ch\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("not a D(k) graph") != std::string::npos);

  const std::string d9 = to_graph6(build_d_odd({3, 9}).graph);
  r = run({"verify", "--theorem1", "--d3-membership", d9});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"check\":\"theorem1\",\"holds\":true") != std::string::npos);
  CHECK(r.out.find("\"check\":\"d3-membership\",\"holds\":true") != std::string::npos);

  r = run({"verify", "--planar", "D~{"});
  CHECK(r.code == 1);
  CHECK(run({"verify", "--planar", "Bw"}).code == 0);

  const std::pair<int, int> e[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}};
  const std::string tri = to_graph6(Graph::from_edge_list(4, e));
  r = run({"verify", "--chain", "3", tri});
  CHECK(r.code == 0);
  CHECK(run({"verify", "--chain", "2", tri}).code == 2);
  CHECK(run({"verify", d9}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify", "--bogus"}).code == 2);
  CHECK(run({"scan"}).code == 2);
  CHECK(run({"scan", "--builtin", "4", "--checks", "colour"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("scan matches the golden records and summary") {
  TempDir dir;
  const auto out = dir.path / "r.jsonl";
  const auto csv = dir.path / "s.csv";
  auto r = run({"scan", "--builtin", "1-5", "--checks", "invariants,planarity", "--out", out.string(), "--summary",
                csv.string()});
  CHECK(r.code == 0);
  CHECK(r.out == golden("scan_1_5.summary.json"));
  CHECK(slurp(out) == golden("scan_1_5.jsonl"));
  CHECK(slurp(csv) == golden("scan_1_5.csv"));

  r = run({"scan", "--source", "-", "--out", "-"}, ">>graph6<<Bw\nC]\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"dk\":2") != std::string::npos);
  CHECK(r.err.find("\"records\":2") != std::string::npos);

  CHECK(run({"scan", "--source", "-", "--strict"}, "Bw\n???\n").code == 2);
  CHECK(run({"scan", "--source", "-"}, "Bw\n???\n").code == 0);
}

TEST_CASE("scan honours the job count and resumes from a checkpoint") {
  TempDir dir;
  const auto a = dir.path / "a.jsonl";
  const auto b = dir.path / "b.jsonl";
  const auto ck = dir.path / "ck.json";
  run({"scan", "--builtin", "1-6", "--out", a.string(), "--jobs", "1"});
  run({"scan", "--builtin", "1-6", "--out", b.string(), "--jobs", "4"});
  CHECK(slurp(a) == slurp(b));

  run({"scan", "--builtin", "1-6", "--out", b.string(), "--checkpoint", ck.string(), "--stop-after", "50"});
  auto r = run({"scan", "--builtin", "1-6", "--out", b.string(), "--checkpoint", ck.string()});
  CHECK(r.code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run({"scan", "--builtin", "1-5", "--out", b.string(), "--checkpoint", ck.string()}).code == 2);
}

TEST_CASE("survey and generate") {
  auto r = run({"survey", "--k", "2", "--n-max", "6"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["min_order"] == 4);
  CHECK(j["reading"].get<std::string>().find("any connected graph") != std::string::npos);

  r = run({"generate", "--n", "5"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);
  r = run({"generate", "--n", "5", "--all"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 34);
}
