#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "domchrom/graph6.hpp"
#include "domchrom/search.hpp"
#include "domchrom/serialize.hpp"
#include "oracle.hpp"

using namespace domchrom;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("domchrom_search_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

GraphSource source_of(const std::string& text) {
  std::istringstream in(text);
  return GraphSource::from_stream(in, "test");
}

std::vector<Json> records(const std::string& jsonl) {
  std::vector<Json> out;
  std::istringstream in(jsonl);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("connected enumeration counts") {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == expected[n]);
  CHECK_THROWS_AS(enumerate_connected(8), DomainError);
  CHECK_THROWS_AS(enumerate_connected(0), DomainError);
  CHECK(generate_connected(8).size() == 11117);
}

TEST_CASE("all-graph enumeration counts") {
  const std::size_t expected[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expected[n]);
}

TEST_CASE("enumeration equals the labelled-graph oracle graph by graph") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> ours;
    for (const Graph& g : enumerate_connected(n)) {
      CHECK(is_connected(g));
      ours.insert(oracle::canonical_bits(g));
    }
    CHECK(ours.size() == enumerate_connected(n).size());  // pairwise non-isomorphic
    CHECK(ours == oracle::classes(n, true));
  }
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> ours;
    for (const Graph& g : enumerate_graphs(n)) ours.insert(oracle::canonical_bits(g));
    CHECK(ours == oracle::classes(n, false));
  }
}

TEST_CASE("enumeration order is deterministic") {
  std::vector<std::string> a, b;
  for (const Graph& g : enumerate_connected(6)) a.push_back(to_graph6(g));
  for (const Graph& g : enumerate_connected(6)) b.push_back(to_graph6(g));
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    std::map<std::string, std::string> naive_to_ours;
    std::set<std::string> ours_seen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
      const Graph g = oracle::from_bits(n, bits);
      const std::string ours = canonical_graph6(g);
      auto [it, fresh] = naive_to_ours.emplace(oracle::canonical_bits(g), ours);
      if (fresh) {
        CHECK(ours_seen.insert(ours).second);
      } else {
        CHECK(it->second == ours);
      }
    }
  }
}

TEST_CASE("canonical form is invariant under random relabelling") {
  std::mt19937 rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + rep % 14;
    std::bernoulli_distribution coin(rep % 3 == 0 ? 0.5 : 0.25);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    const Graph g = Graph::from_edge_list(n, edges);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_graph6(g) == canonical_graph6(g.permuted(perm)));
  }
  // highly symmetric inputs
  for (const Graph& g : {complete_graph(9), Graph::from_edge_list(9, {}), cycle_graph(12),
                         complete_bipartite(4, 5).graph}) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.rbegin(), perm.rend(), 0);
    CHECK(canonical_graph6(g) == canonical_graph6(g.permuted(perm)));
  }
}

TEST_CASE("check sets") {
  CHECK(CheckSet::parse("invariants").to_string() == "invariants");
  CHECK(CheckSet::parse("planarity,invariants").to_string() == "invariants,planarity");
  CHECK(CheckSet::parse("theorem1").to_string() == "invariants,theorem1");
  CHECK(CheckSet::parse("d3-membership").to_string() == "d3-membership");
  CHECK_THROWS_AS(CheckSet::parse("colour"), std::invalid_argument);
  CHECK_THROWS_AS(CheckSet::parse(""), std::invalid_argument);
}

TEST_CASE("graph sources") {
  const auto s = source_of(">>graph6<<Bw\n\nCh\r\n  \nA_\n");
  CHECK(s.lines == std::vector<std::string>{">>graph6<<Bw", "Ch", "A_"});
  CHECK(s.line_numbers == std::vector<std::size_t>{1, 3, 5});
  CHECK(source_of(">>graph6<<Bw\n\nCh\r\n  \nA_\n").identity == s.identity);
  CHECK(source_of("Bw\n").identity != s.identity);
  CHECK(GraphSource::builtin(4).lines.size() == 6);
  CHECK(GraphSource::builtin(1, 4).lines.size() == 10);
  CHECK(GraphSource::builtin(3).identity == "builtin:n=3");
}

TEST_CASE("empty stream gives zero counts") {
  std::ostringstream out;
  const auto summary = scan_stream(source_of(""), {}, &out);
  CHECK(summary.records == 0);
  CHECK(summary.errors == 0);
  CHECK(summary.by_k.empty());
  CHECK(summary.complete);
  CHECK(out.str().empty());
}

TEST_CASE("parse errors are recorded or abort under strict") {
  const auto src = source_of("Bw\nnot graph6 at all\n\nA?\n");
  std::ostringstream out;
  ScanOptions options;
  const auto summary = scan_stream(src, options, &out);
  CHECK(summary.records == 3);
  CHECK(summary.errors == 1);
  CHECK(summary.disconnected == 1);
  const auto recs = records(out.str());
  REQUIRE(recs.size() == 3);
  CHECK(recs[1]["line"] == 2);
  CHECK(recs[1].contains("error"));
  CHECK(recs[2]["connected"] == false);
  CHECK_FALSE(recs[2].contains("gamma"));

  options.strict = true;
  std::ostringstream strict_out;
  CHECK_THROWS_WITH_AS(scan_stream(src, options, &strict_out), doctest::Contains("line 2"), ScanError);
}

TEST_CASE("records carry the invariants and complete bipartite D(2) graphs") {
  std::ostringstream out;
  ScanOptions options;
  options.checks = CheckSet::parse("invariants,planarity");
  const auto summary = scan_stream(GraphSource::builtin(1, 6), options, &out);
  const auto recs = records(out.str());
  CHECK(recs.size() == 1 + 1 + 2 + 6 + 21 + 112);
  std::map<int, std::size_t> by_k;
  for (const auto& r : recs) {
    const Graph g = parse_graph6(r["graph6"].get<std::string>());
    CHECK(r["n"] == g.order());
    CHECK(r["edge_count"] == g.edge_count());
    CHECK(r["chi"].get<int>() <= r["chi_d"].get<int>());
    if (!r["gamma_t"].is_null()) CHECK(r["gamma"].get<int>() <= r["gamma_t"].get<int>());
    if (!r["dk"].is_null()) ++by_k[r["dk"].get<int>()];
    if (r["chi_d"] == 2) CHECK(oracle::complete_bipartite_sides(g).has_value());
  }
  for (const auto& [k, st] : summary.by_k) CHECK(by_k[k] == st.count);
  CHECK(summary.by_k.at(2).min_order == 4);
  CHECK(summary.by_k.at(2).witness == "C]");
}

TEST_CASE("scan output is identical for any worker count") {
  const auto src = GraphSource::builtin(1, 6);
  std::string first;
  for (unsigned jobs : {1U, 2U, 4U, 7U}) {
    ScanOptions options;
    options.jobs = jobs;
    options.checkpoint_every = 17;
    options.checks = CheckSet::parse("invariants,planarity,theorem1");
    std::ostringstream out;
    scan_stream(src, options, &out);
    if (first.empty()) first = out.str();
    CHECK(out.str() == first);
  }
}

TEST_CASE("interrupted scan resumes to the same records and summary") {
  TempDir dir;
  const auto src = GraphSource::builtin(1, 6);
  ScanOptions options;
  options.checks = CheckSet::parse("invariants,planarity");
  options.checkpoint_every = 10;

  const auto full = scan_stream(src, options, nullptr, dir.path / "full.jsonl");
  CHECK(full.complete);

  options.checkpoint = dir.path / "ck.json";
  options.stop_after = 37;
  const auto part = scan_stream(src, options, nullptr, dir.path / "resumed.jsonl");
  CHECK_FALSE(part.complete);
  CHECK(part.records == 37);

  // bytes past the checkpoint (a crash mid-batch) are discarded on resume
  {
    std::ofstream junk(dir.path / "resumed.jsonl", std::ios::app);
    junk << "{\"partial\":";
  }
  options.stop_after = 50;
  scan_stream(src, options, nullptr, dir.path / "resumed.jsonl");
  options.stop_after.reset();
  const auto resumed = scan_stream(src, options, nullptr, dir.path / "resumed.jsonl");
  CHECK(resumed.complete);
  CHECK(resumed == full);
  CHECK(slurp(dir.path / "resumed.jsonl") == slurp(dir.path / "full.jsonl"));

  // running again after completion changes nothing
  const auto again = scan_stream(src, options, nullptr, dir.path / "resumed.jsonl");
  CHECK(again == full);
  CHECK(slurp(dir.path / "resumed.jsonl") == slurp(dir.path / "full.jsonl"));
}

TEST_CASE("checkpoint mismatches abort") {
  TempDir dir;
  ScanOptions options;
  options.checkpoint = dir.path / "ck.json";
  options.stop_after = 3;
  scan_stream(GraphSource::builtin(4), options, nullptr, dir.path / "out.jsonl");
  CHECK_THROWS_AS(scan_stream(GraphSource::builtin(5), options, nullptr, dir.path / "out.jsonl"), ScanError);
  ScanOptions other = options;
  other.checks = CheckSet::parse("invariants,planarity");
  CHECK_THROWS_AS(scan_stream(GraphSource::builtin(4), other, nullptr, dir.path / "out.jsonl"), ScanError);
  std::ostringstream to_stream;
  CHECK_THROWS_AS(scan_stream(GraphSource::builtin(4), options, &to_stream), ScanError);
}

TEST_CASE("summary CSV") {
  ScanOptions options;
  options.checks = CheckSet::parse("invariants,planarity");
  std::ostringstream out, csv;
  write_summary_csv(scan_stream(GraphSource::builtin(1, 5), options, &out), csv);
  CHECK(csv.str() ==
        "k,count,min_order,witness_graph6,planar,complete_bipartite\n"
        "1,1,1,@,1,0\n"
        "2,2,4,C],2,2\n");
}

TEST_CASE("minimum-order survey") {
  const auto two = min_order_scan(2, 6, builtin_and_files());
  REQUIRE(two.min_order.has_value());
  CHECK(*two.min_order == 4);
  CHECK(canonical_graph6(parse_graph6(two.witness_graph6)) == canonical_graph6(complete_bipartite(2, 2).graph));
  CHECK(two.witness_verified);
  CHECK_FALSE(two.partial);

  const auto none = min_order_scan(3, 7, builtin_and_files());
  CHECK_FALSE(none.min_order.has_value());
  CHECK_FALSE(none.partial);
  CHECK(to_json(none)["result"] == "none <= 7");

  const auto partial = min_order_scan(3, 8, builtin_and_files({{8, "/nonexistent/order8.g6"}}));
  CHECK(partial.partial);
  CHECK(partial.orders_missing == std::vector<int>{8});
  CHECK_FALSE(partial.min_order.has_value());

  CHECK_THROWS_AS(min_order_scan(1, 5, builtin_and_files()), DomainError);
}
