#include "domchrom_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "domchrom/constructions.hpp"
#include "domchrom/graph6.hpp"
#include "domchrom/invariants.hpp"
#include "domchrom/planarity.hpp"
#include "domchrom/search.hpp"
#include "domchrom/serialize.hpp"
#include "domchrom/structure.hpp"

namespace domchrom::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string text;
  Graph graph;
};

// Graph6 from the positional argument, else every non-empty stdin line.
std::vector<Input> read_graphs(const std::string& arg, std::istream& in) {
  std::vector<std::string> lines;
  if (!arg.empty()) {
    lines.push_back(arg);
  } else {
    for (std::string line; std::getline(in, line);) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty() && line != kGraph6Header) lines.push_back(line);
    }
  }
  if (lines.empty()) throw UsageError("no graph6 input (pass it as an argument or on stdin)");
  std::vector<Input> out;
  for (auto& line : lines) {
    Graph g = parse_graph6(line);
    out.push_back({std::move(line), std::move(g)});
  }
  return out;
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
  } catch (const std::exception&) {
    throw UsageError("--builtin expects N or LO-HI, got '" + text + "'");
  }
}

// ---------------------------------------------------------------------------

struct GraphArgs {
  std::string graph6;
};

int cmd_invariants(const GraphArgs& a, bool witnesses, const std::string& format, std::istream& in,
                   std::ostream& out) {
  const auto graphs = read_graphs(a.graph6, in);
  if (format == "csv") out << invariant_csv_header() << '\n';
  for (const auto& input : graphs) {
    const auto report = classify_dk(input.graph);
    if (format == "csv") {
      out << to_csv_row(report) << '\n';
    } else {
      out << to_json(report, witnesses).dump() << '\n';
    }
  }
  return kOk;
}

int cmd_classify(const GraphArgs& a, std::istream& in, std::ostream& out) {
  for (const auto& input : read_graphs(a.graph6, in)) {
    const auto r = classify_dk(input.graph);
    Json j;
    j["graph6"] = r.graph6;
    j["dk"] = r.dk ? Json(*r.dk) : Json(nullptr);
    j["gamma"] = r.gamma;
    j["chi"] = r.chi;
    j["chi_d"] = r.chi_d;
    out << j.dump() << '\n';
  }
  return kOk;
}

int cmd_planar(const GraphArgs& a, std::istream& in, std::ostream& out) {
  for (const auto& input : read_graphs(a.graph6, in)) {
    Json j;
    j["graph6"] = input.text;
    const Json verdict = to_json(is_planar(input.graph));
    for (const auto& [key, value] : verdict.items()) j[key] = value;
    out << j.dump() << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  bool theorem1 = false;
  bool d3 = false;
  bool planar = false;
  std::optional<int> chain;
};

std::optional<double> deadline_from_env() {
  if (auto v = env("DOMCHROM_DEADLINE_SECS")) {
    try {
      return std::stod(*v);
    } catch (const std::exception&) {
      throw UsageError("DOMCHROM_DEADLINE_SECS must be a number, got '" + *v + "'");
    }
  }
  return std::nullopt;
}

int cmd_verify(const GraphArgs& a, const VerifyArgs& v, std::istream& in, std::ostream& out) {
  if (!v.theorem1 && !v.d3 && !v.planar && !v.chain) {
    throw UsageError("verify needs at least one of --theorem1, --d3-membership, --planar, --chain");
  }
  bool all_hold = true;
  for (const auto& input : read_graphs(a.graph6, in)) {
    const Graph& g = input.graph;
    auto emit = [&](const char* check, bool holds, Json detail) {
      Json j;
      j["graph6"] = input.text;
      j["check"] = check;
      j["holds"] = holds;
      for (auto& [key, value] : detail.items()) j[key] = value;
      out << j.dump() << '\n';
      all_hold = all_hold && holds;
    };
    if (v.theorem1) {
      const auto t = check_theorem1(g);
      emit("theorem1", t.all_classes_dominated && t.every_vertex_dominates_exactly_one, to_json(t));
    }
    if (v.d3) {
      Deadline deadline;
      if (auto secs = deadline_from_env()) {
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*secs));
      }
      const auto m = is_in_class_d3(g, deadline);
      Json detail;
      detail["membership"] = m ? to_json(*m) : Json(nullptr);
      emit("d3-membership", m.has_value(), detail);
    }
    if (v.planar) {
      const auto verdict = is_planar(g);
      emit("planar", verdict.planar, to_json(verdict));
    }
    if (v.chain) {
      const int k = *v.chain;
      const int chi_d = dominator_chromatic_number(g).value;
      if (k != chi_d) {
        throw UsageError("--chain " + std::to_string(k) + " needs k = chi_d, which is " + std::to_string(chi_d));
      }
      Json detail;
      detail["coloring"] = nullptr;
      detail["chain"] = nullptr;
      std::size_t checked = 0;
      enumerate_optimal_dominator_colorings(g, k, [&](const Coloring& c) {
        ++checked;
        if (auto chain = find_chain(g, c)) {
          detail["coloring"] = to_json(c);
          detail["chain"] = to_json(*chain);
          return false;
        }
        return true;
      });
      detail["colorings_checked"] = checked;
      emit("chain", !detail["chain"].is_null(), detail);
    }
  }
  return all_hold ? kOk : kPropertyFalse;
}

struct ConstructArgs {
  int k = 0;
  int n = 0;
  int a = 3;
  int b = 3;
  std::optional<std::size_t> index;
  std::string blueprint;
  int p = 0;
  int q = 0;
  std::string labels;
  std::string dot;
};

int emit_construction(const LabeledGraph& lg, const ConstructArgs& c, std::ostream& out) {
  out << to_graph6(lg.graph) << '\n';
  if (!c.labels.empty()) write_file(c.labels, to_json(lg.labels).dump(2) + "\n");
  if (!c.dot.empty()) write_file(c.dot, to_dot(lg.graph, &lg.labels));
  return kOk;
}

int cmd_construct_d3(const ConstructArgs& c, std::ostream& out, std::ostream& err) {
  D3Blueprint bp;
  if (!c.blueprint.empty()) {
    std::ifstream f(c.blueprint);
    if (!f) throw UsageError("cannot read blueprint " + c.blueprint);
    try {
      bp = blueprint_from_json(Json::parse(f));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("bad blueprint file: " + std::string(e.what()));
    }
  } else {
    const std::size_t index = c.index.value_or(0);
    const auto list = enumerate_d3_blueprints(c.a, c.b, index + 1);
    if (list.size() <= index) {
      throw UsageError("only " + std::to_string(list.size()) + " valid blueprints with a=" + std::to_string(c.a) +
                       ", b=" + std::to_string(c.b));
    }
    bp = list[index];
  }
  const auto verdict = validate_blueprint(bp);
  if (!verdict.valid) {
    err << "invalid blueprint: " << to_json(verdict).dump() << '\n';
    return kUsage;
  }
  return emit_construction(build_d3(bp), c, out);
}

struct ScanArgs {
  std::string source;
  std::string builtin;
  std::string checks = "invariants";
  std::string out;
  std::string summary;
  std::string checkpoint;
  bool strict = false;
  std::optional<unsigned> jobs;
  std::optional<std::size_t> stop_after;
};

int cmd_scan(const ScanArgs& s, std::istream& in, std::ostream& out, std::ostream& err) {
  if (s.source.empty() == s.builtin.empty()) throw UsageError("scan needs exactly one of --source or --builtin");
  GraphSource source;
  if (!s.builtin.empty()) {
    const auto [lo, hi] = parse_range(s.builtin);
    source = GraphSource::builtin(lo, hi);
  } else if (s.source == "-") {
    source = GraphSource::from_stream(in, "stdin");
  } else {
    source = GraphSource::from_file(s.source);
  }

  ScanOptions options;
  options.checks = CheckSet::parse(s.checks);
  options.strict = s.strict;
  options.stop_after = s.stop_after;
  options.deadline_secs = deadline_from_env();
  if (s.jobs) {
    options.jobs = *s.jobs;
  } else if (auto v = env("DOMCHROM_JOBS")) {
    try {
      options.jobs = static_cast<unsigned>(std::stoul(*v));
    } catch (const std::exception&) {
      throw UsageError("DOMCHROM_JOBS must be a non-negative integer, got '" + *v + "'");
    }
  }
  if (!s.checkpoint.empty()) options.checkpoint = s.checkpoint;

  ScanSummary summary;
  std::ostream* summary_out = &out;
  if (s.out == "-") {
    summary = scan_stream(source, options, &out);
    summary_out = &err;
  } else if (!s.out.empty()) {
    summary = scan_stream(source, options, nullptr, std::filesystem::path(s.out));
  } else {
    summary = scan_stream(source, options, nullptr);
  }
  if (!s.summary.empty()) {
    std::ofstream f(s.summary, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + s.summary);
    write_summary_csv(summary, f);
  }
  *summary_out << to_json(summary).dump() << '\n';
  return kOk;
}

struct SurveyArgs {
  int k = 3;
  int n_max = 7;
  std::vector<std::string> streams;
};

int cmd_survey(const SurveyArgs& s, std::ostream& out) {
  std::map<int, std::filesystem::path> files;
  for (const auto& arg : s.streams) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) throw UsageError("--stream expects N=FILE, got '" + arg + "'");
    try {
      files[std::stoi(arg.substr(0, eq))] = arg.substr(eq + 1);
    } catch (const std::exception&) {
      throw UsageError("--stream expects N=FILE, got '" + arg + "'");
    }
  }
  const auto result = min_order_scan(s.k, s.n_max, builtin_and_files(files));
  out << to_json(result).dump() << '\n';
  return kOk;
}

int cmd_generate(int n, bool all, std::ostream& out) {
  for (const Graph& g : all ? enumerate_graphs(n) : generate_connected(n)) out << to_graph6(g) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants, constructions and scans for D(k) graphs", "domchrom"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "domchrom 0.1.0");

  GraphArgs graph_args;
  auto add_graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph6", graph_args.graph6, "Graph in graph6 (default: one per line on stdin)");
  };

  bool witnesses = false;
  std::string format = "json";
  auto* inv = app.add_subcommand("invariants", "All five invariants with their witnesses");
  add_graph_arg(inv);
  inv->add_flag("--witnesses", witnesses, "Include witness sets and colourings");
  inv->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* classify = app.add_subcommand("classify", "D(k) classification");
  add_graph_arg(classify);

  auto* planar = app.add_subcommand("planar", "Planarity with embedding or Kuratowski certificate");
  add_graph_arg(planar);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check structural properties; exit 1 if one is false");
  add_graph_arg(verify);
  verify->add_flag("--theorem1", verify_args.theorem1, "Class domination over all optimal dominator colourings");
  verify->add_flag("--d3-membership", verify_args.d3, "Membership in the three-class family");
  verify->add_flag("--planar", verify_args.planar, "Planarity");
  verify->add_option("--chain", verify_args.chain, "Search optimal dominator colourings with k = chi_d classes for a chain");

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a graph family member; graph6 on stdout");
  construct->require_subcommand(1);
  auto add_outputs = [&](CLI::App* sub) {
    sub->add_option("--labels", construct_args.labels, "Write the vertex labelling as JSON");
    sub->add_option("--dot", construct_args.dot, "Write Graphviz DOT");
  };
  auto* d_odd = construct->add_subcommand("d-odd", "Odd family, k odd >= 3, n >= 4k-3");
  d_odd->add_option("--k", construct_args.k)->required();
  d_odd->add_option("--n", construct_args.n)->required();
  add_outputs(d_odd);
  auto* d_even = construct->add_subcommand("d-even", "Even family, k even >= 4, n >= 3k");
  d_even->add_option("--k", construct_args.k)->required();
  d_even->add_option("--n", construct_args.n)->required();
  add_outputs(d_even);
  auto* d3 = construct->add_subcommand("d3", "Three-class family from a blueprint");
  d3->add_option("--a", construct_args.a, "|V1|");
  d3->add_option("--b", construct_args.b, "|V2|");
  d3->add_option("--index", construct_args.index, "Index into the valid blueprints for (a, b)");
  d3->add_option("--blueprint", construct_args.blueprint, "Blueprint JSON file")->excludes("--index");
  add_outputs(d3);
  auto* kpq = construct->add_subcommand("kpq", "Complete bipartite K_{p,q}");
  kpq->add_option("--p", construct_args.p)->required();
  kpq->add_option("--q", construct_args.q)->required();
  add_outputs(kpq);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Run checks over a graph6 stream, JSON lines out");
  scan->add_option("--source", scan_args.source, "graph6 file, or - for stdin");
  scan->add_option("--builtin", scan_args.builtin, "Built-in connected graphs of order N or LO-HI (<= 7)");
  scan->add_option("--checks", scan_args.checks, "invariants,planarity,d3-membership,theorem1");
  scan->add_option("--out", scan_args.out, "Record file (JSON lines), or - for stdout");
  scan->add_option("--summary", scan_args.summary, "Per-k summary CSV");
  scan->add_option("--checkpoint", scan_args.checkpoint, "Checkpoint file; resumes if present");
  scan->add_flag("--strict", scan_args.strict, "Abort on the first unparsable line");
  scan->add_option("--jobs", scan_args.jobs, "Worker threads (default DOMCHROM_JOBS or 1)");
  scan->add_option("--stop-after", scan_args.stop_after, "Process at most this many records, then stop");

  SurveyArgs survey_args;
  auto* survey = app.add_subcommand("survey", "Smallest order carrying a D(k) graph");
  survey->add_option("--k", survey_args.k)->required();
  survey->add_option("--n-max", survey_args.n_max)->required();
  survey->add_option("--stream", survey_args.streams, "N=FILE: connected graphs of order N as graph6");

  int generate_n = 0;
  bool generate_all = false;
  auto* generate = app.add_subcommand("generate", "Connected graphs of order n up to isomorphism, as graph6");
  generate->add_option("--n", generate_n)->required();
  generate->add_flag("--all", generate_all, "Include disconnected graphs");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(graph_args, witnesses, format, in, out);
    if (classify->parsed()) return cmd_classify(graph_args, in, out);
    if (planar->parsed()) return cmd_planar(graph_args, in, out);
    if (verify->parsed()) return cmd_verify(graph_args, verify_args, in, out);
    if (d_odd->parsed()) return emit_construction(build_d_odd({construct_args.k, construct_args.n}), construct_args, out);
    if (d_even->parsed()) return emit_construction(build_d_even({construct_args.k, construct_args.n}), construct_args, out);
    if (d3->parsed()) return cmd_construct_d3(construct_args, out, err);
    if (kpq->parsed()) return emit_construction(complete_bipartite(construct_args.p, construct_args.q), construct_args, out);
    if (scan->parsed()) return cmd_scan(scan_args, in, out, err);
    if (survey->parsed()) return cmd_survey(survey_args, out);
    if (generate->parsed()) return cmd_generate(generate_n, generate_all, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace domchrom::cli
