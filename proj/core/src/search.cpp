#include "domchrom/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "domchrom/graph6.hpp"
#include "domchrom/planarity.hpp"
#include "domchrom/serialize.hpp"
#include "domchrom/structure.hpp"

namespace domchrom {

// ---------------------------------------------------------------------------
// Canonical form: individualise-refine search for the least graph6 bit
// string. Cells of the refined ordered partition are isomorphism invariant,
// so the minimum over orderings compatible with them is canonical.

namespace {

using Partition = std::vector<std::vector<int>>;

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {
    perm_.assign(static_cast<std::size_t>(n_), -1);
  }

  std::vector<int> run() {
    Partition p;
    if (n_ > 0) {
      std::vector<int> all(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) all[static_cast<std::size_t>(v)] = v;
      p.push_back(std::move(all));
    }
    refine(p);
    search(p, 0, false);
    return best_perm_;
  }

 private:
  void refine(Partition& p) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n_));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < p.size(); ++c) {
        for (int v : p[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
      }
      Partition next;
      next.reserve(p.size());
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> sig(p.size(), 0);
          for (VertexMask m = g_.row(v); m; m &= m - 1) ++sig[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(lowest_vertex(m))])];
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = next.size();
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
        if (next.size() - start > 1) changed = true;
      }
      p = std::move(next);
    }
  }

  // less: the current prefix is already smaller than the best string.
  void search(const Partition& p, int pos, bool less) {
    if (pos == n_) {
      if (!have_best_ || less) {
        best_ = bits_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    const auto& cell = p[static_cast<std::size_t>(pos)];
    std::vector<int> tried;
    for (int v : cell) {
      bool twin = false;
      for (int u : tried) {
        if ((g_.row(u) & ~bit(v)) == (g_.row(v) & ~bit(u))) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);

      perm_[static_cast<std::size_t>(pos)] = v;
      const std::size_t mark = bits_.size();
      for (int i = 0; i < pos; ++i) bits_.push_back(g_.adjacent(perm_[static_cast<std::size_t>(i)], v) ? 1 : 0);
      bool next_less = less;
      bool prune = false;
      if (have_best_ && !less) {
        for (std::size_t i = mark; i < bits_.size(); ++i) {
          if (bits_[i] != best_[i]) {
            next_less = bits_[i] < best_[i];
            prune = !next_less;
            break;
          }
        }
      }
      if (!prune) {
        if (cell.size() == 1) {
          search(p, pos + 1, next_less);
        } else {
          Partition q;
          q.reserve(p.size() + 1);
          for (std::size_t c = 0; c < p.size(); ++c) {
            if (static_cast<int>(c) != pos) {
              q.push_back(p[c]);
              continue;
            }
            q.push_back({v});
            std::vector<int> rest;
            for (int w : cell) {
              if (w != v) rest.push_back(w);
            }
            q.push_back(std::move(rest));
          }
          refine(q);
          search(q, pos + 1, next_less);
        }
      }
      bits_.resize(mark);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> perm_;
  std::vector<char> bits_;
  std::vector<char> best_;
  std::vector<int> best_perm_;
  bool have_best_ = false;
};

std::vector<Graph> augment(const std::vector<Graph>& previous, bool connected_only) {
  std::set<std::string> seen;
  for (const Graph& g : previous) {
    const int m = g.order();
    std::vector<VertexMask> rows(static_cast<std::size_t>(m) + 1, 0);
    for (VertexMask s = connected_only ? 1 : 0; s < bit(m); ++s) {
      for (int v = 0; v < m; ++v) rows[static_cast<std::size_t>(v)] = g.row(v) | ((s >> v) & 1U ? bit(m) : 0);
      rows[static_cast<std::size_t>(m)] = s;
      seen.insert(canonical_graph6(Graph::from_masks(rows)));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& code : seen) out.push_back(parse_graph6(code));
  return out;
}

std::vector<Graph> grow(int n, bool connected_only) {
  if (n < 1) throw DomainError("graph order must be >= 1, got " + std::to_string(n));
  if (n > kMaskOrder) throw DomainError("graph order must be <= 64");
  std::vector<Graph> level{complete_graph(1)};
  for (int m = 2; m <= n; ++m) level = augment(level, connected_only);
  return level;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  require_mask_order(g);
  CanonSearch search(g);
  const auto perm = search.run();
  return g.permuted(perm);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

std::vector<Graph> enumerate_graphs(int n) { return grow(n, false); }

std::vector<Graph> enumerate_connected(int n) {
  if (n > 7) {
    throw DomainError("built-in enumeration covers n <= 7; scan an external graph6 stream for n = " +
                      std::to_string(n));
  }
  return grow(n, true);
}

std::vector<Graph> generate_connected(int n) { return grow(n, true); }

// ---------------------------------------------------------------------------
// Check sets and sources

CheckSet CheckSet::parse(std::string_view list) {
  CheckSet out;
  out.invariants = false;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    const std::string_view name = list.substr(start, end - start);
    if (name == "invariants") {
      out.invariants = true;
    } else if (name == "planarity") {
      out.planarity = true;
    } else if (name == "d3-membership") {
      out.d3_membership = true;
    } else if (name == "theorem1") {
      out.theorem1 = true;
    } else if (!name.empty()) {
      throw std::invalid_argument("unknown check '" + std::string(name) +
                                  "' (expected invariants, planarity, d3-membership, theorem1)");
    }
    start = end + 1;
  }
  // theorem1 needs the invariant report to know k.
  if (out.theorem1) out.invariants = true;
  if (!out.invariants && !out.planarity && !out.d3_membership) throw std::invalid_argument("empty check list");
  return out;
}

std::string CheckSet::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(invariants, "invariants");
  add(planarity, "planarity");
  add(d3_membership, "d3-membership");
  add(theorem1, "theorem1");
  return out;
}

namespace {

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

GraphSource GraphSource::from_stream(std::istream& in, std::string name) {
  std::ostringstream all;
  all << in.rdbuf();
  const std::string content = all.str();
  GraphSource out;
  (void)name;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string::npos) end = content.size();
    ++line_no;
    std::string line = content.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (!line.empty()) {
      out.lines.push_back(std::move(line));
      out.line_numbers.push_back(line_no);
    }
    pos = end + 1;
  }
  out.identity = "graph6:fnv1a64=" + fnv1a_hex(content) + ",lines=" + std::to_string(out.lines.size());
  return out;
}

GraphSource GraphSource::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScanError("cannot open graph6 source " + path.string());
  return from_stream(in, path.string());
}

GraphSource GraphSource::builtin(int lo, int hi) {
  if (lo > hi) throw DomainError("empty builtin order range");
  GraphSource out;
  for (int n = lo; n <= hi; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      out.lines.push_back(to_graph6(g));
      out.line_numbers.push_back(out.lines.size());
    }
  }
  out.identity = lo == hi ? "builtin:n=" + std::to_string(lo)
                          : "builtin:n=" + std::to_string(lo) + ".." + std::to_string(hi);
  return out;
}

// ---------------------------------------------------------------------------
// Per-graph checks

namespace {

// Emitted D(k) records are checked again with the early-exit classifier and
// the witness predicates.
void reverify_dk(const Graph& g, const InvariantReport& r) {
  const int k = *r.dk;
  auto fail = [&](const std::string& what) {
    throw std::logic_error("D(" + std::to_string(k) + ") record for " + r.graph6 + " failed re-verification: " + what);
  };
  if (dk_of(g) != r.dk) fail("dk_of disagrees");
  if (r.gamma_witness.size() != k || !is_dominating(g, r.gamma_witness.vertices)) fail("gamma witness");
  if (r.chi_witness.size() != k || !is_proper(g, r.chi_witness)) fail("chi witness");
  if (r.chi_d_witness.size() != k || !is_dominator_coloring(g, r.chi_d_witness)) fail("chi_d witness");
  if (r.gamma_t_witness && !is_total_dominating(g, r.gamma_t_witness->vertices)) fail("gamma_t witness");
  if (r.chi_dom_witness && !is_dominated_coloring(g, *r.chi_dom_witness)) fail("chi_dom witness");
}

}  // namespace

ScanRecord scan_graph(const Graph& g, const CheckSet& checks, std::optional<double> deadline_secs) {
  ScanRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.edge_count = g.edge_count();
  if (r.n == 0) {
    r.connected = false;
    r.error = "graph has no vertices";
    return r;
  }
  if (!g.fits_mask()) {
    r.error = "order " + std::to_string(r.n) + " above 64 is not supported by the checks";
    return r;
  }
  r.connected = is_connected(g);
  if (!r.connected) return r;

  if (checks.invariants) {
    r.report = classify_dk(g);
    check_sandwich(*r.report);
    if (r.report->dk) reverify_dk(g, *r.report);
    r.complete_bipartite = is_complete_bipartite(g);
  }
  if (checks.planarity) {
    const auto verdict = is_planar(g);
    std::string why;
    if (!verify_certificate(g, verdict, &why)) {
      throw std::logic_error("planarity certificate rejected for " + r.graph6 + ": " + why);
    }
    r.planar = verdict.planar;
  }
  if (checks.d3_membership) {
    Deadline deadline;
    if (deadline_secs) {
      deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*deadline_secs));
    }
    try {
      r.d3_member = is_in_class_d3(g, deadline).has_value();
    } catch (const DeadlineExceeded& e) {
      r.error = e.what();
    }
  }
  if (checks.theorem1 && r.report && r.report->dk) {
    const auto t = check_theorem1(g, *r.report);
    r.theorem1_holds = t.all_classes_dominated && t.every_vertex_dominates_exactly_one;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Streamed scan

namespace {

ScanRecord scan_line(const GraphSource& source, std::size_t index, const ScanOptions& options) {
  const std::string& text = source.lines[index];
  Graph g;
  try {
    g = parse_graph6(text);
  } catch (const GraphError& e) {
    ScanRecord r;
    r.index = index;
    r.line = source.line_numbers[index];
    r.graph6 = text;
    r.parsed = false;
    r.connected = false;
    r.error = e.what();
    return r;
  }
  ScanRecord r = scan_graph(g, options.checks, options.deadline_secs);
  r.index = index;
  r.line = source.line_numbers[index];
  return r;
}

void accumulate(ScanSummary& s, const ScanRecord& r, bool planarity_checked) {
  ++s.records;
  if (r.error) ++s.errors;
  if (r.parsed && !r.connected) ++s.disconnected;
  if (!r.report || !r.report->dk) return;
  auto& st = s.by_k[*r.report->dk];
  if (st.count == 0 || r.n < st.min_order) {
    st.min_order = r.n;
    st.witness = r.graph6;
  }
  ++st.count;
  if (planarity_checked && r.planar.value_or(false)) ++st.planar;
  if (r.complete_bipartite.value_or(false)) ++st.complete_bipartite;
}

void process_batch(const GraphSource& source, const ScanOptions& options, std::size_t begin, std::size_t end,
                   std::vector<ScanRecord>& out) {
  out.assign(end - begin, ScanRecord{});
  unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, end - begin));
  if (jobs <= 1) {
    for (std::size_t i = begin; i < end; ++i) out[i - begin] = scan_line(source, i, options);
    return;
  }
  std::atomic<std::size_t> next{begin};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < end; i = next++) out[i - begin] = scan_line(source, i, options);
      } catch (...) {
        errors[w] = std::current_exception();
        next = end;
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct CheckpointState {
  std::size_t next_index = 0;
  std::uintmax_t out_bytes = 0;
  ScanSummary summary;
};

void write_checkpoint(const std::filesystem::path& path, const CheckpointState& st) {
  Json j;
  j["source"] = st.summary.source;
  j["checks"] = st.summary.checks;
  j["next_index"] = st.next_index;
  j["out_bytes"] = st.out_bytes;
  j["summary"] = to_json(st.summary);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ScanError("cannot write checkpoint " + tmp.string());
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw ScanError("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<CheckpointState> read_checkpoint(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  Json j;
  try {
    j = Json::parse(in);
    CheckpointState st;
    st.next_index = j.at("next_index").get<std::size_t>();
    st.out_bytes = j.at("out_bytes").get<std::uintmax_t>();
    st.summary = summary_from_json(j.at("summary"));
    return st;
  } catch (const nlohmann::json::exception& e) {
    throw ScanError("unreadable checkpoint " + path.string() + ": " + e.what());
  }
}

}  // namespace

ScanSummary scan_stream(const GraphSource& source, const ScanOptions& options, std::ostream* out,
                        const std::optional<std::filesystem::path>& out_path) {
  const std::string checks = options.checks.to_string();
  CheckpointState state;
  state.summary.source = source.identity;
  state.summary.checks = checks;

  if (options.checkpoint && out && !out_path) {
    throw ScanError("a checkpointed scan must write records to a file, not a stream");
  }
  bool resumed = false;
  if (options.checkpoint) {
    if (auto loaded = read_checkpoint(*options.checkpoint)) {
      if (loaded->summary.source != source.identity) {
        throw ScanError("checkpoint source '" + loaded->summary.source + "' does not match '" + source.identity + "'");
      }
      if (loaded->summary.checks != checks) {
        throw ScanError("checkpoint checks '" + loaded->summary.checks + "' do not match '" + checks + "'");
      }
      if (loaded->next_index > source.lines.size()) throw ScanError("checkpoint index beyond end of source");
      state = *loaded;
      resumed = true;
    }
  }

  std::ofstream file;
  if (out_path) {
    if (resumed) {
      if (!std::filesystem::exists(*out_path) || std::filesystem::file_size(*out_path) < state.out_bytes) {
        throw ScanError("record file " + out_path->string() + " is shorter than the checkpoint expects");
      }
      std::filesystem::resize_file(*out_path, state.out_bytes);
      file.open(*out_path, std::ios::binary | std::ios::app);
    } else {
      file.open(*out_path, std::ios::binary | std::ios::trunc);
    }
    if (!file) throw ScanError("cannot open record file " + out_path->string());
    out = &file;
  }

  const std::size_t total = source.lines.size();
  const std::size_t limit =
      options.stop_after ? std::min(total, state.next_index + *options.stop_after) : total;
  const std::size_t batch = std::max<std::size_t>(options.checkpoint_every, 1);
  std::vector<ScanRecord> records;
  state.summary.complete = false;

  while (state.next_index < limit) {
    const std::size_t end = std::min(limit, state.next_index + batch);
    process_batch(source, options, state.next_index, end, records);
    for (const auto& r : records) {
      if (!r.parsed && options.strict) {
        if (out) out->flush();
        throw ScanError("line " + std::to_string(r.line) + ": " + r.error.value_or("parse error"));
      }
      accumulate(state.summary, r, options.checks.planarity);
      if (out) *out << to_json(r).dump() << '\n';
    }
    state.next_index = end;
    if (out) {
      out->flush();
      if (!*out) throw ScanError("failed writing scan records");
    }
    if (out_path) state.out_bytes = std::filesystem::file_size(*out_path);
    state.summary.complete = state.next_index == total;
    if (options.checkpoint) write_checkpoint(*options.checkpoint, state);
  }
  state.summary.complete = state.next_index == total;
  if (options.checkpoint && state.next_index == limit && limit == total) write_checkpoint(*options.checkpoint, state);
  return state.summary;
}

void write_summary_csv(const ScanSummary& summary, std::ostream& out) {
  const bool planarity = CheckSet::parse(summary.checks.empty() ? "invariants" : summary.checks).planarity;
  out << "k,count,min_order,witness_graph6,planar,complete_bipartite\n";
  for (const auto& [k, st] : summary.by_k) {
    out << k << ',' << st.count << ',' << st.min_order << ',' << st.witness << ',';
    if (planarity) out << st.planar;
    out << ',' << st.complete_bipartite << '\n';
  }
}

// ---------------------------------------------------------------------------
// Minimum-order survey

OrderSource builtin_and_files(std::map<int, std::filesystem::path> files) {
  return [files = std::move(files)](int n) -> std::optional<std::vector<Graph>> {
    if (auto it = files.find(n); it != files.end()) {
      if (!std::filesystem::exists(it->second)) return std::nullopt;
      const auto source = GraphSource::from_file(it->second);
      std::vector<Graph> out;
      out.reserve(source.lines.size());
      for (const auto& line : source.lines) out.push_back(parse_graph6(line));
      return out;
    }
    if (n <= 7) return enumerate_connected(n);
    return std::nullopt;
  };
}

SurveyResult min_order_scan(int k, int n_max, const OrderSource& source) {
  if (k < 2) throw DomainError("survey needs k >= 2, got " + std::to_string(k));
  if (n_max < 1) throw DomainError("survey needs n_max >= 1");
  SurveyResult out;
  out.k = k;
  out.n_max = n_max;
  for (int n = 1; n <= n_max && !out.min_order; ++n) {
    auto graphs = source(n);
    if (!graphs) {
      out.partial = true;
      out.orders_missing.push_back(n);
      continue;
    }
    out.graphs_per_order[n] = graphs->size();
    for (const Graph& g : *graphs) {
      if (g.order() != n) throw ScanError("order-" + std::to_string(n) + " source contains a graph of order " + std::to_string(g.order()));
      if (!is_connected(g) || dk_of(g) != k) continue;
      out.min_order = n;
      out.witness_graph6 = to_graph6(g);
      const auto report = classify_dk(g);
      out.witness_verified = report.dk == k;
      if (out.witness_verified) reverify_dk(g, report);
      if (k == 3) out.witness_in_class_d3 = is_in_class_d3(g).has_value();
      break;
    }
  }
  return out;
}

}  // namespace domchrom
