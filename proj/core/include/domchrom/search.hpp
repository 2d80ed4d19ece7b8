#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domchrom/graph.hpp"
#include "domchrom/invariants.hpp"

namespace domchrom {

// ---------------------------------------------------------------------------
// Canonical forms and enumeration

/// Relabelling of g whose graph6 bit string is least among all relabellings
/// that respect a colour-refinement ordering of the vertices. Two graphs are
/// isomorphic iff their canonical forms are equal.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// Every graph on n vertices up to isomorphism (connected or not), built by
/// one-vertex augmentation from order n - 1; sorted by canonical graph6.
/// Practical for n <= 9.
std::vector<Graph> enumerate_graphs(int n);

/// Connected graphs on n vertices up to isomorphism, 1 <= n <= 7. Larger
/// orders throw DomainError: feed an external graph6 stream to scan_stream
/// instead (generate_connected can produce one).
std::vector<Graph> enumerate_connected(int n);

/// Same enumeration without the n <= 7 cap, for producing graph6 streams
/// of order 8 and 9.
std::vector<Graph> generate_connected(int n);

// ---------------------------------------------------------------------------
// Streamed scans

struct CheckSet {
  bool invariants = true;
  bool planarity = false;
  bool d3_membership = false;
  bool theorem1 = false;

  /// Comma-separated subset of invariants,planarity,d3-membership,theorem1.
  static CheckSet parse(std::string_view list);
  std::string to_string() const;
};

/// Graph6 lines plus an identity string used to match checkpoints.
struct GraphSource {
  std::string identity;
  std::vector<std::string> lines;
  /// 1-based line number in the original input for each entry of `lines`.
  std::vector<std::size_t> line_numbers;

  static GraphSource from_stream(std::istream& in, std::string name);
  static GraphSource from_file(const std::filesystem::path& path);
  /// Connected graphs of orders lo..hi from enumerate_connected.
  static GraphSource builtin(int lo, int hi);
  static GraphSource builtin(int n) { return builtin(n, n); }
};

struct ScanRecord {
  std::size_t index = 0;
  std::size_t line = 0;
  std::string graph6;
  /// False when the line failed to parse; only index, line, graph6 and error are set.
  bool parsed = true;
  int n = 0;
  std::size_t edge_count = 0;
  bool connected = true;
  std::optional<InvariantReport> report;
  std::optional<bool> complete_bipartite;
  std::optional<bool> planar;
  std::optional<bool> d3_member;
  std::optional<bool> theorem1_holds;
  std::optional<std::string> error;
};

struct DkStats {
  std::size_t count = 0;
  int min_order = 0;
  std::string witness;
  std::size_t planar = 0;
  std::size_t complete_bipartite = 0;

  friend bool operator==(const DkStats&, const DkStats&) = default;
};

struct ScanSummary {
  std::string source;
  std::string checks;
  std::size_t records = 0;
  std::size_t errors = 0;
  std::size_t disconnected = 0;
  std::map<int, DkStats> by_k;
  bool complete = false;

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanOptions {
  CheckSet checks;
  bool strict = false;
  unsigned jobs = 1;
  /// Checkpoint file; requires `out_path` so the record file can be
  /// truncated back to the last checkpoint on resume.
  std::optional<std::filesystem::path> checkpoint;
  std::size_t checkpoint_every = 256;
  /// Stop after this many records in this invocation (simulated interrupt).
  std::optional<std::size_t> stop_after;
  /// Per-graph time limit for the D(3) membership check.
  std::optional<double> deadline_secs;
};

/// Computes one record; never throws for per-graph failures (they land in
/// `error`) except parse errors.
ScanRecord scan_graph(const Graph& g, const CheckSet& checks, std::optional<double> deadline_secs = {});

/// Runs the checks over every line of `source`, writing one JSON line per
/// graph in input order to `out` (or appending to `out_path` when set).
/// Parse errors abort under `strict`, otherwise they become error records.
ScanSummary scan_stream(const GraphSource& source, const ScanOptions& options, std::ostream* out,
                        const std::optional<std::filesystem::path>& out_path = std::nullopt);

/// CSV with one row per k: k,count,min_order,witness_graph6,planar,complete_bipartite.
void write_summary_csv(const ScanSummary& summary, std::ostream& out);

// ---------------------------------------------------------------------------
// Minimum-order survey

/// Complete list of connected graphs of order n, or nullopt if unavailable.
using OrderSource = std::function<std::optional<std::vector<Graph>>(int n)>;

/// Built-in enumeration for n <= 7, graph6 files for the listed orders.
OrderSource builtin_and_files(std::map<int, std::filesystem::path> files = {});

struct SurveyResult {
  int k = 0;
  int n_max = 0;
  std::optional<int> min_order;
  std::string witness_graph6;
  /// Witness re-checked with the full solver (and D(3) membership when k=3).
  bool witness_verified = false;
  std::optional<bool> witness_in_class_d3;
  bool partial = false;
  std::vector<int> orders_missing;
  std::map<int, std::size_t> graphs_per_order;
};

/// Smallest order <= n_max carrying a connected graph with
/// gamma = chi = chi_d = k, scanning orders upward. Never extrapolates past
/// n_max; missing orders mark the result partial.
SurveyResult min_order_scan(int k, int n_max, const OrderSource& source);

}  // namespace domchrom
