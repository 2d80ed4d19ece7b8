#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "domchrom/constructions.hpp"
#include "domchrom/graph.hpp"
#include "domchrom/invariants.hpp"

namespace domchrom {

/// Raised when a check needs a D(k) graph and gets something else.
class NotDkError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised when a search hits its deadline before finishing.
class DeadlineExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Classes (i, j, l) and vertices x_i in V_i, x_j in V_j, x_l in V_l with
/// x_i adjacent to all of V_j, x_j to all of V_l and x_l to all of V_i.
struct ChainWitness {
  std::array<int, 3> classes{};
  std::array<int, 3> vertices{};
};

/// First chain in lexicographic order of (i, j, l), smallest vertices.
/// Throws DomainError if the colouring has fewer than three classes or is
/// not proper.
std::optional<ChainWitness> find_chain(const Graph& g, const Coloring& c);

struct Theorem1Failure {
  enum class Kind { class_not_dominated, vertex_dominates_none, vertex_dominates_several };
  Coloring coloring;
  int index = 0;  // class index for class_not_dominated, vertex otherwise
  Kind kind = Kind::class_not_dominated;
};

std::string to_string(Theorem1Failure::Kind kind);

struct Theorem1Report {
  int k = 0;
  std::size_t colorings_checked = 0;
  bool all_classes_dominated = true;
  bool every_vertex_dominates_exactly_one = true;
  /// Up to kMaxCounterexamples failures, in enumeration order.
  std::vector<Theorem1Failure> counterexamples;
  std::size_t failures_total = 0;
  /// Per vertex: fewest and most classes it dominates over all colourings
  /// (own singleton class counted).
  std::vector<int> min_dominated;
  std::vector<int> max_dominated;
  /// (colouring, vertex) pairs where the vertex's only dominated class is
  /// its own singleton. Zero means the adjacency-only reading agrees.
  std::size_t own_singleton_only = 0;

  static constexpr std::size_t kMaxCounterexamples = 16;
};

/// Checks, over every optimal dominator colouring of a D(k) graph, that each
/// class has a vertex adjacent to all of it and that each vertex dominates
/// exactly one class. Throws NotDkError for other graphs.
Theorem1Report check_theorem1(const Graph& g);
/// Same, reusing an already computed report.
Theorem1Report check_theorem1(const Graph& g, const InvariantReport& report);

/// One vertex per class (in class order) forming a total dominating set;
/// the lexicographically first such choice, or nullopt.
std::optional<std::vector<int>> find_total_dominating_transversal(const Graph& g, const Coloring& c);

struct D3Membership {
  D3Blueprint blueprint;
  /// Graph vertex playing build_d3's vertex i.
  std::vector<int> vertex_of;
};

/// Searches role assignments (x3, the split of the rest into V1/V2, and
/// x1, y1, y2, y3) for one under which g is exactly build_d3 of a valid
/// blueprint. Throws DeadlineExceeded if the deadline passes first.
std::optional<D3Membership> is_in_class_d3(const Graph& g, Deadline deadline = std::nullopt);

}  // namespace domchrom
