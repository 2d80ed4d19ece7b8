#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "domchrom/graph.hpp"

namespace domchrom {

/// Ordered partition of the vertex set into colour classes. Classes are
/// stored as masks, so colourings exist only for graphs with n <= 64.
struct Coloring {
  std::vector<VertexMask> classes;

  int size() const { return static_cast<int>(classes.size()); }
  /// Colour of every vertex, -1 for vertices in no class.
  std::vector<int> color_vector(int n) const;
  /// Classes reordered by their minimum vertex.
  Coloring canonical() const;
  static Coloring from_color_vector(std::span<const int> colors);

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class DominationKind { plain, total };

struct DominatingWitness {
  VertexMask vertices = 0;
  DominationKind kind = DominationKind::plain;
  int size() const { return mask_size(vertices); }
};

bool is_dominating(const Graph& g, VertexMask d);
bool is_total_dominating(const Graph& g, VertexMask d);
/// Classes are non-empty, pairwise disjoint and cover every vertex.
bool is_partition(const Graph& g, const Coloring& c);
/// Partition whose classes are independent sets.
bool is_proper(const Graph& g, const Coloring& c);

/// v dominates class i when it is adjacent to every member, or when the
/// class is exactly {v}. Throws std::out_of_range on bad v or i.
bool dominates_class(const Graph& g, int v, const Coloring& c, int i);
/// Adjacency-only reading: v is adjacent to every member of class i.
bool adjacent_to_class(const Graph& g, int v, const Coloring& c, int i);

/// Proper colouring in which every vertex dominates at least one class.
bool is_dominator_coloring(const Graph& g, const Coloring& c);
/// Proper colouring in which every class has a vertex adjacent to all of it.
bool is_dominated_coloring(const Graph& g, const Coloring& c);

struct DominationResult {
  int value = 0;
  DominatingWitness witness;
};

struct ColoringResult {
  int value = 0;
  Coloring witness;
};

/// gamma(G). The witness is the lexicographically least minimum dominating
/// set (compared as sorted index sequences). Throws DomainError for n = 0.
DominationResult domination_number(const Graph& g);

/// gamma_t(G). Throws DomainError naming an isolated vertex if one exists.
DominationResult total_domination_number(const Graph& g);

/// Colourings returned by the three colouring solvers are the ones whose
/// colour vector (classes numbered by first appearance) is lexicographically
/// least among all optimal colourings.
ColoringResult chromatic_number(const Graph& g);

/// chi_d(G). Rejects disconnected graphs.
ColoringResult dominator_chromatic_number(const Graph& g);

/// chi_dom(G). Rejects disconnected graphs and n = 1.
ColoringResult dominated_chromatic_number(const Graph& g);

/// Size of a maximum clique; used as the colouring lower bound.
int clique_number(const Graph& g);

struct InvariantReport {
  int n = 0;
  std::size_t edge_count = 0;
  std::string graph6;

  int gamma = 0;
  std::optional<int> gamma_t;
  int chi = 0;
  int chi_d = 0;
  std::optional<int> chi_dom;

  DominatingWitness gamma_witness;
  std::optional<DominatingWitness> gamma_t_witness;
  Coloring chi_witness;
  Coloring chi_d_witness;
  std::optional<Coloring> chi_dom_witness;

  /// k when gamma = chi = chi_d = k.
  std::optional<int> dk;
};

/// Computes all five invariants of a connected graph and sets dk.
/// gamma_t and chi_dom are absent only for K_1, where they are undefined.
InvariantReport classify_dk(const Graph& g);

/// D(k) test that stops as soon as gamma, chi or chi_d rules the graph out.
/// Returns k or nullopt. Rejects disconnected graphs.
std::optional<int> dk_of(const Graph& g);

/// Throws std::logic_error if the report breaks gamma <= gamma_t,
/// chi <= chi_d or chi <= chi_dom.
void check_sandwich(const InvariantReport& r);

/// Calls `visit` for every dominator colouring with exactly k classes, each
/// partition once, classes ordered by minimum vertex, in lexicographic
/// order of colour vectors. `visit` returns false to stop early.
/// Throws DomainError if k != chi_d(G).
void enumerate_optimal_dominator_colorings(const Graph& g, int k,
                                           const std::function<bool(const Coloring&)>& visit);
std::vector<Coloring> optimal_dominator_colorings(const Graph& g, int k);

}  // namespace domchrom
