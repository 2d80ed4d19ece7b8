#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domchrom {

/// A set of vertices of a graph with at most 64 vertices; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaskOrder = 64;

inline int mask_size(VertexMask m) { return std::popcount(m); }
inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline VertexMask prefix_mask(int n) { return n >= 64 ? ~VertexMask{0} : (bit(n) - 1); }
inline int lowest_vertex(VertexMask m) { return std::countr_zero(m); }

std::vector<int> mask_to_vector(VertexMask m);
VertexMask vector_to_mask(std::span<const int> vs);

/// Thrown for malformed graph input: bad indices, self-loops, bad encodings.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation's domain excludes the given graph (e.g. a
/// disconnected input to the dominator-coloring solver).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Simple undirected graph on vertices 0..n-1, stored as rows of adjacency
/// bits. Graphs with n <= 64 expose each row as a single VertexMask; larger
/// graphs keep multi-word rows and support the structural accessors only.
///
/// Values are immutable once built. Symmetry and irreflexivity are checked
/// on every construction path.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  /// Rows must be symmetric with empty diagonal; n <= 64.
  static Graph from_masks(std::span<const VertexMask> rows);

  int order() const { return n_; }
  std::size_t edge_count() const;
  bool fits_mask() const { return n_ <= kMaskOrder; }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  /// Open neighbourhood of v as a mask. Requires fits_mask().
  VertexMask row(int v) const { return bits_[static_cast<std::size_t>(v) * words_]; }
  VertexMask closed_row(int v) const { return row(v) | bit(v); }
  VertexMask all_vertices() const { return prefix_mask(n_); }

  /// Relabels so that new vertex i is old vertex perm[i].
  Graph permuted(std::span<const int> perm) const;
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n);
  void set_edge(int u, int v);

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Named roles for vertices of a constructed graph. Single vertices live in
/// `vertices`, role sets (partite sets, colour classes) in `sets`.
struct VertexLabeling {
  std::map<std::string, int> vertices;
  std::map<std::string, std::vector<int>> sets;

  int at(const std::string& name) const;
  const std::vector<int>& set(const std::string& name) const;
  /// Name of v if it has one.
  std::optional<std::string> name_of(int v) const;
  /// Throws GraphError when an index is >= n or two sets listed in
  /// `disjoint` overlap.
  void validate(int n, std::span<const std::string> disjoint = {}) const;
};

struct LabeledGraph {
  Graph graph;
  VertexLabeling labels;
};

/// Throws DomainError unless g has at most 64 vertices.
void require_mask_order(const Graph& g);

/// Throws DomainError for n = 0.
bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Proper 2-colouring sides, or nullopt if g has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);
/// True iff g is K_{a,b} for some a, b >= 1.
bool is_complete_bipartite(const Graph& g);
/// Sizes (smaller first) when g is complete bipartite.
std::optional<std::pair<int, int>> complete_bipartite_sizes(const Graph& g);

LabeledGraph complete_bipartite(int p, int q);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

std::string to_dot(const Graph& g, const VertexLabeling* labels = nullptr);

}  // namespace domchrom
