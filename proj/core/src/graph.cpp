#include "domchrom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace domchrom {

std::vector<int> mask_to_vector(VertexMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(mask_size(m)));
  for (; m != 0; m &= m - 1) out.push_back(lowest_vertex(m));
  return out;
}

VertexMask vector_to_mask(std::span<const int> vs) {
  VertexMask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

Graph::Graph(int n) : n_(n), words_(n == 0 ? 0 : (n + 63) / 64) {
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::set_edge(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void require_mask_order(const Graph& g) {
  if (!g.fits_mask()) {
    throw DomainError("operation requires a graph with at most 64 vertices, got " +
                      std::to_string(g.order()));
  }
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.set_edge(u, v);
  }
  return g;
}

Graph Graph::from_masks(std::span<const VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaskOrder) throw GraphError("from_masks supports at most 64 vertices");
  Graph g(n);
  const VertexMask all = prefix_mask(n);
  for (int v = 0; v < n; ++v) {
    const VertexMask r = rows[static_cast<std::size_t>(v)];
    if (r & ~all) throw GraphError("row " + std::to_string(v) + " references a vertex >= n");
    if (r & bit(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
    for (VertexMask m = r; m != 0; m &= m - 1) {
      const int u = lowest_vertex(m);
      if (!(rows[static_cast<std::size_t>(u)] & bit(v))) {
        throw GraphError("asymmetric rows at (" + std::to_string(v) + "," + std::to_string(u) +
                         ")");
      }
    }
    g.bits_[static_cast<std::size_t>(v)] = r;
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int w = 0; w < words_; ++w) {
    d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
  }
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    for (auto m = bits_[static_cast<std::size_t>(v) * words_ + w]; m != 0; m &= m - 1) {
      out.push_back(w * 64 + std::countr_zero(m));
    }
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
  std::vector<int> inverse(static_cast<std::size_t>(n_), -1);
  for (int i = 0; i < n_; ++i) {
    const int old = perm[static_cast<std::size_t>(i)];
    if (old < 0 || old >= n_ || inverse[static_cast<std::size_t>(old)] != -1) {
      throw GraphError("not a permutation");
    }
    inverse[static_cast<std::size_t>(old)] = i;
  }
  Graph g(n_);
  for (auto [u, v] : edges()) {
    g.set_edge(inverse[static_cast<std::size_t>(u)], inverse[static_cast<std::size_t>(v)]);
  }
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size());
  Graph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) {
        g.set_edge(i, j);
      }
    }
  }
  return g;
}

int VertexLabeling::at(const std::string& name) const {
  auto it = vertices.find(name);
  if (it == vertices.end()) throw std::out_of_range("no vertex labelled " + name);
  return it->second;
}

const std::vector<int>& VertexLabeling::set(const std::string& name) const {
  auto it = sets.find(name);
  if (it == sets.end()) throw std::out_of_range("no vertex set labelled " + name);
  return it->second;
}

std::optional<std::string> VertexLabeling::name_of(int v) const {
  for (const auto& [name, idx] : vertices) {
    if (idx == v) return name;
  }
  return std::nullopt;
}

void VertexLabeling::validate(int n, std::span<const std::string> disjoint) const {
  for (const auto& [name, idx] : vertices) {
    if (idx < 0 || idx >= n) throw GraphError("label " + name + " out of range");
  }
  for (const auto& [name, vs] : sets) {
    for (int v : vs) {
      if (v < 0 || v >= n) throw GraphError("set " + name + " out of range");
    }
  }
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t s = 0; s < disjoint.size(); ++s) {
    for (int v : set(disjoint[s])) {
      auto& o = owner[static_cast<std::size_t>(v)];
      if (o != -1) {
        throw GraphError("sets " + disjoint[static_cast<std::size_t>(o)] + " and " +
                         disjoint[s] + " share vertex " + std::to_string(v));
      }
      o = static_cast<int>(s);
    }
  }
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int u : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(u)] == -1) {
          comp[static_cast<std::size_t>(u)] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw DomainError("connectivity is undefined for the empty graph");
  return connected_components(g).size() == 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v)) {
        auto& su = side[static_cast<std::size_t>(u)];
        if (su == -1) {
          su = 1 - side[static_cast<std::size_t>(v)];
          stack.push_back(u);
        } else if (su == side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::optional<std::pair<int, int>> complete_bipartite_sizes(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return std::nullopt;
  auto side = bipartition(g);
  if (!side) return std::nullopt;
  const auto a = static_cast<std::size_t>(std::count(side->begin(), side->end(), 0));
  const auto b = static_cast<std::size_t>(g.order()) - a;
  if (g.edge_count() != a * b) return std::nullopt;
  return std::pair{static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))};
}

bool is_complete_bipartite(const Graph& g) { return complete_bipartite_sizes(g).has_value(); }

LabeledGraph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw GraphError("complete_bipartite needs both part sizes >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
  }
  LabeledGraph out{Graph::from_edge_list(p + q, edges), {}};
  auto& a = out.labels.sets["A"];
  auto& b = out.labels.sets["B"];
  for (int i = 0; i < p; ++i) a.push_back(i);
  for (int j = 0; j < q; ++j) b.push_back(p + j);
  return out;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

std::string to_dot(const Graph& g, const VertexLabeling* labels) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (labels) {
      if (auto name = labels->name_of(v)) out << " [label=\"" << *name << "\"]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace domchrom
