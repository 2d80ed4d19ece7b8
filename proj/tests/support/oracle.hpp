#pragma once

// Brute-force reference implementations. Nothing here calls the solvers,
// canonical forms or enumerators under test; only Graph adjacency is used.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "domchrom/graph.hpp"

namespace oracle {

using domchrom::Graph;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

inline bool connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v) && !seen[v]) seen[v] = 1, stack.push_back(v);
  }
  return std::count(seen.begin(), seen.end(), 1) == n;
}

// Smallest subset size whose (closed or open) neighbourhood union covers V.
inline std::optional<int> domination(const Graph& g, bool total) {
  const int n = g.order();
  int best = -1;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (best >= 0 && size >= best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      bool hit = !total && ((s >> v) & 1u);
      for (int u = 0; u < n && !hit; ++u) hit = ((s >> u) & 1u) && g.adjacent(u, v);
      ok = hit;
    }
    if (ok) best = size;
  }
  if (best < 0) return std::nullopt;
  return best;
}

// Every set partition as a restricted-growth colour vector.
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> c(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      visit(c, blocks);
      return;
    }
    for (int x = 0; x <= blocks; ++x) {
      c[i] = x;
      rec(i + 1, std::max(blocks, x + 1));
    }
  };
  rec(0, 0);
}

inline bool proper(const Graph& g, const std::vector<int>& c) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) && c[u] == c[v]) return false;
  return true;
}

// v adjacent to every member of block b, or block b is exactly {v}.
inline bool dominates(const Graph& g, const std::vector<int>& c, int v, int b, bool own_singleton = true) {
  bool all_adjacent = true;
  bool only_v = true;
  for (int u = 0; u < g.order(); ++u) {
    if (c[u] != b) continue;
    if (u != v) only_v = false;
    if (!g.adjacent(u, v)) all_adjacent = false;
  }
  return all_adjacent || (own_singleton && only_v);
}

inline bool dominator(const Graph& g, const std::vector<int>& c, int blocks) {
  for (int v = 0; v < g.order(); ++v) {
    bool any = false;
    for (int b = 0; b < blocks && !any; ++b) any = dominates(g, c, v, b);
    if (!any) return false;
  }
  return true;
}

inline bool dominated(const Graph& g, const std::vector<int>& c, int blocks) {
  for (int b = 0; b < blocks; ++b) {
    bool any = false;
    for (int v = 0; v < g.order() && !any; ++v) any = dominates(g, c, v, b, false);
    if (!any) return false;
  }
  return true;
}

struct Values {
  int gamma = 0;
  std::optional<int> gamma_t;
  int chi = 0;
  int chi_d = 0;
  std::optional<int> chi_dom;
};

inline Values values(const Graph& g) {
  const int n = g.order();
  Values out;
  out.gamma = *domination(g, false);
  out.gamma_t = domination(g, true);
  out.chi = out.chi_d = n + 1;
  int dom = n + 1;
  for_each_partition(n, [&](const std::vector<int>& c, int blocks) {
    if (!proper(g, c)) return;
    out.chi = std::min(out.chi, blocks);
    if (blocks < out.chi_d && dominator(g, c, blocks)) out.chi_d = blocks;
    if (blocks < dom && dominated(g, c, blocks)) dom = blocks;
  });
  if (dom <= n) out.chi_dom = dom;
  return out;
}

// Dominator colourings with exactly k blocks, as restricted-growth vectors.
inline std::vector<std::vector<int>> dominator_colorings(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  for_each_partition(g.order(), [&](const std::vector<int>& c, int blocks) {
    if (blocks == k && proper(g, c) && dominator(g, c, blocks)) out.push_back(c);
  });
  return out;
}

// Least upper-triangle bit string (graph6 column order) over all n! labellings.
inline std::string canonical_bits(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) s += g.adjacent(p[i], p[j]) ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(n) + ":" + best;
}

inline Graph from_bits(int n, std::uint64_t bits) {
  std::vector<std::pair<int, int>> edges;
  int idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if ((bits >> idx) & 1u) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

// Isomorphism classes of all labelled graphs on n vertices, keyed by canonical_bits.
inline std::set<std::string> classes(int n, bool connected_only) {
  std::set<std::string> out;
  const int m = n * (n - 1) / 2;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    Graph g = from_bits(n, bits);
    if (connected_only && !connected(g)) continue;
    out.insert(canonical_bits(g));
  }
  return out;
}

// Edge set is exactly S x (V - S) for some proper non-empty S.
inline std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g) {
  const int n = g.order();
  for (std::uint32_t s = 1; s + 1 < (1u << n); ++s) {
    if (s & 1u) continue;  // fix vertex 0 outside S
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == (((s >> u) & 1u) != ((s >> v) & 1u));
    if (ok) {
      const int a = __builtin_popcount(s);
      return std::make_pair(std::min(a, n - a), std::max(a, n - a));
    }
  }
  return std::nullopt;
}

inline Graph random_connected(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (edge(rng)) edges.emplace_back(u, v);
    Graph g = Graph::from_edge_list(n, edges);
    if (connected(g)) return g;
  }
}

}  // namespace oracle
