#include "domchrom/structure.hpp"

#include <algorithm>
#include <numeric>

namespace domchrom {

std::optional<ChainWitness> find_chain(const Graph& g, const Coloring& c) {
  if (c.size() < 3) throw DomainError("a chain needs at least three colour classes, got " + std::to_string(c.size()));
  if (!is_proper(g, c)) throw DomainError("find_chain needs a proper colouring");
  const int k = c.size();
  // dominator[i][j]: smallest vertex of V_i adjacent to all of V_j, or -1.
  std::vector<std::vector<int>> dominator(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), -1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (VertexMask m = c.classes[static_cast<std::size_t>(i)]; m; m &= m - 1) {
        const int v = lowest_vertex(m);
        if (adjacent_to_class(g, v, c, j)) {
          dominator[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
          break;
        }
      }
    }
  }
  auto d = [&](int i, int j) { return dominator[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int l = 0; l < k; ++l) {
        if (i == j || j == l || i == l) continue;
        if (d(i, j) >= 0 && d(j, l) >= 0 && d(l, i) >= 0) {
          return ChainWitness{{i, j, l}, {d(i, j), d(j, l), d(l, i)}};
        }
      }
    }
  }
  return std::nullopt;
}

std::string to_string(Theorem1Failure::Kind kind) {
  switch (kind) {
    case Theorem1Failure::Kind::class_not_dominated:
      return "class_not_dominated";
    case Theorem1Failure::Kind::vertex_dominates_none:
      return "vertex_dominates_none";
    case Theorem1Failure::Kind::vertex_dominates_several:
      return "vertex_dominates_several";
  }
  return "unknown";
}

Theorem1Report check_theorem1(const Graph& g) { return check_theorem1(g, classify_dk(g)); }

Theorem1Report check_theorem1(const Graph& g, const InvariantReport& report) {
  if (!report.dk) {
    throw NotDkError("not a D(k) graph: gamma=" + std::to_string(report.gamma) +
                     ", chi=" + std::to_string(report.chi) + ", chi_d=" + std::to_string(report.chi_d));
  }
  const int n = g.order();
  Theorem1Report out;
  out.k = *report.dk;
  out.min_dominated.assign(static_cast<std::size_t>(n), n + 1);
  out.max_dominated.assign(static_cast<std::size_t>(n), 0);

  auto record = [&](const Coloring& c, int index, Theorem1Failure::Kind kind) {
    ++out.failures_total;
    if (out.counterexamples.size() < Theorem1Report::kMaxCounterexamples) {
      out.counterexamples.push_back({c, index, kind});
    }
  };

  enumerate_optimal_dominator_colorings(g, out.k, [&](const Coloring& c) {
    ++out.colorings_checked;
    for (int i = 0; i < c.size(); ++i) {
      bool dominated = false;
      for (int v = 0; v < n && !dominated; ++v) dominated = adjacent_to_class(g, v, c, i);
      if (!dominated) {
        out.all_classes_dominated = false;
        record(c, i, Theorem1Failure::Kind::class_not_dominated);
      }
    }
    for (int v = 0; v < n; ++v) {
      int count = 0;
      int adjacency_count = 0;
      for (int i = 0; i < c.size(); ++i) {
        count += dominates_class(g, v, c, i) ? 1 : 0;
        adjacency_count += adjacent_to_class(g, v, c, i) ? 1 : 0;
      }
      auto& lo = out.min_dominated[static_cast<std::size_t>(v)];
      auto& hi = out.max_dominated[static_cast<std::size_t>(v)];
      lo = std::min(lo, count);
      hi = std::max(hi, count);
      if (count == 1 && adjacency_count == 0) ++out.own_singleton_only;
      if (count != 1) {
        out.every_vertex_dominates_exactly_one = false;
        record(c, v,
               count == 0 ? Theorem1Failure::Kind::vertex_dominates_none
                          : Theorem1Failure::Kind::vertex_dominates_several);
      }
    }
    return true;
  });
  return out;
}

std::optional<std::vector<int>> find_total_dominating_transversal(const Graph& g, const Coloring& c) {
  require_mask_order(g);
  if (!is_proper(g, c)) throw DomainError("transversal search needs a proper colouring");
  const int k = c.size();
  const VertexMask all = g.all_vertices();
  std::vector<int> chosen(static_cast<std::size_t>(k), -1);

  // Every vertex must keep a neighbour among chosen vertices or the classes
  // still to be decided.
  auto viable = [&](int decided, VertexMask picked) {
    VertexMask pool = picked;
    for (int i = decided; i < k; ++i) pool |= c.classes[static_cast<std::size_t>(i)];
    for (VertexMask m = all; m; m &= m - 1) {
      if ((g.row(lowest_vertex(m)) & pool) == 0) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int i, VertexMask picked) -> bool {
    if (i == k) return is_total_dominating(g, picked);
    for (VertexMask m = c.classes[static_cast<std::size_t>(i)]; m; m &= m - 1) {
      const int v = lowest_vertex(m);
      chosen[static_cast<std::size_t>(i)] = v;
      if (viable(i + 1, picked | bit(v)) && self(self, i + 1, picked | bit(v))) return true;
    }
    return false;
  };
  if (!search(search, 0, 0)) return std::nullopt;
  return chosen;
}

namespace {

void check_deadline(const Deadline& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) {
    throw DeadlineExceeded("D(3) membership search exceeded its deadline");
  }
}

// Rebuilds the blueprint implied by a role assignment and accepts it if the
// build reproduces g exactly and the blueprint is valid.
std::optional<D3Membership> try_roles(const Graph& g, int x3, const std::vector<int>& v1,
                                      const std::vector<int>& v2) {
  D3Membership m;
  auto& bp = m.blueprint;
  bp.a = static_cast<int>(v1.size());
  bp.b = static_cast<int>(v2.size());
  const int x1 = v1[0];
  const int y3 = v2[1];
  for (int j = 0; j < bp.b; ++j) {
    if (j != 1 && g.adjacent(x1, v2[static_cast<std::size_t>(j)])) bp.rule2_set.push_back(j);
  }
  for (int i = 1; i < bp.a; ++i) {
    if (g.adjacent(y3, v1[static_cast<std::size_t>(i)])) bp.rule3_set.push_back(i);
  }
  for (int i = 2; i < bp.a; ++i) bp.v1_to_v3.push_back(g.adjacent(v1[static_cast<std::size_t>(i)], x3));
  for (int j = 2; j < bp.b; ++j) bp.v2_to_v3.push_back(g.adjacent(v2[static_cast<std::size_t>(j)], x3));

  m.vertex_of = v1;
  m.vertex_of.insert(m.vertex_of.end(), v2.begin(), v2.end());
  m.vertex_of.push_back(x3);
  const Graph built = build_d3_unchecked(bp);
  for (int u = 0; u < built.order(); ++u) {
    for (int w = u + 1; w < built.order(); ++w) {
      if (built.adjacent(u, w) != g.adjacent(m.vertex_of[static_cast<std::size_t>(u)], m.vertex_of[static_cast<std::size_t>(w)])) {
        return std::nullopt;
      }
    }
  }
  if (!validate_blueprint(bp).valid) return std::nullopt;
  return m;
}

std::vector<int> ordered(VertexMask m, std::initializer_list<int> front) {
  std::vector<int> out(front);
  for (int v : front) m &= ~bit(v);
  for (int v : mask_to_vector(m)) out.push_back(v);
  return out;
}

std::optional<D3Membership> search_split(const Graph& g, int x3, VertexMask side1, VertexMask side2) {
  const VertexMask nx3 = g.row(x3);
  auto dominates = [&](int v, VertexMask cls) { return (cls & ~g.row(v)) == 0; };
  for (VertexMask a = side1 & nx3; a; a &= a - 1) {
    const int x1 = lowest_vertex(a);
    for (VertexMask b = side1 & ~nx3 & ~bit(x1); b; b &= b - 1) {
      const int y2 = lowest_vertex(b);
      if (!dominates(y2, side2)) continue;
      for (VertexMask c = side2 & ~nx3; c; c &= c - 1) {
        const int y1 = lowest_vertex(c);
        if (!dominates(y1, side1)) continue;
        for (VertexMask d = side2 & nx3 & ~g.row(x1); d; d &= d - 1) {
          const int y3 = lowest_vertex(d);
          auto found = try_roles(g, x3, ordered(side1, {x1, y2}), ordered(side2, {y1, y3}));
          if (found) return found;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<D3Membership> is_in_class_d3(const Graph& g, Deadline deadline) {
  require_mask_order(g);
  const int n = g.order();
  if (n < 7 || !is_connected(g)) return std::nullopt;

  std::vector<int> candidates(static_cast<std::size_t>(n));
  std::iota(candidates.begin(), candidates.end(), 0);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int u, int v) { return g.degree(u) < g.degree(v); });

  for (int x3 : candidates) {
    check_deadline(deadline);
    // x3 keeps two non-neighbours on each side.
    if (g.degree(x3) > n - 5) continue;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
      if (v != x3) rest.push_back(v);
    }
    const Graph h = g.induced(rest);
    auto side = bipartition(h);
    if (!side) continue;
    const auto components = connected_components(h);
    const std::size_t c = components.size();
    if (c > 20) continue;
    // Each component's 2-colouring can be flipped independently.
    std::vector<VertexMask> base0(c, 0), base1(c, 0);
    for (std::size_t i = 0; i < c; ++i) {
      for (int hv : components[i]) {
        const int v = rest[static_cast<std::size_t>(hv)];
        ((*side)[static_cast<std::size_t>(hv)] == 0 ? base0[i] : base1[i]) |= bit(v);
      }
    }
    for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << c); ++flips) {
      check_deadline(deadline);
      VertexMask side1 = 0;
      VertexMask side2 = 0;
      for (std::size_t i = 0; i < c; ++i) {
        const bool flip = (flips >> i) & 1U;
        side1 |= flip ? base1[i] : base0[i];
        side2 |= flip ? base0[i] : base1[i];
      }
      if (mask_size(side1) < 3 || mask_size(side2) < 3) continue;
      if (auto found = search_split(g, x3, side1, side2)) return found;
    }
  }
  return std::nullopt;
}

}  // namespace domchrom
