#include "domchrom/invariants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "domchrom/graph6.hpp"

namespace domchrom {

std::vector<int> Coloring::color_vector(int n) const {
  std::vector<int> colors(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < size(); ++c) {
    for (int v : mask_to_vector(classes[static_cast<std::size_t>(c)])) {
      if (v < n) colors[static_cast<std::size_t>(v)] = c;
    }
  }
  return colors;
}

Coloring Coloring::canonical() const {
  Coloring out = *this;
  std::sort(out.classes.begin(), out.classes.end(), [](VertexMask a, VertexMask b) {
    if (a == 0 || b == 0) return a != 0 && b == 0;
    return lowest_vertex(a) < lowest_vertex(b);
  });
  return out;
}

Coloring Coloring::from_color_vector(std::span<const int> colors) {
  Coloring out;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    const int c = colors[v];
    if (c < 0) continue;
    if (static_cast<std::size_t>(c) >= out.classes.size()) {
      out.classes.resize(static_cast<std::size_t>(c) + 1, 0);
    }
    out.classes[static_cast<std::size_t>(c)] |= bit(static_cast<int>(v));
  }
  return out;
}

bool is_dominating(const Graph& g, VertexMask d) {
  require_mask_order(g);
  VertexMask covered = 0;
  for (VertexMask m = d; m != 0; m &= m - 1) covered |= g.closed_row(lowest_vertex(m));
  return (covered & g.all_vertices()) == g.all_vertices();
}

bool is_total_dominating(const Graph& g, VertexMask d) {
  require_mask_order(g);
  VertexMask covered = 0;
  for (VertexMask m = d; m != 0; m &= m - 1) covered |= g.row(lowest_vertex(m));
  return covered == g.all_vertices();
}

bool is_partition(const Graph& g, const Coloring& c) {
  require_mask_order(g);
  VertexMask seen = 0;
  for (VertexMask cls : c.classes) {
    if (cls == 0 || (cls & seen) || (cls & ~g.all_vertices())) return false;
    seen |= cls;
  }
  return seen == g.all_vertices();
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (!is_partition(g, c)) return false;
  for (VertexMask cls : c.classes) {
    for (VertexMask m = cls; m != 0; m &= m - 1) {
      if (g.row(lowest_vertex(m)) & cls) return false;
    }
  }
  return true;
}

namespace {

void check_class_index(const Graph& g, int v, const Coloring& c, int i) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (i < 0 || i >= c.size()) throw std::out_of_range("class " + std::to_string(i) + " out of range");
}

}  // namespace

bool adjacent_to_class(const Graph& g, int v, const Coloring& c, int i) {
  require_mask_order(g);
  check_class_index(g, v, c, i);
  const VertexMask cls = c.classes[static_cast<std::size_t>(i)];
  return cls != 0 && (cls & ~g.row(v)) == 0;
}

bool dominates_class(const Graph& g, int v, const Coloring& c, int i) {
  if (adjacent_to_class(g, v, c, i)) return true;
  return c.classes[static_cast<std::size_t>(i)] == bit(v);
}

bool is_dominator_coloring(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return false;
  for (int v = 0; v < g.order(); ++v) {
    bool any = false;
    for (int i = 0; i < c.size() && !any; ++i) any = dominates_class(g, v, c, i);
    if (!any) return false;
  }
  return true;
}

bool is_dominated_coloring(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) return false;
  for (int i = 0; i < c.size(); ++i) {
    bool any = false;
    for (int v = 0; v < g.order() && !any; ++v) any = adjacent_to_class(g, v, c, i);
    if (!any) return false;
  }
  return true;
}

namespace {

void require_nonempty(const Graph& g) {
  if (g.order() == 0) throw DomainError("invariant undefined for the empty graph");
  require_mask_order(g);
}

void require_connected(const Graph& g, const char* what) {
  require_nonempty(g);
  if (!is_connected(g)) throw DomainError(std::string(what) + " requires a connected graph");
}

// Minimum hitting set over the family {hit_by[u] : u in V}. For gamma the
// family is the closed neighbourhoods, for gamma_t the open ones; since both
// are symmetric, the vertices hit by w are the same set as hit_by[w].
class HittingSetSolver {
 public:
  HittingSetSolver(const Graph& g, bool total) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      hit_by_[static_cast<std::size_t>(v)] = total ? g.row(v) : g.closed_row(v);
    }
  }

  int minimum() {
    seed_with_greedy();
    branch(0, prefix_mask(n_), prefix_mask(n_), 0);
    return best_size_;
  }

  // Lexicographically least hitting set of the given (optimal) size.
  VertexMask least_of_size(int size) {
    VertexMask out = 0;
    if (!lex_search(0, 0, prefix_mask(n_), size, out)) {
      throw std::logic_error("no hitting set of the claimed optimal size");
    }
    return out;
  }

 private:
  VertexMask covers(int w) const { return hit_by_[static_cast<std::size_t>(w)]; }

  void seed_with_greedy() {
    VertexMask unhit = prefix_mask(n_);
    VertexMask chosen = 0;
    while (unhit) {
      int best = -1;
      int best_gain = -1;
      for (int w = 0; w < n_; ++w) {
        const int gain = mask_size(covers(w) & unhit);
        if (gain > best_gain) {
          best_gain = gain;
          best = w;
        }
      }
      chosen |= bit(best);
      unhit &= ~covers(best);
    }
    best_size_ = mask_size(chosen);
    best_set_ = chosen;
  }

  int max_gain(VertexMask unhit, VertexMask allowed) const {
    int best = 0;
    for (VertexMask m = allowed; m != 0; m &= m - 1) {
      best = std::max(best, mask_size(covers(lowest_vertex(m)) & unhit));
    }
    return best;
  }

  void branch(VertexMask chosen, VertexMask unhit, VertexMask allowed, int size) {
    if (unhit == 0) {
      if (size < best_size_) {
        best_size_ = size;
        best_set_ = chosen;
      }
      return;
    }
    if (size + 1 >= best_size_) return;
    const int gain = max_gain(unhit, allowed);
    if (gain == 0) return;
    if (size + (mask_size(unhit) + gain - 1) / gain >= best_size_) return;

    int pick = -1;
    int fewest = n_ + 1;
    for (VertexMask m = unhit; m != 0; m &= m - 1) {
      const int u = lowest_vertex(m);
      const int options = mask_size(hit_by_[static_cast<std::size_t>(u)] & allowed);
      if (options < fewest) {
        fewest = options;
        pick = u;
      }
    }
    if (fewest == 0) return;
    for (VertexMask m = hit_by_[static_cast<std::size_t>(pick)] & allowed; m != 0; m &= m - 1) {
      const int w = lowest_vertex(m);
      branch(chosen | bit(w), unhit & ~covers(w), allowed, size + 1);
      allowed &= ~bit(w);
    }
  }

  bool lex_search(int i, VertexMask chosen, VertexMask unhit, int budget, VertexMask& out) const {
    if (unhit == 0) {
      out = chosen;
      return true;
    }
    if (budget == 0 || i >= n_) return false;
    const VertexMask remaining = prefix_mask(n_) & ~prefix_mask(i);
    for (VertexMask m = unhit; m != 0; m &= m - 1) {
      if ((hit_by_[static_cast<std::size_t>(lowest_vertex(m))] & remaining) == 0) return false;
    }
    const int gain = max_gain(unhit, remaining);
    if (gain * budget < mask_size(unhit)) return false;
    if (covers(i) & unhit) {
      if (lex_search(i + 1, chosen | bit(i), unhit & ~covers(i), budget - 1, out)) return true;
    }
    return lex_search(i + 1, chosen, unhit, budget, out);
  }

  int n_;
  std::array<VertexMask, kMaskOrder> hit_by_{};
  int best_size_ = 0;
  VertexMask best_set_ = 0;
};

void require_no_isolated(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.row(v) == 0) {
      throw DomainError("total domination undefined: vertex " + std::to_string(v) +
                        " is isolated");
    }
  }
}

enum class ColoringMode { proper, dominator, dominated };

// Backtracking over vertices in index order. Colours are numbered by first
// appearance (vertex v may only open colour `used_`), so every partition is
// produced once and solutions come out in lexicographic colour-vector order.
class ColoringSearch {
 public:
  using Visitor = std::function<bool(std::span<const int>)>;

  ColoringSearch(const Graph& g, int k, ColoringMode mode, bool exact_k)
      : n_(g.order()), k_(k), mode_(mode), exact_k_(exact_k) {
    for (int v = 0; v < n_; ++v) rows_[static_cast<std::size_t>(v)] = g.row(v);
    color_.assign(static_cast<std::size_t>(n_), -1);
  }

  // Returns true if the visitor asked to stop.
  bool run(const Visitor& visit) {
    visit_ = &visit;
    used_ = 0;
    return descend(0);
  }

 private:
  VertexMask row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

  bool descend(int v) {
    if (v == n_) {
      if (exact_k_ && used_ < k_) return false;
      if (!complete_ok()) return false;
      return !(*visit_)(color_);
    }
    if (exact_k_ && used_ + (n_ - v) < k_) return false;
    const int limit = std::min(used_, k_ - 1);
    for (int c = 0; c <= limit; ++c) {
      if (c < used_ && (row(v) & cls_[static_cast<std::size_t>(c)])) continue;
      const VertexMask saved_cls = cls_[static_cast<std::size_t>(c)];
      const VertexMask saved_common = common_[static_cast<std::size_t>(c)];
      const bool opened = (c == used_);
      cls_[static_cast<std::size_t>(c)] |= bit(v);
      common_[static_cast<std::size_t>(c)] = opened ? row(v) : (saved_common & row(v));
      if (opened) ++used_;
      color_[static_cast<std::size_t>(v)] = c;
      if (feasible(v, c) && descend(v + 1)) return true;
      color_[static_cast<std::size_t>(v)] = -1;
      if (opened) --used_;
      cls_[static_cast<std::size_t>(c)] = saved_cls;
      common_[static_cast<std::size_t>(c)] = saved_common;
    }
    return false;
  }

  bool feasible(int v, int c) const {
    const VertexMask unassigned = prefix_mask(n_) & ~prefix_mask(v + 1);
    if (used_ == k_) {
      for (VertexMask m = row(v) & unassigned; m != 0; m &= m - 1) {
        const int u = lowest_vertex(m);
        bool open = false;
        for (int d = 0; d < used_ && !open; ++d) open = (row(u) & cls_[static_cast<std::size_t>(d)]) == 0;
        if (!open) return false;
      }
    }
    switch (mode_) {
      case ColoringMode::proper:
        return true;
      case ColoringMode::dominated:
        return common_[static_cast<std::size_t>(c)] != 0;
      case ColoringMode::dominator: {
        const VertexMask assigned = prefix_mask(v + 1);
        const VertexMask stuck = assigned & ~dominators();
        if (stuck == 0) return true;
        if (used_ == k_) return false;
        for (VertexMask m = stuck; m != 0; m &= m - 1) {
          if ((row(lowest_vertex(m)) & unassigned) == 0) return false;
        }
        return true;
      }
    }
    return true;
  }

  // Vertices that currently dominate at least one open class.
  VertexMask dominators() const {
    VertexMask out = 0;
    for (int d = 0; d < used_; ++d) {
      const VertexMask cls = cls_[static_cast<std::size_t>(d)];
      out |= common_[static_cast<std::size_t>(d)];
      if ((cls & (cls - 1)) == 0) out |= cls;
    }
    return out;
  }

  bool complete_ok() const {
    switch (mode_) {
      case ColoringMode::proper:
        return true;
      case ColoringMode::dominated:
        for (int d = 0; d < used_; ++d) {
          if (common_[static_cast<std::size_t>(d)] == 0) return false;
        }
        return true;
      case ColoringMode::dominator:
        return dominators() == prefix_mask(n_);
    }
    return true;
  }

  int n_;
  int k_;
  ColoringMode mode_;
  bool exact_k_;
  std::array<VertexMask, kMaskOrder> rows_{};
  std::array<VertexMask, kMaskOrder> cls_{};
  std::array<VertexMask, kMaskOrder> common_{};
  std::vector<int> color_;
  int used_ = 0;
  const Visitor* visit_ = nullptr;
};

std::optional<Coloring> first_coloring(const Graph& g, int k, ColoringMode mode) {
  std::optional<Coloring> found;
  ColoringSearch search(g, k, mode, false);
  search.run([&](std::span<const int> colors) {
    found = Coloring::from_color_vector(colors);
    return false;
  });
  return found;
}

ColoringResult smallest_coloring(const Graph& g, int lower, ColoringMode mode) {
  for (int k = std::max(lower, 1); k <= g.order(); ++k) {
    if (auto c = first_coloring(g, k, mode)) return {k, *c};
  }
  throw std::logic_error("no colouring with at most n classes");
}

int coloring_lower_bound(const Graph& g) { return clique_number(g); }

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}
  int run() {
    expand(0, g_.all_vertices());
    return best_;
  }

 private:
  void expand(int size, VertexMask candidates) {
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    while (candidates) {
      if (size + mask_size(candidates) <= best_) return;
      const int v = lowest_vertex(candidates);
      expand(size + 1, candidates & g_.row(v));
      candidates &= ~bit(v);
    }
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace

int clique_number(const Graph& g) {
  require_mask_order(g);
  return CliqueSearch(g).run();
}

DominationResult domination_number(const Graph& g) {
  require_nonempty(g);
  HittingSetSolver solver(g, false);
  const int gamma = solver.minimum();
  return {gamma, {solver.least_of_size(gamma), DominationKind::plain}};
}

DominationResult total_domination_number(const Graph& g) {
  require_nonempty(g);
  require_no_isolated(g);
  HittingSetSolver solver(g, true);
  const int gamma_t = solver.minimum();
  return {gamma_t, {solver.least_of_size(gamma_t), DominationKind::total}};
}

ColoringResult chromatic_number(const Graph& g) {
  require_nonempty(g);
  return smallest_coloring(g, coloring_lower_bound(g), ColoringMode::proper);
}

ColoringResult dominator_chromatic_number(const Graph& g) {
  require_connected(g, "dominator chromatic number");
  return smallest_coloring(g, coloring_lower_bound(g), ColoringMode::dominator);
}

ColoringResult dominated_chromatic_number(const Graph& g) {
  require_connected(g, "dominated chromatic number");
  if (g.order() == 1) {
    throw DomainError("dominated chromatic number undefined for K_1: no vertex can dominate its class");
  }
  return smallest_coloring(g, coloring_lower_bound(g), ColoringMode::dominated);
}

InvariantReport classify_dk(const Graph& g) {
  require_connected(g, "classify_dk");
  InvariantReport r;
  r.n = g.order();
  r.edge_count = g.edge_count();
  r.graph6 = to_graph6(g);

  auto gamma = domination_number(g);
  r.gamma = gamma.value;
  r.gamma_witness = gamma.witness;
  auto chi = chromatic_number(g);
  r.chi = chi.value;
  r.chi_witness = chi.witness;
  auto chi_d = smallest_coloring(g, r.chi, ColoringMode::dominator);
  r.chi_d = chi_d.value;
  r.chi_d_witness = chi_d.witness;
  if (g.order() > 1) {
    auto gamma_t = total_domination_number(g);
    r.gamma_t = gamma_t.value;
    r.gamma_t_witness = gamma_t.witness;
    auto chi_dom = smallest_coloring(g, r.chi, ColoringMode::dominated);
    r.chi_dom = chi_dom.value;
    r.chi_dom_witness = chi_dom.witness;
  }
  if (r.gamma == r.chi && r.chi == r.chi_d) r.dk = r.gamma;
  check_sandwich(r);
  return r;
}

std::optional<int> dk_of(const Graph& g) {
  require_connected(g, "dk_of");
  const int chi = smallest_coloring(g, coloring_lower_bound(g), ColoringMode::proper).value;
  HittingSetSolver solver(g, false);
  if (solver.minimum() != chi) return std::nullopt;
  if (!first_coloring(g, chi, ColoringMode::dominator)) return std::nullopt;
  return chi;
}

void check_sandwich(const InvariantReport& r) {
  if (r.gamma_t && r.gamma > *r.gamma_t) throw std::logic_error("gamma > gamma_t");
  if (r.chi > r.chi_d) throw std::logic_error("chi > chi_d");
  if (r.chi_dom && r.chi > *r.chi_dom) throw std::logic_error("chi > chi_dom");
}

void enumerate_optimal_dominator_colorings(const Graph& g, int k,
                                           const std::function<bool(const Coloring&)>& visit) {
  const int chi_d = dominator_chromatic_number(g).value;
  if (k != chi_d) {
    throw DomainError("k = " + std::to_string(k) + " is not chi_d = " + std::to_string(chi_d));
  }
  ColoringSearch search(g, k, ColoringMode::dominator, true);
  search.run([&](std::span<const int> colors) { return visit(Coloring::from_color_vector(colors)); });
}

std::vector<Coloring> optimal_dominator_colorings(const Graph& g, int k) {
  std::vector<Coloring> out;
  enumerate_optimal_dominator_colorings(g, k, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace domchrom
