#include "domchrom/constructions.hpp"

#include <algorithm>
#include <set>

namespace domchrom {
namespace {

class EdgeSet {
 public:
  void add(int u, int v) { edges_.emplace_back(u, v); }
  void join(const std::vector<int>& left, const std::vector<int>& right) {
    for (int u : left) {
      for (int v : right) add(u, v);
    }
  }
  void clique(const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) add(vs[i], vs[j]);
    }
  }
  Graph build(int n) const { return Graph::from_edge_list(n, edges_); }

 private:
  std::vector<std::pair<int, int>> edges_;
};

std::string name(char role, int i) { return std::string(1, role) + std::to_string(i); }

// Allocates class P_i's vertices in build order and records their labels.
class LabelAllocator {
 public:
  explicit LabelAllocator(VertexLabeling& labels) : labels_(labels) {}

  int add(const std::string& vertex_name, const std::string& role_set,
          const std::string& class_name) {
    const int v = next_++;
    labels_.vertices[vertex_name] = v;
    labels_.sets[role_set].push_back(v);
    labels_.sets[class_name].push_back(v);
    return v;
  }
  int count() const { return next_; }

 private:
  VertexLabeling& labels_;
  int next_ = 0;
};

}  // namespace

LabeledGraph build_d_odd(const DOddSpec& spec) {
  const int k = spec.k;
  if (k % 2 == 0) throw ConstructionError("odd construction: k must be odd, got " + std::to_string(k));
  if (k < 3) throw ConstructionError("odd construction: k must be >= 3, got " + std::to_string(k));
  if (spec.n < 4 * k - 3) {
    throw ConstructionError("odd construction: n must be >= 4k-3 = " + std::to_string(4 * k - 3) +
                            ", got " + std::to_string(spec.n));
  }
  const int t = spec.n - (4 * k - 3);

  LabeledGraph out;
  auto& labels = out.labels;
  LabelAllocator alloc(labels);
  for (const char* role : {"X", "Y", "Z", "W", "U"}) labels.sets[role];
  for (int i = 1; i < k; ++i) {
    const std::string cls = "P" + std::to_string(i);
    alloc.add(name('x', i), "X", cls);
    alloc.add(name('y', i), "Y", cls);
    alloc.add(name('z', i), "Z", cls);
    alloc.add(name('w', i), "W", cls);
    if (i == 1) {
      for (int j = 1; j <= t; ++j) alloc.add(name('u', j), "U", cls);
    }
  }
  const int apex = alloc.count();
  labels.vertices[name('x', k)] = apex;
  labels.sets["P" + std::to_string(k)] = {apex};

  auto at = [&](char role, int i) { return labels.at(name(role, i)); };
  EdgeSet edges;
  for (int i = 1; i <= (k - 1) / 2; ++i) {
    const int lo = 2 * i - 1;
    const int hi = 2 * i;
    edges.join({at('x', hi), at('y', hi), at('z', hi)}, {at('x', lo), at('y', lo), at('z', lo)});
    edges.join({at('w', lo)}, {at('y', hi), at('z', hi)});
    edges.join({at('w', hi)}, {at('y', lo), at('z', lo)});
  }
  std::vector<int> clique = labels.set("X");
  clique.push_back(apex);
  edges.clique(clique);
  edges.join({apex}, labels.set("W"));
  edges.join({apex}, labels.set("U"));
  edges.join(labels.set("U"), {at('y', 2), at('z', 2)});

  out.graph = edges.build(apex + 1);
  std::vector<std::string> classes;
  for (int i = 1; i <= k; ++i) classes.push_back("P" + std::to_string(i));
  labels.validate(out.graph.order(), classes);
  return out;
}

LabeledGraph build_d_even(const DEvenSpec& spec) {
  const int k = spec.k;
  if (k % 2 != 0) throw ConstructionError("even construction: k must be even, got " + std::to_string(k));
  if (k < 4) throw ConstructionError("even construction: k must be >= 4, got " + std::to_string(k));
  if (spec.n < 3 * k) {
    throw ConstructionError("even construction: n must be >= 3k = " + std::to_string(3 * k) +
                            ", got " + std::to_string(spec.n));
  }
  const int t = spec.n - 3 * k;

  LabeledGraph out;
  auto& labels = out.labels;
  LabelAllocator alloc(labels);
  for (const char* role : {"X", "Y", "Z", "U"}) labels.sets[role];
  for (int i = 1; i <= k; ++i) {
    const std::string cls = "P" + std::to_string(i);
    alloc.add(name('x', i), "X", cls);
    alloc.add(name('y', i), "Y", cls);
    alloc.add(name('z', i), "Z", cls);
    if (i == 1) {
      for (int j = 1; j <= t; ++j) alloc.add(name('u', j), "U", cls);
    }
  }

  EdgeSet edges;
  for (int i = 1; i <= k / 2; ++i) {
    edges.join(labels.set("P" + std::to_string(2 * i)), labels.set("P" + std::to_string(2 * i - 1)));
  }
  edges.clique(labels.set("X"));

  out.graph = edges.build(alloc.count());
  std::vector<std::string> classes;
  for (int i = 1; i <= k; ++i) classes.push_back("P" + std::to_string(i));
  labels.validate(out.graph.order(), classes);
  return out;
}

namespace {

std::vector<RuleViolation> domain_violations(const D3Blueprint& bp) {
  std::vector<RuleViolation> out;
  auto fail = [&](std::string msg) { out.push_back({0, std::move(msg), std::nullopt}); };
  if (bp.a < 3) fail("a >= 3 required, got a = " + std::to_string(bp.a));
  if (bp.b < 3) fail("b >= 3 required, got b = " + std::to_string(bp.b));
  if (!out.empty()) return out;
  std::set<int> seen;
  for (int j : bp.rule2_set) {
    if (j < 0 || j >= bp.b || j == 1) fail("rule2_set entry " + std::to_string(j) + " not in V2 - {y3}");
    if (!seen.insert(j).second) fail("rule2_set repeats " + std::to_string(j));
  }
  seen.clear();
  for (int i : bp.rule3_set) {
    if (i < 1 || i >= bp.a) fail("rule3_set entry " + std::to_string(i) + " not in V1 - {x1}");
    if (!seen.insert(i).second) fail("rule3_set repeats " + std::to_string(i));
  }
  if (static_cast<int>(bp.v1_to_v3.size()) != bp.a - 2) fail("v1_to_v3 must have a - 2 entries");
  if (static_cast<int>(bp.v2_to_v3.size()) != bp.b - 2) fail("v2_to_v3 must have b - 2 entries");
  return out;
}

std::string describe(const std::vector<RuleViolation>& vs) {
  std::string out = "invalid blueprint:";
  for (const auto& v : vs) out += " [rule " + std::to_string(v.rule) + "] " + v.message + ";";
  return out;
}

}  // namespace

Graph build_d3_unchecked(const D3Blueprint& bp) {
  if (auto bad = domain_violations(bp); !bad.empty()) throw ConstructionError(describe(bad));
  const int x1 = bp.v1(0);
  const int y2 = bp.v1(1);
  const int y1 = bp.v2(0);
  const int y3 = bp.v2(1);
  const int x3 = bp.x3();
  std::vector<int> v1, v2;
  for (int i = 0; i < bp.a; ++i) v1.push_back(bp.v1(i));
  for (int j = 0; j < bp.b; ++j) v2.push_back(bp.v2(j));

  EdgeSet edges;
  edges.join({y1}, v1);
  edges.join({y2}, v2);
  edges.add(x1, x3);
  for (int j : bp.rule2_set) edges.add(x1, bp.v2(j));
  edges.add(y3, x3);
  for (int i : bp.rule3_set) edges.add(y3, bp.v1(i));
  for (int i = 2; i < bp.a; ++i) {
    if (bp.v1_to_v3[static_cast<std::size_t>(i - 2)]) {
      edges.add(bp.v1(i), x3);
    } else {
      edges.join({bp.v1(i)}, v2);
    }
  }
  for (int j = 2; j < bp.b; ++j) {
    if (bp.v2_to_v3[static_cast<std::size_t>(j - 2)]) {
      edges.add(bp.v2(j), x3);
    } else {
      edges.join({bp.v2(j)}, v1);
    }
  }
  return edges.build(bp.order());
}

BlueprintVerdict validate_blueprint(const D3Blueprint& bp) {
  BlueprintVerdict verdict;
  verdict.violations = domain_violations(bp);
  if (!verdict.violations.empty()) {
    verdict.valid = false;
    return verdict;
  }
  const Graph g = build_d3_unchecked(bp);
  const int x3 = bp.x3();
  auto add = [&](int rule, std::string msg, std::optional<std::pair<int, int>> w) {
    verdict.violations.push_back({rule, std::move(msg), w});
  };
  auto non_neighbours = [&](int v, int first, int count) {
    int c = 0;
    for (int u = first; u < first + count; ++u) c += g.adjacent(v, u) ? 0 : 1;
    return c;
  };

  for (int i = 2; i < bp.a; ++i) {
    if (bp.v1_to_v3[static_cast<std::size_t>(i - 2)] && non_neighbours(bp.v1(i), bp.v2(0), bp.b) == 0) {
      add(4, "V1 vertex joined to x3 also dominates V2", std::pair{bp.v1(i), x3});
    }
  }
  for (int j = 2; j < bp.b; ++j) {
    if (bp.v2_to_v3[static_cast<std::size_t>(j - 2)] && non_neighbours(bp.v2(j), bp.v1(0), bp.a) == 0) {
      add(4, "V2 vertex joined to x3 also dominates V1", std::pair{bp.v2(j), x3});
    }
  }
  if (non_neighbours(x3, bp.v1(0), bp.a) < 2) {
    add(4, "x3 has fewer than two non-neighbours in V1", std::nullopt);
  }
  if (non_neighbours(x3, bp.v2(0), bp.b) < 2) {
    add(4, "x3 has fewer than two non-neighbours in V2", std::nullopt);
  }
  for (int i = 0; i < bp.a; ++i) {
    for (int j = 0; j < bp.b; ++j) {
      const int x = bp.v1(i);
      const int y = bp.v2(j);
      if (g.adjacent(x, y)) continue;
      const bool x_has_other = non_neighbours(x, bp.v2(0), bp.b) >= 2;
      const bool y_has_other = non_neighbours(y, bp.v1(0), bp.a) >= 2;
      if (!x_has_other && !y_has_other) {
        add(5, "non-adjacent pair whose only cross non-neighbours are each other", std::pair{x, y});
      }
    }
  }
  verdict.valid = verdict.violations.empty();
  return verdict;
}

LabeledGraph build_d3(const D3Blueprint& bp) {
  auto verdict = validate_blueprint(bp);
  if (!verdict.valid) throw ConstructionError(describe(verdict.violations));
  LabeledGraph out{build_d3_unchecked(bp), {}};
  auto& labels = out.labels;
  for (int i = 0; i < bp.a; ++i) {
    const std::string nm = i == 0 ? "x1" : i == 1 ? "y2" : "a" + std::to_string(i);
    labels.vertices[nm] = bp.v1(i);
    labels.sets["V1"].push_back(bp.v1(i));
  }
  for (int j = 0; j < bp.b; ++j) {
    const std::string nm = j == 0 ? "y1" : j == 1 ? "y3" : "b" + std::to_string(j);
    labels.vertices[nm] = bp.v2(j);
    labels.sets["V2"].push_back(bp.v2(j));
  }
  labels.vertices["x3"] = bp.x3();
  labels.sets["V3"] = {bp.x3()};
  const std::vector<std::string> classes{"V1", "V2", "V3"};
  labels.validate(out.graph.order(), classes);
  return out;
}

void for_each_d3_choice(int a, int b, const std::function<bool(const D3Blueprint&)>& visit) {
  if (a < 3 || b < 3) {
    throw ConstructionError("blueprint enumeration needs a >= 3 and b >= 3, got a = " +
                            std::to_string(a) + ", b = " + std::to_string(b));
  }
  std::vector<int> rule2_domain{0};
  for (int j = 2; j < b; ++j) rule2_domain.push_back(j);
  std::vector<int> rule3_domain;
  for (int i = 1; i < a; ++i) rule3_domain.push_back(i);
  const int bits = static_cast<int>(rule2_domain.size() + rule3_domain.size()) + (a - 2) + (b - 2);
  if (bits > 40) throw ConstructionError("blueprint choice space too large to enumerate");

  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << bits); ++choice) {
    D3Blueprint bp{a, b, {}, {}, {}, {}};
    int pos = 0;
    auto next = [&] { return ((choice >> pos++) & 1U) != 0; };
    for (int j : rule2_domain) {
      if (next()) bp.rule2_set.push_back(j);
    }
    for (int i : rule3_domain) {
      if (next()) bp.rule3_set.push_back(i);
    }
    for (int i = 2; i < a; ++i) bp.v1_to_v3.push_back(next());
    for (int j = 2; j < b; ++j) bp.v2_to_v3.push_back(next());
    if (!visit(bp)) return;
  }
}

std::vector<D3Blueprint> enumerate_d3_blueprints(int a, int b, std::optional<std::size_t> limit) {
  std::vector<D3Blueprint> out;
  if (limit && *limit == 0) {
    if (a < 3 || b < 3) throw ConstructionError("blueprint enumeration needs a >= 3 and b >= 3");
    return out;
  }
  for_each_d3_choice(a, b, [&](const D3Blueprint& bp) {
    if (validate_blueprint(bp).valid) out.push_back(bp);
    return !(limit && out.size() >= *limit);
  });
  return out;
}

}  // namespace domchrom
