#include "domchrom/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace domchrom {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(int n, const std::vector<std::pair<int, int>>& edges) {
  BoostGraph bg(static_cast<std::size_t>(n));
  int idx = 0;
  for (auto [u, v] : edges) {
    auto e = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg).first;
    boost::put(boost::edge_index, bg, e, idx++);
  }
  return bg;
}

bool boost_planar(int n, const std::vector<std::pair<int, int>>& edges) {
  BoostGraph bg = to_boost(n, edges);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<std::pair<int, int>> minimal_obstruction(int n, std::vector<std::pair<int, int>> edges) {
  // Dropping edges while the rest stays non-planar leaves an edge-minimal
  // non-planar subgraph, which is a subdivision of K_5 or K_{3,3}.
  for (std::size_t i = 0; i < edges.size();) {
    auto trial = edges;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!boost_planar(n, trial)) {
      edges = std::move(trial);
    } else {
      ++i;
    }
  }
  return edges;
}

KuratowskiWitness trace_witness(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  KuratowskiWitness w;
  for (int v = 0; v < n; ++v) {
    if (adj[static_cast<std::size_t>(v)].size() >= 3) w.branch_vertices.push_back(v);
  }
  const std::set<int> branch(w.branch_vertices.begin(), w.branch_vertices.end());
  std::set<std::pair<int, int>> used_first_edges;
  for (int b : w.branch_vertices) {
    for (int next : adj[static_cast<std::size_t>(b)]) {
      if (used_first_edges.count({b, next})) continue;
      std::vector<int> path{b, next};
      int prev = b;
      int cur = next;
      while (!branch.count(cur)) {
        const auto& nb = adj[static_cast<std::size_t>(cur)];
        const int step = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = step;
        path.push_back(cur);
      }
      used_first_edges.insert({cur, path[path.size() - 2]});
      w.paths.push_back(std::move(path));
    }
  }
  if (w.branch_vertices.size() == 5) {
    w.kind = KuratowskiKind::k5;
  } else {
    w.kind = KuratowskiKind::k33;
    std::map<int, int> side;
    side[w.branch_vertices[0]] = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& p : w.paths) {
        const int s = p.front();
        const int t = p.back();
        if (side.count(s) && !side.count(t)) {
          side[t] = 1 - side[s];
          changed = true;
        } else if (side.count(t) && !side.count(s)) {
          side[s] = 1 - side[t];
          changed = true;
        }
      }
    }
    std::stable_partition(w.branch_vertices.begin(), w.branch_vertices.end(),
                          [&](int v) { return side[v] == 0; });
  }
  return w;
}

}  // namespace

std::string to_string(KuratowskiKind kind) { return kind == KuratowskiKind::k5 ? "K5" : "K33"; }

PlanarityVerdict is_planar(const Graph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  BoostGraph bg = to_boost(n, edges);
  using Embedding = std::vector<std::vector<BoostEdge>>;
  Embedding embedding(static_cast<std::size_t>(n));
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  PlanarityVerdict verdict;
  verdict.planar = planar;
  if (planar) {
    verdict.rotation.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      for (const auto& e : embedding[static_cast<std::size_t>(v)]) {
        const int s = static_cast<int>(boost::source(e, bg));
        const int t = static_cast<int>(boost::target(e, bg));
        verdict.rotation[static_cast<std::size_t>(v)].push_back(s == v ? t : s);
      }
    }
    return verdict;
  }
  std::vector<std::pair<int, int>> sub;
  for (const auto& e : kuratowski) {
    sub.emplace_back(static_cast<int>(boost::source(e, bg)), static_cast<int>(boost::target(e, bg)));
  }
  verdict.witness = trace_witness(n, minimal_obstruction(n, sub));
  return verdict;
}

namespace {

bool fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return false;
}

bool verify_embedding(const Graph& g, const PlanarityVerdict& v, std::string* why) {
  const int n = g.order();
  if (static_cast<int>(v.rotation.size()) != n) return fail(why, "rotation system size mismatch");
  std::map<std::pair<int, int>, std::size_t> position;
  for (int u = 0; u < n; ++u) {
    const auto& rot = v.rotation[static_cast<std::size_t>(u)];
    auto sorted = rot;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(u)) return fail(why, "rotation at " + std::to_string(u) + " is not its neighbourhood");
    for (std::size_t i = 0; i < rot.size(); ++i) position[{u, rot[i]}] = i;
  }
  std::set<std::pair<int, int>> seen;
  std::vector<int> faces_in_component(static_cast<std::size_t>(n), 0);
  const auto components = connected_components(g);
  std::vector<int> comp_of(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int x : components[c]) comp_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
  }
  for (auto [a, b] : g.edges()) {
    for (auto dart : {std::pair{a, b}, std::pair{b, a}}) {
      if (seen.count(dart)) continue;
      ++faces_in_component[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(dart.first)])];
      auto d = dart;
      while (!seen.count(d)) {
        seen.insert(d);
        const auto& rot = v.rotation[static_cast<std::size_t>(d.second)];
        const std::size_t i = position[{d.second, d.first}];
        d = {d.second, rot[(i + 1) % rot.size()]};
      }
    }
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& vs = components[c];
    const long long vcount = static_cast<long long>(vs.size());
    long long ecount = 0;
    for (int x : vs) ecount += g.degree(x);
    ecount /= 2;
    const long long faces = ecount == 0 ? 1 : faces_in_component[c];
    if (vcount - ecount + faces != 2) {
      return fail(why, "Euler check failed on component " + std::to_string(c) + ": V=" +
                           std::to_string(vcount) + " E=" + std::to_string(ecount) +
                           " F=" + std::to_string(faces));
    }
  }
  return true;
}

bool verify_witness(const Graph& g, const KuratowskiWitness& w, std::string* why) {
  const bool k5 = w.kind == KuratowskiKind::k5;
  const std::size_t branches = k5 ? 5 : 6;
  const std::size_t paths = k5 ? 10 : 9;
  if (w.branch_vertices.size() != branches) return fail(why, "wrong number of branch vertices");
  if (w.paths.size() != paths) return fail(why, "wrong number of paths");
  std::map<int, int> index;
  for (std::size_t i = 0; i < branches; ++i) {
    const int b = w.branch_vertices[i];
    if (b < 0 || b >= g.order()) return fail(why, "branch vertex out of range");
    if (!index.emplace(b, static_cast<int>(i)).second) return fail(why, "repeated branch vertex");
  }
  std::set<std::pair<int, int>> pairs;
  std::set<int> interior;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return fail(why, "path shorter than an edge");
    if (!index.count(p.front()) || !index.count(p.back())) return fail(why, "path endpoint is not a branch vertex");
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] < 0 || p[i] >= g.order() || p[i + 1] < 0 || p[i + 1] >= g.order() ||
          !g.adjacent(p[i], p[i + 1])) {
        return fail(why, "path step is not an edge");
      }
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (index.count(p[i])) return fail(why, "path passes through a branch vertex");
      if (!interior.insert(p[i]).second) return fail(why, "paths share an interior vertex");
    }
    int s = index[p.front()];
    int t = index[p.back()];
    if (s > t) std::swap(s, t);
    if (s == t) return fail(why, "path is a loop");
    if (!k5 && ((s < 3) == (t < 3))) return fail(why, "K33 path joins two vertices on one side");
    if (!pairs.emplace(s, t).second) return fail(why, "two paths join the same branch pair");
  }
  return true;
}

}  // namespace

bool verify_certificate(const Graph& g, const PlanarityVerdict& verdict, std::string* why) {
  if (verdict.planar) return verify_embedding(g, verdict, why);
  if (!verdict.witness) return fail(why, "non-planar verdict without witness");
  return verify_witness(g, *verdict.witness, why);
}

namespace {

// Assigns each vertex to a branch set 0..target-1 or to "deleted" (-1);
// branch sets are numbered by first appearance.
class MinorSearch {
 public:
  MinorSearch(const Graph& g, int target) : g_(g), target_(target) {
    label_.assign(static_cast<std::size_t>(g.order()), -1);
  }
  bool run() { return assign(0, 0); }

 private:
  bool assign(int v, int used) {
    const int n = g_.order();
    if (used + (n - v) < target_) return false;
    if (v == n) return used == target_ && check();
    label_[static_cast<std::size_t>(v)] = -1;
    if (assign(v + 1, used)) return true;
    for (int c = 0; c <= std::min(used, target_ - 1); ++c) {
      label_[static_cast<std::size_t>(v)] = c;
      if (assign(v + 1, c == used ? used + 1 : used)) return true;
    }
    label_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  bool check() const {
    std::vector<VertexMask> sets(static_cast<std::size_t>(target_), 0);
    for (int v = 0; v < g_.order(); ++v) {
      const int l = label_[static_cast<std::size_t>(v)];
      if (l >= 0) sets[static_cast<std::size_t>(l)] |= bit(v);
    }
    for (VertexMask s : sets) {
      if (!connected_within(s)) return false;
    }
    auto touching = [&](int i, int j) {
      for (VertexMask m = sets[static_cast<std::size_t>(i)]; m; m &= m - 1) {
        if (g_.row(lowest_vertex(m)) & sets[static_cast<std::size_t>(j)]) return true;
      }
      return false;
    };
    if (target_ == 5) {
      for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
          if (!touching(i, j)) return false;
        }
      }
      return true;
    }
    // K_{3,3}: some side containing set 0 with two more sets.
    for (int a = 1; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        std::vector<int> left{0, a, b};
        std::vector<int> right;
        for (int c = 1; c < 6; ++c) {
          if (c != a && c != b) right.push_back(c);
        }
        bool ok = true;
        for (int l : left) {
          for (int r : right) ok = ok && touching(l, r);
        }
        if (ok) return true;
      }
    }
    return false;
  }

  bool connected_within(VertexMask s) const {
    if (s == 0) return false;
    VertexMask reached = bit(lowest_vertex(s));
    VertexMask frontier = reached;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g_.row(lowest_vertex(m)) & s;
      frontier = next & ~reached;
      reached |= next;
    }
    return reached == s;
  }

  const Graph& g_;
  int target_;
  std::vector<int> label_;
};

}  // namespace

bool has_kuratowski_minor(const Graph& g) {
  if (g.order() > 9) throw DomainError("brute-force minor search is limited to n <= 9");
  return MinorSearch(g, 5).run() || MinorSearch(g, 6).run();
}

}  // namespace domchrom
