#include <doctest.h>

#include <random>

#include "domchrom/graph6.hpp"
#include "domchrom/planarity.hpp"
#include "domchrom/search.hpp"
#include "oracle.hpp"

using namespace domchrom;

namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edge_list(10, e);
}

}  // namespace

TEST_CASE("Kuratowski baselines") {
  const auto k4 = is_planar(complete_graph(4));
  CHECK(k4.planar);
  CHECK(verify_certificate(complete_graph(4), k4));

  const auto k5 = is_planar(complete_graph(5));
  REQUIRE_FALSE(k5.planar);
  REQUIRE(k5.witness.has_value());
  CHECK(k5.witness->kind == KuratowskiKind::k5);
  CHECK(verify_certificate(complete_graph(5), k5));

  const Graph k33 = complete_bipartite(3, 3).graph;
  const auto v33 = is_planar(k33);
  REQUIRE_FALSE(v33.planar);
  REQUIRE(v33.witness.has_value());
  CHECK(v33.witness->kind == KuratowskiKind::k33);
  CHECK(verify_certificate(k33, v33));

  const auto p = is_planar(petersen());
  CHECK_FALSE(p.planar);
  std::string why;
  CHECK_MESSAGE(verify_certificate(petersen(), p, &why), why);
}

TEST_CASE("planar counts over all connected graphs up to order 7") {
  // Planar connected graphs per order, as counted by an independent
  // left-right implementation; matches the published sequence.
  const int expected[] = {0, 1, 1, 2, 6, 20, 99, 646};
  for (int n = 1; n <= 7; ++n) {
    int planar = 0;
    for (const Graph& g : enumerate_connected(n)) {
      const auto v = is_planar(g);
      std::string why;
      CHECK_MESSAGE(verify_certificate(g, v, &why), to_graph6(g) << ": " << why);
      if (v.planar) {
        ++planar;
        if (n >= 3) CHECK(g.edge_count() <= static_cast<std::size_t>(3 * n - 6));
      }
    }
    CHECK(planar == expected[n]);
  }
}

TEST_CASE("tester agrees with the brute-force minor search") {
  for (int n = 5; n <= 7; ++n)
    for (const Graph& g : enumerate_connected(n)) CHECK(is_planar(g).planar == !has_kuratowski_minor(g));
  std::mt19937 rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = oracle::random_connected(rng, 8 + rep % 2, 0.35);
    CHECK(is_planar(g).planar == !has_kuratowski_minor(g));
  }
}

TEST_CASE("certificates on larger random graphs") {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 10 + rep % 30;
    const Graph g = oracle::random_connected(rng, n, 2.6 / n);
    const auto v = is_planar(g);
    std::string why;
    CHECK_MESSAGE(verify_certificate(g, v, &why), to_graph6(g) << ": " << why);
  }
  // disconnected input is fine
  const std::pair<int, int> e[] = {{0, 1}, {2, 3}};
  const Graph two = Graph::from_edge_list(5, e);
  const auto v = is_planar(two);
  CHECK(v.planar);
  CHECK(verify_certificate(two, v));
}

TEST_CASE("tampered certificates are rejected") {
  const Graph k4 = complete_graph(4);
  auto v = is_planar(k4);
  v.rotation[0] = {1, 2};
  CHECK_FALSE(verify_certificate(k4, v));

  const Graph k5 = complete_graph(5);
  auto w = is_planar(k5);
  w.witness->kind = KuratowskiKind::k33;
  CHECK_FALSE(verify_certificate(k5, w));

  auto lie = is_planar(k5);
  lie.planar = true;
  lie.witness.reset();
  CHECK_FALSE(verify_certificate(k5, lie));

  const Graph k33 = complete_bipartite(3, 3).graph;
  auto cut = is_planar(k33);
  cut.witness->paths.pop_back();
  CHECK_FALSE(verify_certificate(k33, cut));
}
