#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domchrom/graph.hpp"

namespace domchrom {

enum class KuratowskiKind { k5, k33 };

/// Subdivision of K_5 or K_{3,3} inside the graph. For K_{3,3} the first
/// three branch vertices form one side. Each path runs between two branch
/// vertices, endpoints included.
struct KuratowskiWitness {
  KuratowskiKind kind = KuratowskiKind::k5;
  std::vector<int> branch_vertices;
  std::vector<std::vector<int>> paths;
};

struct PlanarityVerdict {
  bool planar = false;
  /// Rotation system (cyclic neighbour order per vertex) when planar.
  std::vector<std::vector<int>> rotation;
  /// Present when not planar.
  std::optional<KuratowskiWitness> witness;
};

PlanarityVerdict is_planar(const Graph& g);

/// Re-checks a certificate against g without trusting the tester: a
/// rotation system must satisfy V - E + F = 2 on every component; a
/// Kuratowski witness must re-walk as internally disjoint paths joining the
/// right branch-vertex pairs. On failure `why` receives the reason.
bool verify_certificate(const Graph& g, const PlanarityVerdict& verdict, std::string* why = nullptr);

/// Exhaustive search for a K_5 or K_{3,3} minor over all assignments of
/// vertices to branch sets. Exponential; limited to n <= 9.
bool has_kuratowski_minor(const Graph& g);

std::string to_string(KuratowskiKind kind);

}  // namespace domchrom
