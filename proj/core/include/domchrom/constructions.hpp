#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "domchrom/graph.hpp"

namespace domchrom {

/// Thrown by builders when their parameters violate a precondition.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Odd family: k odd, k >= 3, n >= 4k - 3. The extra t = n - (4k - 3)
/// vertices form U and join the first colour class.
struct DOddSpec {
  int k = 3;
  int n = 9;
};

/// Even family: k even, k >= 4, n >= 3k, t = n - 3k extra vertices.
struct DEvenSpec {
  int k = 4;
  int n = 12;
};

/// Build order for both families: class P_1 first (x, y, z, w, then U),
/// then P_2, ..., P_k. Labels: "x1".."xk", "y1", ..., "u1".., sets
/// "P1".."Pk", "X", "Y", "Z", "W", "U".
LabeledGraph build_d_odd(const DOddSpec& spec);
LabeledGraph build_d_even(const DEvenSpec& spec);

/// Free choices of the three-class construction. Vertex roles are fixed by
/// position inside each class:
///   V1 = [x1, y2, a_2, ..., a_{a-1}]      (size a)
///   V2 = [y1, y3, b_2, ..., b_{b-1}]      (size b)
///   V3 = [x3]
/// `rule2_set` / `rule3_set` are index sets within V2 / V1.
/// `v1_to_v3[i]` decides for V1[i + 2] whether it is joined to x3 (true)
/// or to all of V2 (false); `v2_to_v3[j]` does the same for V2[j + 2]
/// against V1.
struct D3Blueprint {
  int a = 3;
  int b = 3;
  std::vector<int> rule2_set;  // extra neighbours of x1, subset of V2 - {y3}
  std::vector<int> rule3_set;  // extra neighbours of y3, subset of V1 - {x1}
  std::vector<bool> v1_to_v3;
  std::vector<bool> v2_to_v3;

  /// Graph vertex of V1[i], V2[j] and x3 in build_d3's output.
  int v1(int i) const { return i; }
  int v2(int j) const { return a + j; }
  int x3() const { return a + b; }
  int order() const { return a + b + 1; }

  friend bool operator==(const D3Blueprint&, const D3Blueprint&) = default;
};

struct RuleViolation {
  /// 0: sizes and index domains; 4: the join rule and its x3 tail; 5: the
  /// non-adjacent pair rule.
  int rule = 0;
  std::string message;
  /// Offending vertices in build order, when the rule names a pair.
  std::optional<std::pair<int, int>> witness;
};

struct BlueprintVerdict {
  bool valid = true;
  std::vector<RuleViolation> violations;
};

/// Checks every construction rule on the graph the blueprint describes.
BlueprintVerdict validate_blueprint(const D3Blueprint& bp);

/// Builds the graph; throws ConstructionError listing violations if the
/// blueprint is invalid.
LabeledGraph build_d3(const D3Blueprint& bp);

/// Graph for the blueprint without validating rules 4-5 (domains are still
/// checked). Used by the validator and by membership search.
Graph build_d3_unchecked(const D3Blueprint& bp);

/// Valid blueprints with the given class sizes, in a fixed order (choice
/// bits counted upward), at most `limit` of them.
std::vector<D3Blueprint> enumerate_d3_blueprints(int a, int b,
                                                 std::optional<std::size_t> limit = std::nullopt);

/// Visits every blueprint (valid or not) in the same order as
/// enumerate_d3_blueprints; `visit` returns false to stop.
void for_each_d3_choice(int a, int b, const std::function<bool(const D3Blueprint&)>& visit);

}  // namespace domchrom
