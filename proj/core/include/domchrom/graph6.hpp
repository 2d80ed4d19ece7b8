#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "domchrom/graph.hpp"

namespace domchrom {

/// graph6 decode failure; `offset` is the byte position of the problem
/// within the line that was passed in.
class Graph6Error : public GraphError {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : GraphError(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing
/// newline / carriage return are accepted.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding (no header, no newline).
std::string to_graph6(const Graph& g);

}  // namespace domchrom
