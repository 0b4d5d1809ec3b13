#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alpharad/graph.hpp"

namespace alpharad {

/// Malformed input. `offset` is a byte offset for graph6, a 1-based line
/// number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6: header N(n), then the upper triangle read column by column
// (0,1) (0,2) (1,2) (0,3) ... packed six bits per byte, high bit first,
// zero-padded, each byte offset by 63. A trailing newline is tolerated.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads one graph per non-empty line. An optional ">>graph6<<" prefix on a
/// line is skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

// Edge list: first line "n m", then m lines "u v" with 0-based endpoints.
// Blank lines and text after '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace alpharad
