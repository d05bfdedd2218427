#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpow/graph.hpp"

namespace gpow {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// graph6, single-byte header form only (n <= 62). Multi-byte headers are
// rejected with a distinct message rather than half-supported.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// Plain edge-list text. First significant line: optional "directed" token
// followed by n; each following significant line holds one pair. Blank
// lines and lines starting with '#' are skipped.
struct TextGraphRecord {
  bool directed = false;
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // file order, duplicates kept
};

TextGraphRecord parse_edge_list(std::string_view text);

std::string emit_edge_list(const Graph& g);

}  // namespace gpow
