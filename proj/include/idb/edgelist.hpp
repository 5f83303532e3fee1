#pragma once

#include <string>
#include <string_view>

#include "idb/graph.hpp"

namespace idb {

// Plain-text format: a header line "n <count>", then one "u v" line per
// edge (0-based). '#' comments and blank lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

} // namespace idb
