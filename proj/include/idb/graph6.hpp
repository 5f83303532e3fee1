#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "idb/graph.hpp"

namespace idb {

// graph6: one-line encoding of a labeled simple graph. Header is n+63 for
// n <= 62, or '~' followed by three 6-bit characters for larger n; the
// payload packs the upper-triangle adjacency bits in column-major order,
// six bits per character, zero-padded.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// One graph per line; blank lines and an optional ">>graph6<<" banner are
// skipped. Lines are decoded strictly.
std::vector<Graph> read_graph6_stream(std::istream& in);

} // namespace idb
