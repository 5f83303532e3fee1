#pragma once

#include "idb/graph.hpp"

namespace idb {

// All four binary operations label pairs row-major: (a, x) -> a * n_h + x.
// The corona interleaves: base vertex a -> a * (1 + n_h), its copy of h
// occupies the following n_h labels.

// Disjoint union plus every cross edge.
Graph join(const Graph& g, const Graph& h);

// (a,x) ~ (b,y) iff a ~ b in g, or a = b and x ~ y in h.
Graph lexicographic(const Graph& g, const Graph& h);

// One copy of h per vertex of g, that vertex joined to its whole copy.
Graph corona(const Graph& g, const Graph& h); // EmptyBaseError when g has no vertices

// (a,x) ~ (b,y) iff (a = b and x ~ y) or (x = y and a ~ b).
Graph cartesian(const Graph& g, const Graph& h);

} // namespace idb
