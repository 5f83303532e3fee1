#pragma once

#include <cstdint>

#include "idb/graph.hpp"

namespace idb {

// Node cap for a single solve; 0 means unlimited. Exceeding the cap raises
// SolverBudgetExceededError instead of returning a possibly-wrong value.
struct Budget {
    std::uint64_t max_nodes = 0;
};

struct IdsResult {
    int size = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
};

// Exact independent domination number with a minimum witness.
//
// Branch and bound over maximal independent sets: branch on the
// lowest-indexed undominated vertex, trying each still-addable member of its
// closed neighborhood in increasing order, pruning against the best size
// found so far. Deterministic, so witnesses are reproducible.
IdsResult gamma_i(const Graph& g, Budget budget = {});

// Same contract, computed by enumerating vertex subsets in increasing
// cardinality (lexicographic within a cardinality) and returning the first
// independent dominating one. Exponential; meant for n <= 16.
IdsResult gamma_i_oracle(const Graph& g);

// Exact independence number (maximum independent set).
IdsResult independence_number(const Graph& g, Budget budget = {});

// Exact domination number (independence not required).
IdsResult domination_number(const Graph& g, Budget budget = {});

namespace detail {

// gamma_i search seeded with an exclusive upper bound: finds the minimum only
// if it is < initial_best, otherwise reports initial_best with an empty
// witness and improved = false. Used by the bondage cache path.
struct BoundedIdsResult {
    bool improved = false;
    IdsResult result;
};
BoundedIdsResult gamma_i_below(const Graph& g, int initial_best, Budget budget);

} // namespace detail

} // namespace idb
