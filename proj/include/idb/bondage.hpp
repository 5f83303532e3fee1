#pragma once

#include <cstdint>
#include <string>

#include "idb/graph.hpp"
#include "idb/solvers.hpp"

namespace idb {

enum class BondageDirection { increased, decreased };

std::string to_string(BondageDirection d);

// Witness for b_id(G) = k: removing `removed` changes the independent
// domination number, and no subset of fewer edges does.
struct BondageCertificate {
    int k = 0;
    EdgeSet removed;
    int gamma_before = 0;
    int gamma_after = 0;
    // Canonical position of the winner in (size, lex) search order: all
    // smaller subset sizes plus the winner's 1-based rank within size k.
    // Identical for serial and parallel runs by construction.
    std::uint64_t subsets_tested = 0;
    BondageDirection direction = BondageDirection::increased;
};

struct BondageOptions {
    int threads = 1;
    // Cached minimum i-sets can certify "gamma_i did not increase" for a
    // removal; a decrease must still be ruled out by a bounded solve, so the
    // cache is an optimization only. Off by default.
    bool use_cache = false;
};

// Exact independent domination bondage number.
//
// Iterates k = 1..m; within each k walks the k-subsets of the sorted edge
// list in lexicographic order and returns the first subset whose removal
// changes gamma_i in either direction. The subset stream may be partitioned
// across threads; the merged result is the minimum (k, rank) event, so the
// certificate does not depend on the worker count.
//
// Throws NoEdgesError when m = 0 and BondageBudgetExceededError when an
// inner solve hits its node budget before the answer is settled.
BondageCertificate bondage_id(const Graph& g, Budget budget = {}, const BondageOptions& opts = {});

// Recomputes both gamma_i values (oracle when n <= 16, solver otherwise),
// checks every certificate field, and exhaustively sweeps all subsets of
// size < k for an earlier change. MissingEdgeError if `removed` is not a
// subset of E(g).
bool verify_certificate(const Graph& g, const BondageCertificate& cert);

} // namespace idb
