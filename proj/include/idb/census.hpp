#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idb/bondage.hpp"
#include "idb/graph.hpp"
#include "idb/solvers.hpp"

namespace idb {

// Per-graph invariant row. b_id is absent when the graph is edgeless
// ("undef"), when the per-record budget tripped, or when deselected.
struct CensusRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    int delta_min = 0;
    std::optional<int> gamma;
    std::optional<int> gamma_i;
    std::optional<int> alpha;
    std::optional<int> b_id;
    std::string b_id_note; // "", "undef", "budget_exceeded", "skipped"
    std::optional<EdgeSet> bondage_witness;
    std::string status = "ok"; // "ok" | "budget_exceeded"
};

struct CensusOptions {
    bool with_gamma = true;
    bool with_gamma_i = true;
    bool with_alpha = true;
    bool with_bondage = true;
    bool dedup = false; // labeled-isomorphism dedup; keeps first representative
    int threads = 1;
    Budget budget;
};

// All 2^(n(n-1)/2) labeled graphs on n vertices, in mask order; bit i of the
// mask is pair i in graph6 (column-major) order. n <= 6 only.
std::vector<Graph> all_labeled_graphs(int n);

// Lexicographically least graph6 string over all vertex relabelings.
// Exhaustive permutation canonization; n <= 8.
std::string canonical_graph6(const Graph& g);

Graph permuted(const Graph& g, const std::vector<int>& perm);

// One record per input graph, input order preserved; a per-record budget
// trip is noted in the record and the sweep continues.
std::vector<CensusRecord> census(const std::vector<Graph>& graphs, const CensusOptions& opts = {});

std::string census_to_csv(const std::vector<CensusRecord>& records);
std::string census_to_json(const std::vector<CensusRecord>& records);

} // namespace idb
