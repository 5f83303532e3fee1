#include "idb/bondage.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace idb {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kNoRank = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > kSaturated - b) ? kSaturated : a + b;
}

// C(m, k) with saturation
std::uint64_t binomial(int m, int k) {
    if (k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = m - k + i;
        if (r > kSaturated / num) return kSaturated;
        r = r * num / i; // exact: r*num is divisible by i at each step
    }
    return r;
}

// Lexicographically rank-th k-subset of {0..m-1}.
std::vector<int> unrank_combination(int m, int k, std::uint64_t rank) {
    std::vector<int> idx(k);
    int a = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t block = binomial(m - 1 - a, k - 1 - i);
            if (rank < block) {
                idx[i] = a++;
                break;
            }
            rank -= block;
            ++a;
        }
    }
    return idx;
}

std::uint64_t rank_combination(int m, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    std::uint64_t rank = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int a = prev + 1; a < idx[i]; ++a) rank = sat_add(rank, binomial(m - 1 - a, k - 1 - i));
        prev = idx[i];
    }
    return rank;
}

// Lexicographic successor; false once exhausted.
bool next_combination(std::vector<int>& idx, int m) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

Graph strip(const Graph& g, const std::vector<Edge>& edges, const std::vector<int>& idx) {
    std::vector<Edge> removed;
    removed.reserve(idx.size());
    for (int i : idx) removed.push_back(edges[i]);
    EdgeSet es;
    // edges[] is sorted and idx is increasing, so this is already canonical
    return g.without_edges(EdgeSet::from(removed));
}

struct SubsetOutcome {
    bool changed = false;
    bool budget_tripped = false;
    int gamma_after = 0;
};

struct CachedSets {
    std::vector<VertexSet> min_ids; // up to 32 minimum i-sets of g
};

// Collect up to `limit` minimum i-sets by re-running the gamma_i branching
// without pruning equal-size completions.
CachedSets collect_min_ids(const Graph& g, int gamma, Budget budget, int limit) {
    CachedSets cache;
    std::vector<VertexSet> closed(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        closed[v] = g.row(v);
        closed[v].set(v);
    }
    const VertexSet all = g.vertices();
    std::uint64_t nodes = 0;
    auto rec = [&](auto&& self, VertexSet dominated, VertexSet chosen, int size) -> void {
        if (static_cast<int>(cache.min_ids.size()) >= limit) return;
        if (budget.max_nodes && ++nodes > budget.max_nodes) return; // partial cache is still sound
        if (dominated == all) {
            if (size == gamma) cache.min_ids.push_back(chosen);
            return;
        }
        if (size + 1 > gamma) return;
        const int v = (all - dominated).lowest();
        VertexSet cands = closed[v] - dominated;
        for (int u = cands.lowest(); u >= 0; u = cands.next(u + 1)) {
            VertexSet next_chosen = chosen;
            next_chosen.set(u);
            self(self, dominated | closed[u], next_chosen, size + 1);
        }
    };
    rec(rec, VertexSet{}, VertexSet{}, 0);
    return cache;
}

SubsetOutcome evaluate_subset(const Graph& stripped, int gamma_before, Budget budget,
                              const CachedSets* cache) {
    SubsetOutcome out;
    try {
        if (cache) {
            for (const VertexSet& s : cache->min_ids) {
                SetPredicates p = set_predicates(stripped, s);
                if (p.independent && p.dominating) {
                    // survivor: gamma_i(stripped) <= gamma_before
                    if (gamma_before == 1) return out; // cannot drop below 1
                    auto bounded = detail::gamma_i_below(stripped, gamma_before, budget);
                    if (bounded.improved) {
                        out.changed = true;
                        out.gamma_after = bounded.result.size;
                    }
                    return out;
                }
            }
        }
        IdsResult r = gamma_i(stripped, budget);
        if (r.size != gamma_before) {
            out.changed = true;
            out.gamma_after = r.size;
        }
    } catch (const SolverBudgetExceededError&) {
        out.budget_tripped = true;
    }
    return out;
}

struct KSearchResult {
    std::uint64_t hit_rank = kNoRank;
    int gamma_after = 0;
    std::uint64_t trip_rank = kNoRank;
};

// Scan all k-subsets in rank order, possibly with several workers. Workers
// claim fixed-size chunks; ranks above the best event seen so far are
// skipped, which never affects the minimum event rank.
KSearchResult search_k(const Graph& g, const std::vector<Edge>& edges, int k, int gamma_before,
                       Budget budget, const CachedSets* cache, int threads) {
    const int m = static_cast<int>(edges.size());
    const std::uint64_t total = binomial(m, k);
    constexpr std::uint64_t kChunk = 256;

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> cutoff{kNoRank}; // best event rank so far
    std::mutex merge_mutex;
    KSearchResult merged;
    std::exception_ptr first_error;

    auto worker = [&]() {
        try {
            while (true) {
                const std::uint64_t chunk = next_chunk.fetch_add(1);
                const std::uint64_t start = chunk * kChunk;
                if (start >= total || start > cutoff.load()) break;
                const std::uint64_t stop = std::min(total, start + kChunk);
                std::vector<int> idx = unrank_combination(m, k, start);
                for (std::uint64_t rank = start; rank < stop; ++rank) {
                    if (rank > cutoff.load()) break;
                    SubsetOutcome out =
                        evaluate_subset(strip(g, edges, idx), gamma_before, budget, cache);
                    if (out.changed || out.budget_tripped) {
                        std::lock_guard<std::mutex> lk(merge_mutex);
                        if (out.changed && rank < merged.hit_rank) {
                            merged.hit_rank = rank;
                            merged.gamma_after = out.gamma_after;
                        }
                        if (out.budget_tripped && rank < merged.trip_rank)
                            merged.trip_rank = rank;
                        std::uint64_t best = std::min(merged.hit_rank, merged.trip_rank);
                        std::uint64_t cur = cutoff.load();
                        while (best < cur && !cutoff.compare_exchange_weak(cur, best)) {
                        }
                    }
                    if (rank + 1 < stop) next_combination(idx, m);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(merge_mutex);
            if (!first_error) first_error = std::current_exception();
            cutoff.store(0);
        }
    };

    const std::uint64_t chunks = total / kChunk + 1;
    const int nthreads = static_cast<int>(
        std::min<std::uint64_t>(std::max(1, threads), chunks));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return merged;
}

int exact_gamma_i(const Graph& g) {
    return g.vertex_count() <= 16 ? gamma_i_oracle(g).size : gamma_i(g).size;
}

} // namespace

std::string to_string(BondageDirection d) {
    return d == BondageDirection::increased ? "increased" : "decreased";
}

BondageCertificate bondage_id(const Graph& g, Budget budget, const BondageOptions& opts) {
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m == 0) throw NoEdgesError("bondage number undefined on an edgeless graph");

    int gamma_before;
    try {
        gamma_before = gamma_i(g, budget).size;
    } catch (const SolverBudgetExceededError&) {
        throw BondageBudgetExceededError("budget exhausted computing gamma_i(G)", 0);
    }

    CachedSets cache;
    if (opts.use_cache) cache = collect_min_ids(g, gamma_before, budget, 32);
    const CachedSets* cache_ptr = opts.use_cache ? &cache : nullptr;

    std::uint64_t tested_below = 0;
    for (int k = 1; k <= m; ++k) {
        KSearchResult r = search_k(g, edges, k, gamma_before, budget, cache_ptr, opts.threads);
        if (r.trip_rank < r.hit_rank)
            throw BondageBudgetExceededError("budget exhausted during subset sweep", k - 1);
        if (r.hit_rank != kNoRank) {
            std::vector<int> idx = unrank_combination(m, k, r.hit_rank);
            std::vector<Edge> removed;
            for (int i : idx) removed.push_back(edges[i]);
            BondageCertificate cert;
            cert.k = k;
            cert.removed = EdgeSet::from(removed);
            cert.gamma_before = gamma_before;
            cert.gamma_after = r.gamma_after;
            cert.subsets_tested = sat_add(tested_below, r.hit_rank + 1);
            cert.direction = r.gamma_after > gamma_before ? BondageDirection::increased
                                                          : BondageDirection::decreased;
            return cert;
        }
        tested_below = sat_add(tested_below, binomial(m, k));
    }
    // removing all edges leaves an edgeless graph with gamma_i = n > gamma_i(G)
    throw Error("no bondage set found; graph invariants violated");
}

bool verify_certificate(const Graph& g, const BondageCertificate& cert) {
    for (const Edge& e : cert.removed)
        if (!g.has_edge(e))
            throw MissingEdgeError("certificate removes edge (" + std::to_string(e.u) + "," +
                                   std::to_string(e.v) + ") not present in the graph");
    if (cert.k != static_cast<int>(cert.removed.size())) return false;

    const int before = exact_gamma_i(g);
    const int after = exact_gamma_i(g.without_edges(cert.removed));
    if (before != cert.gamma_before || after != cert.gamma_after) return false;
    if (before == after) return false;
    const auto dir =
        after > before ? BondageDirection::increased : BondageDirection::decreased;
    if (dir != cert.direction) return false;

    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());

    // canonical search-order position must match
    std::vector<int> removed_idx;
    for (const Edge& e : cert.removed) {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || !(*it == e)) return false;
        removed_idx.push_back(static_cast<int>(it - edges.begin()));
    }
    std::uint64_t expected_tested = rank_combination(m, removed_idx) + 1;
    for (int j = 1; j < cert.k; ++j) expected_tested = sat_add(expected_tested, binomial(m, j));
    if (expected_tested != cert.subsets_tested) return false;

    // exhaustive sweep below k: nothing smaller may change gamma_i
    for (int j = 1; j < cert.k; ++j) {
        std::vector<int> idx(j);
        for (int i = 0; i < j; ++i) idx[i] = i;
        while (true) {
            if (exact_gamma_i(strip(g, edges, idx)) != before) return false;
            if (!next_combination(idx, m)) break;
        }
    }
    return true;
}

} // namespace idb
