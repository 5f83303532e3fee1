#include "idb/solvers.hpp"

#include <vector>

namespace idb {

namespace {

struct SearchCtx {
    const Graph& g;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    int best;
    bool found = false;
    VertexSet best_set;

    SearchCtx(const Graph& g_, Budget budget, int initial_best)
        : g(g_), max_nodes(budget.max_nodes), best(initial_best) {}

    void count_node() {
        ++nodes;
        if (max_nodes && nodes > max_nodes)
            throw SolverBudgetExceededError(
                "node budget exhausted",
                found ? std::optional<int>(best) : std::nullopt);
    }
};

// dominated == N[S]; a vertex is addable iff it is not in N[S].
void ids_rec(SearchCtx& ctx, VertexSet dominated, VertexSet chosen, int size,
             const VertexSet& all, const std::vector<VertexSet>& closed) {
    ctx.count_node();
    if (dominated == all) {
        if (size < ctx.best) {
            ctx.best = size;
            ctx.best_set = chosen;
            ctx.found = true;
        }
        return;
    }
    if (size + 1 >= ctx.best) return;
    const int v = (all - dominated).lowest();
    VertexSet cands = closed[v] - dominated;
    for (int u = cands.lowest(); u >= 0; u = cands.next(u + 1)) {
        VertexSet next_chosen = chosen;
        next_chosen.set(u);
        ids_rec(ctx, dominated | closed[u], next_chosen, size + 1, all, closed);
    }
}

std::vector<VertexSet> closed_rows(const Graph& g) {
    std::vector<VertexSet> closed(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        closed[v] = g.row(v);
        closed[v].set(v);
    }
    return closed;
}

} // namespace

IdsResult gamma_i(const Graph& g, Budget budget) {
    const int n = g.vertex_count();
    SearchCtx ctx(g, budget, n + 1);
    ids_rec(ctx, VertexSet{}, VertexSet{}, 0, g.vertices(), closed_rows(g));
    // every graph has a maximal independent set, so the search always lands
    return IdsResult{ctx.best, ctx.best_set, ctx.nodes};
}

detail::BoundedIdsResult detail::gamma_i_below(const Graph& g, int initial_best, Budget budget) {
    SearchCtx ctx(g, budget, initial_best);
    ids_rec(ctx, VertexSet{}, VertexSet{}, 0, g.vertices(), closed_rows(g));
    return BoundedIdsResult{ctx.found, IdsResult{ctx.best, ctx.best_set, ctx.nodes}};
}

IdsResult gamma_i_oracle(const Graph& g) {
    const int n = g.vertex_count();
    std::uint64_t tested = 0;
    std::vector<int> idx;
    for (int c = 0; c <= n; ++c) {
        // first combination of size c
        idx.resize(c);
        for (int i = 0; i < c; ++i) idx[i] = i;
        while (true) {
            ++tested;
            VertexSet s;
            for (int i : idx) s.set(i);
            SetPredicates p = set_predicates(g, s);
            if (p.independent && p.dominating) return IdsResult{c, s, tested};
            // next combination in lexicographic order
            int i = c - 1;
            while (i >= 0 && idx[i] == n - c + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    // unreachable: V(g) itself is dominating, and for the empty graph c = 0 hits
    throw Error("subset enumeration found no independent dominating set");
}

IdsResult independence_number(const Graph& g, Budget budget) {
    const int n = g.vertex_count();
    SearchCtx ctx(g, budget, 0); // maximizing; ctx.best holds best size so far
    ctx.found = true;            // the empty set is independent
    const auto closed = closed_rows(g);

    // free = vertices that may still be added
    auto rec = [&](auto&& self, VertexSet free, VertexSet chosen, int size) -> void {
        ctx.count_node();
        if (size > ctx.best) {
            ctx.best = size;
            ctx.best_set = chosen;
        }
        if (free.empty() || size + free.count() <= ctx.best) return;
        const int v = free.lowest();
        VertexSet with = chosen;
        with.set(v);
        self(self, free - closed[v], with, size + 1);
        free.reset(v);
        self(self, free, chosen, size);
    };
    if (n > 0) rec(rec, g.vertices(), VertexSet{}, 0);
    return IdsResult{ctx.best, ctx.best_set, ctx.nodes};
}

IdsResult domination_number(const Graph& g, Budget budget) {
    const int n = g.vertex_count();
    SearchCtx ctx(g, budget, n + 1);
    const auto closed = closed_rows(g);
    const VertexSet all = g.vertices();

    // branch on the undominated vertex with the fewest potential dominators
    auto rec = [&](auto&& self, VertexSet dominated, VertexSet chosen, int size) -> void {
        ctx.count_node();
        if (dominated == all) {
            if (size < ctx.best) {
                ctx.best = size;
                ctx.best_set = chosen;
                ctx.found = true;
            }
            return;
        }
        if (size + 1 >= ctx.best) return;
        int branch = -1, branch_deg = kMaxVertices + 2;
        VertexSet undom = all - dominated;
        for (int v = undom.lowest(); v >= 0; v = undom.next(v + 1)) {
            int d = closed[v].count();
            if (d < branch_deg) {
                branch_deg = d;
                branch = v;
            }
        }
        for (int u = closed[branch].lowest(); u >= 0; u = closed[branch].next(u + 1)) {
            VertexSet next_chosen = chosen;
            next_chosen.set(u);
            self(self, dominated | closed[u], next_chosen, size + 1);
        }
    };
    rec(rec, VertexSet{}, VertexSet{}, 0);
    return IdsResult{ctx.best, ctx.best_set, ctx.nodes};
}

} // namespace idb
