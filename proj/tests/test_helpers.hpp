#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "idb/families.hpp"
#include "idb/graph.hpp"

namespace idb::test {

inline Graph P(int n) { return make_family({Family::path, n}); }
inline Graph C(int n) { return make_family({Family::cycle, n}); }
inline Graph K(int n) { return make_family({Family::complete, n}); }
inline Graph star(int n) { return make_family({Family::star, n}); }
inline Graph Kmn(int m, int n) { return make_family({Family::complete_bipartite, n, m}); }
inline Graph F(int n) { return make_family({Family::friendship, n}); }
inline Graph Fq(int q, int n) { return make_family({Family::gen_friendship, n, 0, q}); }
inline Graph B(int n) { return make_family({Family::book, n}); }
inline Graph T(int n) { return make_family({Family::tri_chain, n}); }
inline Graph Q(int n) { return make_family({Family::para_square_chain, n}); }
inline Graph O(int n) { return make_family({Family::ortho_square_chain, n}); }

inline VertexSet vs(std::initializer_list<int> members) {
    VertexSet s;
    for (int v : members) s.set(v);
    return s;
}

// brute-force labeled isomorphism, n <= 8
inline bool isomorphic(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.row(u).test(v) != h.row(perm[u]).test(perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// every biconnected block of a cactus has as many vertices as edges (cycle)
// or is a lone bridge; a block with extra edges carries an edge on two cycles
inline bool is_cactus(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> depth(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> stack;
    bool ok = true;

    auto block_ok = [&](std::size_t base) {
        VertexSet verts;
        int edges = 0;
        while (stack.size() > base) {
            auto [a, b] = stack.back();
            stack.pop_back();
            verts.set(a);
            verts.set(b);
            ++edges;
        }
        return edges <= verts.count();
    };

    auto dfs = [&](auto&& self, int v, int parent) -> void {
        low[v] = depth[v];
        for (int u = g.row(v).lowest(); u >= 0; u = g.row(v).next(u + 1)) {
            if (u == parent) {
                parent = -1; // consume one parent edge (no multigraphs here)
                continue;
            }
            if (depth[u] >= 0) {
                if (depth[u] < depth[v]) {
                    stack.push_back({v, u});
                    low[v] = std::min(low[v], depth[u]);
                }
                continue;
            }
            stack.push_back({v, u});
            const std::size_t base = stack.size() - 1;
            depth[u] = depth[v] + 1;
            self(self, u, v);
            low[v] = std::min(low[v], low[u]);
            if (low[u] >= depth[v]) ok = ok && block_ok(base);
        }
    };

    for (int v = 0; v < n; ++v)
        if (depth[v] < 0) {
            depth[v] = 0;
            dfs(dfs, v, -1);
        }
    return ok;
}

} // namespace idb::test
