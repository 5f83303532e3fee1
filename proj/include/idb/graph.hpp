#pragma once

#include <array>
#include <compare>
#include <span>
#include <vector>

#include "idb/errors.hpp"
#include "idb/vertex_set.hpp"

namespace idb {

// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Normalizes endpoint order; loops are rejected.
inline Edge make_edge(int u, int v) {
    if (u == v) throw LoopEdgeError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Strictly increasing list of distinct edges.
class EdgeSet {
public:
    EdgeSet() = default;
    // Normalizes, sorts, rejects loops and duplicates.
    static EdgeSet from(std::span<const Edge> edges);
    static EdgeSet from(std::initializer_list<Edge> edges) {
        return from(std::span<const Edge>(edges.begin(), edges.size()));
    }

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    bool operator==(const EdgeSet&) const = default;

private:
    std::vector<Edge> edges_;
};

// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
// Immutable once built: every "mutation" returns a fresh graph.
class Graph {
public:
    Graph() = default; // the n = 0 graph

    // Validates endpoints, loops, duplicates; adjacency is made symmetric.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].test(v);
    }

    // Unchecked row access for solver inner loops.
    const VertexSet& row(int v) const { return adj_[v]; }

    VertexSet open_neighborhood(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    VertexSet closed_neighborhood(int v) const {
        check_vertex(v);
        VertexSet s = adj_[v];
        s.set(v);
        return s;
    }

    VertexSet vertices() const { return VertexSet::all_below(n_); }

    // All edges, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool has_edge(const Edge& e) const {
        return e.u >= 0 && e.v < n_ && e.u != e.v && adj_[e.u].test(e.v);
    }

    Graph without_edges(const EdgeSet& es) const; // MissingEdgeError
    Graph complemented() const;

    // Throws Error if symmetry / no-loop / edge-count bookkeeping is broken.
    void assert_valid() const;

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw VertexOutOfRangeError("vertex " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

    int n_ = 0;
    int m_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

Graph disjoint_union(const Graph& g, const Graph& h);

struct Neighborhoods {
    VertexSet open;
    VertexSet closed;
};
Neighborhoods neighborhoods(const Graph& g, int v);

// {u : N(u) ∩ s = {v}}; requires v ∈ s.
VertexSet private_neighborhood(const Graph& g, int v, const VertexSet& s);

struct DegreeStats {
    std::vector<int> degrees;
    int delta_min = 0;
    int delta_max = 0;
};
DegreeStats degree_stats(const Graph& g); // EmptyGraphError for n = 0

struct SetPredicates {
    bool independent = false;
    bool dominating = false;
};
SetPredicates set_predicates(const Graph& g, const VertexSet& s);

// Connected components, each ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);

} // namespace idb
