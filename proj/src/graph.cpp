#include "idb/graph.hpp"

#include <algorithm>
#include <string>

namespace idb {

EdgeSet EdgeSet::from(std::span<const Edge> edges) {
    EdgeSet out;
    out.edges_.reserve(edges.size());
    for (const Edge& e : edges) out.edges_.push_back(make_edge(e.u, e.v));
    std::sort(out.edges_.begin(), out.edges_.end());
    auto dup = std::adjacent_find(out.edges_.begin(), out.edges_.end());
    if (dup != out.edges_.end())
        throw DuplicateEdgeError("duplicate edge (" + std::to_string(dup->u) + "," +
                                 std::to_string(dup->v) + ")");
    return out;
}

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0 || n > kMaxVertices)
        throw VertexOutOfRangeError("vertex count " + std::to_string(n) + " outside [0," +
                                    std::to_string(kMaxVertices) + "]");
    Graph g;
    g.n_ = n;
    for (const Edge& raw : edges) {
        Edge e = make_edge(raw.u, raw.v);
        if (e.u < 0 || e.v >= n)
            throw VertexOutOfRangeError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") outside graph on " + std::to_string(n) + " vertices");
        if (g.adj_[e.u].test(e.v))
            throw DuplicateEdgeError("duplicate edge (" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ")");
        g.adj_[e.u].set(e.v);
        g.adj_[e.v].set(e.u);
        ++g.m_;
    }
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
            out.push_back(Edge{u, v});
    return out;
}

Graph Graph::without_edges(const EdgeSet& es) const {
    Graph g = *this;
    for (const Edge& e : es) {
        if (!has_edge(e))
            throw MissingEdgeError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                   ") not present");
        g.adj_[e.u].reset(e.v);
        g.adj_[e.v].reset(e.u);
        --g.m_;
    }
    return g;
}

Graph Graph::complemented() const {
    Graph g;
    g.n_ = n_;
    const VertexSet all = vertices();
    for (int v = 0; v < n_; ++v) {
        g.adj_[v] = all - adj_[v];
        g.adj_[v].reset(v);
    }
    g.m_ = n_ * (n_ - 1) / 2 - m_;
    return g;
}

void Graph::assert_valid() const {
    if (n_ < 0 || n_ > kMaxVertices) throw Error("vertex count out of range");
    const VertexSet all = vertices();
    int bits = 0;
    for (int v = 0; v < n_; ++v) {
        if (adj_[v].test(v)) throw Error("loop at vertex " + std::to_string(v));
        if (!all.contains(adj_[v])) throw Error("adjacency bit beyond n");
        bits += adj_[v].count();
        for (int u = adj_[v].next(0); u >= 0; u = adj_[v].next(u + 1))
            if (!adj_[u].test(v)) throw Error("asymmetric adjacency");
    }
    for (int v = n_; v < kMaxVertices; ++v)
        if (!adj_[v].empty()) throw Error("adjacency row beyond n is nonempty");
    if (bits != 2 * m_) throw Error("edge count mismatch");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back(Edge{e.u + ng, e.v + ng});
    return Graph::build(ng + h.vertex_count(), edges);
}

Neighborhoods neighborhoods(const Graph& g, int v) {
    return Neighborhoods{g.open_neighborhood(v), g.closed_neighborhood(v)};
}

VertexSet private_neighborhood(const Graph& g, int v, const VertexSet& s) {
    if (v < 0 || v >= g.vertex_count())
        throw VertexOutOfRangeError("vertex " + std::to_string(v) + " out of range");
    if (!s.test(v)) throw NotInSetError("vertex " + std::to_string(v) + " not in the queried set");
    VertexSet out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if ((g.row(u) & s) == VertexSet::single(v)) out.set(u);
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError("degree statistics need at least one vertex");
    DegreeStats st;
    st.degrees.resize(n);
    st.delta_min = kMaxVertices + 1;
    st.delta_max = -1;
    for (int v = 0; v < n; ++v) {
        st.degrees[v] = g.row(v).count();
        st.delta_min = std::min(st.delta_min, st.degrees[v]);
        st.delta_max = std::max(st.delta_max, st.degrees[v]);
    }
    return st;
}

SetPredicates set_predicates(const Graph& g, const VertexSet& s) {
    SetPredicates p;
    p.independent = true;
    VertexSet covered = s;
    for (int v = s.lowest(); v >= 0; v = s.next(v + 1)) {
        if (g.row(v).intersects(s)) p.independent = false;
        covered |= g.row(v);
    }
    p.dominating = covered.contains(g.vertices());
    return p;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen.test(v)) continue;
        VertexSet comp = VertexSet::single(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int u = frontier.lowest(); u >= 0; u = frontier.next(u + 1)) next |= g.row(u);
            frontier = next - comp;
            comp |= next;
        }
        out.push_back(comp);
        seen |= comp;
    }
    return out;
}

} // namespace idb
