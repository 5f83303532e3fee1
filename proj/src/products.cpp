#include "idb/products.hpp"

#include <vector>

namespace idb {

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back({e.u + ng, e.v + ng});
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) edges.push_back({u, ng + v});
    return Graph::build(ng + nh, edges);
}

Graph lexicographic(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        for (int x = 0; x < nh; ++x)
            for (int y = 0; y < nh; ++y) edges.push_back({e.u * nh + x, e.v * nh + y});
    for (int a = 0; a < ng; ++a)
        for (const Edge& e : h.edges()) edges.push_back({a * nh + e.u, a * nh + e.v});
    return Graph::build(ng * nh, edges);
}

Graph corona(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng == 0) throw EmptyBaseError("corona needs a base vertex");
    const int stride = 1 + nh;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.u * stride, e.v * stride});
    for (int a = 0; a < ng; ++a) {
        const int base = a * stride;
        for (int x = 0; x < nh; ++x) edges.push_back({base, base + 1 + x});
        for (const Edge& e : h.edges()) edges.push_back({base + 1 + e.u, base + 1 + e.v});
    }
    return Graph::build(ng * stride, edges);
}

Graph cartesian(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<Edge> edges;
    for (int a = 0; a < ng; ++a)
        for (const Edge& e : h.edges()) edges.push_back({a * nh + e.u, a * nh + e.v});
    for (const Edge& e : g.edges())
        for (int x = 0; x < nh; ++x) edges.push_back({e.u * nh + x, e.v * nh + x});
    return Graph::build(ng * nh, edges);
}

} // namespace idb
