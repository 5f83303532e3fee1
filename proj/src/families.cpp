#include "idb/families.hpp"

#include <utility>
#include <vector>

namespace idb {

namespace {

const std::pair<const char*, Family> kNames[] = {
    {"path", Family::path},
    {"cycle", Family::cycle},
    {"complete", Family::complete},
    {"complete_bipartite", Family::complete_bipartite},
    {"star", Family::star},
    {"friendship", Family::friendship},
    {"gen_friendship", Family::gen_friendship},
    {"book", Family::book},
    {"tri_chain", Family::tri_chain},
    {"para_square_chain", Family::para_square_chain},
    {"ortho_square_chain", Family::ortho_square_chain},
};

void require(bool ok, const std::string& what) {
    if (!ok) throw ParamOutOfRangeError(what);
}

} // namespace

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& [s, f] : kNames)
        if (name == s) return f;
    return std::nullopt;
}

std::string family_name(Family f) {
    for (const auto& [s, ff] : kNames)
        if (ff == f) return s;
    return "?";
}

Graph make_family(const FamilySpec& spec) {
    const int n = spec.n;
    std::vector<Edge> edges;
    switch (spec.name) {
    case Family::path: {
        require(n >= 1, "path needs n >= 1");
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        return Graph::build(n, edges);
    }
    case Family::cycle: {
        require(n >= 3, "cycle needs n >= 3");
        for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
        edges.push_back({0, n - 1});
        return Graph::build(n, edges);
    }
    case Family::complete: {
        require(n >= 1, "complete graph needs n >= 1");
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
        return Graph::build(n, edges);
    }
    case Family::complete_bipartite: {
        require(spec.m >= 1 && n >= 1, "complete bipartite needs m, n >= 1");
        for (int u = 0; u < spec.m; ++u)
            for (int v = 0; v < n; ++v) edges.push_back({u, spec.m + v});
        return Graph::build(spec.m + n, edges);
    }
    case Family::star: {
        require(n >= 1, "star needs n >= 1");
        for (int v = 1; v <= n; ++v) edges.push_back({0, v});
        return Graph::build(n + 1, edges);
    }
    case Family::friendship: {
        require(n >= 1, "friendship needs n >= 1");
        for (int i = 0; i < n; ++i) {
            int a = 1 + 2 * i, b = 2 + 2 * i;
            edges.push_back({0, a});
            edges.push_back({0, b});
            edges.push_back({a, b});
        }
        return Graph::build(2 * n + 1, edges);
    }
    case Family::gen_friendship: {
        require(spec.q >= 3 && n >= 1, "gen_friendship needs q >= 3 and n >= 1");
        const int q = spec.q;
        for (int i = 0; i < n; ++i) {
            int first = 1 + (q - 1) * i;
            edges.push_back({0, first});
            for (int j = 0; j + 1 < q - 1; ++j) edges.push_back({first + j, first + j + 1});
            edges.push_back({0, first + q - 2});
        }
        return Graph::build(n * (q - 1) + 1, edges);
    }
    case Family::book: {
        require(n >= 1, "book needs n >= 1");
        edges.push_back({0, 1});
        for (int i = 1; i <= n; ++i) {
            int u = 2 * i, w = 2 * i + 1;
            edges.push_back({0, u});
            edges.push_back({u, w});
            edges.push_back({w, 1});
        }
        return Graph::build(2 * n + 2, edges);
    }
    case Family::tri_chain: {
        require(n >= 1, "tri_chain needs n >= 1");
        for (int i = 1; i <= n; ++i) {
            int a = 2 * (i - 1), y = 2 * i - 1, b = 2 * i;
            edges.push_back({a, y});
            edges.push_back({y, b});
            edges.push_back({a, b});
        }
        return Graph::build(2 * n + 1, edges);
    }
    case Family::para_square_chain: {
        require(n >= 1, "para_square_chain needs n >= 1");
        for (int i = 1; i <= n; ++i) {
            int c0 = 3 * (i - 1), a = 3 * i - 2, b = 3 * i - 1, c1 = 3 * i;
            edges.push_back({c0, a});
            edges.push_back({a, c1});
            edges.push_back({c0, b});
            edges.push_back({b, c1});
        }
        return Graph::build(3 * n + 1, edges);
    }
    case Family::ortho_square_chain: {
        require(n >= 1, "ortho_square_chain needs n >= 1");
        for (int i = 1; i <= n; ++i) {
            int c0 = 3 * (i - 1), u = 3 * i - 2, w = 3 * i - 1, c1 = 3 * i;
            edges.push_back({c0, c1});
            edges.push_back({c1, u});
            edges.push_back({u, w});
            edges.push_back({w, c0});
        }
        return Graph::build(3 * n + 1, edges);
    }
    }
    throw ParamOutOfRangeError("unknown family");
}

} // namespace idb
