#include "idb/census.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "idb/graph6.hpp"
#include "idb/json_io.hpp"
#include "parallel_util.hpp"

namespace idb {

std::vector<Graph> all_labeled_graphs(int n) {
    if (n < 0 || n > 6)
        throw ParamOutOfRangeError("built-in enumerator supports 0 <= n <= 6");
    // pair i in column-major order: (u, v) with i = v(v-1)/2 + u
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.push_back({u, v});
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Graph> out;
    out.reserve(total);
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1) edges.push_back(pairs[i]);
        out.push_back(Graph::build(n, edges));
    }
    return out;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
    return Graph::build(g.vertex_count(), edges);
}

std::string canonical_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw ParamOutOfRangeError("exhaustive canonization supports n <= 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best = write_graph6(g);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, write_graph6(permuted(g, perm)));
    return best;
}

namespace {

CensusRecord make_record(const Graph& g, const CensusOptions& opts) {
    CensusRecord rec;
    rec.graph6 = write_graph6(g);
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.delta_min = rec.n == 0 ? 0 : degree_stats(g).delta_min;
    try {
        if (opts.with_gamma) rec.gamma = domination_number(g, opts.budget).size;
        if (opts.with_gamma_i) rec.gamma_i = gamma_i(g, opts.budget).size;
        if (opts.with_alpha) rec.alpha = independence_number(g, opts.budget).size;
    } catch (const BudgetExceededError&) {
        rec.status = "budget_exceeded";
        return rec;
    }
    if (!opts.with_bondage) {
        rec.b_id_note = "skipped";
    } else if (rec.m == 0) {
        rec.b_id_note = "undef";
    } else {
        try {
            BondageCertificate cert = bondage_id(g, opts.budget);
            rec.b_id = cert.k;
            rec.bondage_witness = cert.removed;
        } catch (const BudgetExceededError&) {
            rec.b_id_note = "budget_exceeded";
            rec.status = "budget_exceeded";
        }
    }
    return rec;
}

std::string witness_to_string(const std::optional<EdgeSet>& w) {
    if (!w) return "";
    std::string s;
    for (const Edge& e : *w) {
        if (!s.empty()) s += ";";
        s += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return s;
}

std::string opt_to_string(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "";
}

} // namespace

std::vector<CensusRecord> census(const std::vector<Graph>& graphs, const CensusOptions& opts) {
    std::vector<const Graph*> selected;
    selected.reserve(graphs.size());
    if (opts.dedup) {
        std::unordered_set<std::string> seen;
        for (const Graph& g : graphs)
            if (seen.insert(canonical_graph6(g)).second) selected.push_back(&g);
    } else {
        for (const Graph& g : graphs) selected.push_back(&g);
    }

    std::vector<CensusRecord> records(selected.size());
    detail::parallel_for_indexed(selected.size(), opts.threads,
                                 [&](std::size_t i) { records[i] = make_record(*selected[i], opts); });
    return records;
}

std::string census_to_csv(const std::vector<CensusRecord>& records) {
    std::string out = "graph6,n,m,delta_min,gamma,gamma_i,alpha,b_id,bondage_witness,status\n";
    for (const CensusRecord& r : records) {
        out += r.graph6 + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
               std::to_string(r.delta_min) + "," + opt_to_string(r.gamma) + "," +
               opt_to_string(r.gamma_i) + "," + opt_to_string(r.alpha) + ",";
        out += r.b_id ? std::to_string(*r.b_id) : r.b_id_note;
        out += "," + witness_to_string(r.bondage_witness) + "," + r.status + "\n";
    }
    return out;
}

std::string census_to_json(const std::vector<CensusRecord>& records) {
    Json arr = Json::array();
    for (const CensusRecord& r : records) {
        Json row{{"graph6", r.graph6}, {"n", r.n}, {"m", r.m}, {"delta_min", r.delta_min}};
        row["gamma"] = r.gamma ? Json(*r.gamma) : Json(nullptr);
        row["gamma_i"] = r.gamma_i ? Json(*r.gamma_i) : Json(nullptr);
        row["alpha"] = r.alpha ? Json(*r.alpha) : Json(nullptr);
        row["b_id"] = r.b_id ? Json(*r.b_id) : (r.b_id_note.empty() ? Json(nullptr) : Json(r.b_id_note));
        row["bondage_witness"] = r.bondage_witness ? to_json(*r.bondage_witness) : Json(nullptr);
        row["status"] = r.status;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + "\n";
}

} // namespace idb
