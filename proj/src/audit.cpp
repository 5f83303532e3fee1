#include "idb/audit.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "idb/bondage.hpp"
#include "idb/census.hpp"
#include "idb/families.hpp"
#include "idb/graph6.hpp"
#include "idb/products.hpp"
#include "parallel_util.hpp"

namespace idb {

namespace {

int iceil(int a, int b) { return (a + b - 1) / b; }

// Shared per-run solver results, keyed by the graph6 string of the labeled
// graph. Values are deterministic, so caching never changes a verdict.
class AuditContext {
public:
    explicit AuditContext(Budget budget) : budget_(budget) {}

    IdsResult gamma_i_of(const Graph& g) {
        const std::string key = write_graph6(g);
        {
            std::lock_guard<std::mutex> lk(mutex_);
            auto it = gi_.find(key);
            if (it != gi_.end()) return it->second;
        }
        IdsResult r = gamma_i(g, budget_);
        std::lock_guard<std::mutex> lk(mutex_);
        return gi_.emplace(key, r).first->second;
    }

    // nullopt: b_id undefined (edgeless graph)
    std::optional<BondageCertificate> bondage_of(const Graph& g) {
        if (g.edge_count() == 0) return std::nullopt;
        const std::string key = write_graph6(g);
        {
            std::lock_guard<std::mutex> lk(mutex_);
            auto it = bid_.find(key);
            if (it != bid_.end()) return it->second;
        }
        BondageCertificate cert = bondage_id(g, budget_);
        std::lock_guard<std::mutex> lk(mutex_);
        return bid_.emplace(key, cert).first->second;
    }

private:
    Budget budget_;
    std::mutex mutex_;
    std::unordered_map<std::string, IdsResult> gi_;
    std::unordered_map<std::string, std::optional<BondageCertificate>> bid_;
};

const std::vector<Claim>& catalog() {
    static const std::vector<Claim> claims = {
        {"STAR-B", ClaimKind::equality, "stars K_{1,n}, n >= 1", "b_id(K_{1,n}) = 1"},
        {"KMN-B", ClaimKind::equality, "complete bipartite K_{m,n}, 1 <= m <= n",
         "b_id(K_{m,n}) = min(m, n)"},
        {"FRIEND-GI", ClaimKind::equality, "friendship graphs F_n, n >= 1", "gamma_i(F_n) = 1"},
        {"FLOWER-GI", ClaimKind::equality, "generalized friendship F_{q,n}, q in {4,5,6}, n >= 1",
         "gamma_i(F_{q,n}) = n + 1"},
        {"BOOK-GI", ClaimKind::equality, "books B_n, n >= 2", "gamma_i(B_n) = n"},
        {"FRIEND-B", ClaimKind::equality, "friendship graphs F_n, n >= 1", "b_id(F_n) = 2"},
        {"FLOWER-B", ClaimKind::equality, "generalized friendship F_{q,n}, q in {4,5,6}, n >= 1",
         "b_id(F_{q,n}) = 3"},
        {"BOOK-B", ClaimKind::equality, "books B_n, n >= 2", "b_id(B_n) = 3"},
        {"GAP", ClaimKind::existential, "instance check on K_n vs K_{1,n-1}, n >= 3",
         "|b_id(K_n) - b_id(K_{1,n-1})| = n - 2"},
        {"PC-GI", ClaimKind::equality, "paths P_n (n >= 1) and cycles C_n (n >= 3)",
         "gamma_i(P_n) = gamma_i(C_n) = ceil(n/3)"},
        {"DELTA", ClaimKind::upper_bound, "labeled census, n <= min(max_n, 5)",
         "b_id(G) <= delta(G) + 1"},
        {"PATH-B", ClaimKind::equality, "paths P_n, n >= 2",
         "b_id(P_n) = 2 if n = 1 (mod 3), else 1"},
        {"CYCLE-B", ClaimKind::equality, "cycles C_n, n >= 3",
         "b_id(C_n) = 3 if n = 1 (mod 3), else 2"},
        {"KN-GI", ClaimKind::equality, "complete graphs K_n, n >= 1", "gamma_i(K_n) = 1"},
        {"KN-B", ClaimKind::equality, "complete graphs K_n, n >= 1", "b_id(K_n) = n - 1"},
        {"TRI-GI", ClaimKind::equality, "triangular chains T_n, n >= 1", "gamma_i(T_n) = n"},
        {"TRI-B", ClaimKind::equality, "triangular chains T_n, n >= 1", "b_id(T_n) = 2"},
        {"SQ-GI", ClaimKind::equality, "square chains Q_n and O_n, n >= 1",
         "gamma_i(Q_n) = gamma_i(O_n) = ceil(n/2)"},
        {"PARA-B", ClaimKind::equality, "para square chains Q_n, n >= 1", "b_id(Q_n) = 2"},
        {"ORTHO-B", ClaimKind::equality, "ortho square chains O_n, n >= 1", "b_id(O_n) = 2"},
        {"EDGE-DEL", ClaimKind::upper_bound,
         "labeled census with n <= min(max_n, 5), every edge e", "b_id(G) <= b_id(G - e) + 1"},
        {"EDGE-DEL-S", ClaimKind::upper_bound,
         "labeled census with n <= min(max_n, 4), every edge pair",
         "b_id(G) <= b_id(G - e_1 - ... - e_s) + s"},
        {"ORDER", ClaimKind::upper_bound, "labeled census, n <= min(max_n, 5)",
         "b_id(G) <= n + 1 - 2*gamma_i(G)"},
        {"ORDER-COR", ClaimKind::equality,
         "labeled census, n <= min(max_n, 5), graphs with b_id(G) = n - 1",
         "b_id(G) = n - 1 implies gamma_i(G) = 1"},
        {"MINMAX", ClaimKind::upper_bound,
         "labeled census, n <= min(max_n, 5), graphs with gamma_i(G) >= 2",
         "b_id(G) <= min(delta(G) + 1, n - delta(G) - 1)"},
        {"COMPL-1", ClaimKind::upper_bound,
         "labeled census, n <= min(max_n, 5), gamma_i(G) = 1 or gamma_i(G^c) = 1",
         "b_id(G) + b_id(G^c) <= n + 1"},
        {"NG", ClaimKind::upper_bound,
         "labeled census, n <= min(max_n, 5), gamma_i(G) >= 2 and gamma_i(G^c) >= 2",
         "b_id(G) + b_id(G^c) <= n if n is even, n - 1 if n is odd"},
        {"JOIN-GI", ClaimKind::equality,
         "ordered pairs: connected census up to 4 vertices plus family spine",
         "gamma_i(join(G,H)) = min(gamma_i(G), gamma_i(H))"},
        {"JOIN-B", ClaimKind::equality,
         "ordered pairs: connected census up to 4 vertices plus family spine, both with edges",
         "b_id(join(G,H)) = min(b_id(G), b_id(H))"},
        {"LEX-GI", ClaimKind::equality, "ordered pairs of labeled graphs on 1..3 vertices",
         "gamma_i(lex(G,H)) = gamma_i(G) * gamma_i(H)"},
        {"LEX-B", ClaimKind::equality,
         "ordered pairs of labeled graphs on 1..3 vertices, both with edges",
         "b_id(lex(G,H)) = min(b_id(G), b_id(H))"},
        {"CORONA-GI", ClaimKind::equality,
         "pairs: connected G on 1..3 vertices, labeled H on 1..4 vertices",
         "gamma_i(corona(G,H)) = |V(G)| * gamma_i(H)"},
        {"CORONA-B", ClaimKind::upper_bound,
         "pairs: connected G on 1..3 vertices, labeled H on 1..4 vertices with an edge",
         "b_id(corona(G,H)) <= |V(G)| * b_id(H)"},
    };
    return claims;
}

int require_int(const std::optional<int>& v, const std::string& claim, const std::string& field) {
    if (!v) throw BindingOutOfScopeError(claim + " needs parameter " + field);
    return *v;
}

Graph require_graph(const std::optional<std::string>& g6, const std::string& claim,
                    const std::string& field) {
    if (!g6) throw BindingOutOfScopeError(claim + " needs graph parameter " + field);
    return parse_graph6(*g6);
}

void require_range(bool ok, const std::string& claim, const std::string& what) {
    if (!ok) throw BindingOutOfScopeError(claim + ": binding outside scope (" + what + ")");
}

void validate_binding(const Claim& c, const Binding& b) {
    const std::string& id = c.id;
    if (id == "STAR-B" || id == "FRIEND-GI" || id == "FRIEND-B" || id == "KN-GI" ||
        id == "KN-B" || id == "TRI-GI" || id == "TRI-B" || id == "SQ-GI" || id == "PARA-B" ||
        id == "ORTHO-B" || id == "PC-GI") {
        require_range(require_int(b.n, id, "n") >= 1, id, "n >= 1");
    } else if (id == "KMN-B") {
        require_range(require_int(b.m, id, "m") >= 1 && require_int(b.n, id, "n") >= 1, id,
                      "m, n >= 1");
    } else if (id == "FLOWER-GI" || id == "FLOWER-B") {
        const int q = require_int(b.q, id, "q");
        require_range(q >= 4 && q <= 6, id, "q in {4,5,6}");
        require_range(require_int(b.n, id, "n") >= 1, id, "n >= 1");
    } else if (id == "BOOK-GI" || id == "BOOK-B") {
        require_range(require_int(b.n, id, "n") >= 2, id, "n >= 2");
    } else if (id == "GAP") {
        require_range(require_int(b.n, id, "n") >= 3, id, "n >= 3");
    } else if (id == "PATH-B") {
        require_range(require_int(b.n, id, "n") >= 2, id, "n >= 2");
    } else if (id == "CYCLE-B") {
        require_range(require_int(b.n, id, "n") >= 3, id, "n >= 3");
    } else if (id == "DELTA" || id == "ORDER" || id == "ORDER-COR" || id == "MINMAX" ||
               id == "COMPL-1" || id == "NG") {
        require_graph(b.g, id, "g");
    } else if (id == "EDGE-DEL" || id == "EDGE-DEL-S") {
        require_graph(b.g, id, "g");
        if (!b.edges || b.edges->empty())
            throw BindingOutOfScopeError(id + " needs a nonempty edge list");
        if (id == "EDGE-DEL" && b.edges->size() != 1)
            throw BindingOutOfScopeError("EDGE-DEL takes exactly one edge");
    } else if (id == "JOIN-GI" || id == "JOIN-B" || id == "LEX-GI" || id == "LEX-B" ||
               id == "CORONA-GI" || id == "CORONA-B") {
        require_graph(b.g, id, "g");
        require_graph(b.h, id, "h");
    }
}

struct Eval {
    const Claim& claim;
    const Binding& binding;
    AuditContext& ctx;

    ClaimVerdict verdict(VerdictStatus st, Json expected, Json computed, Json witness) const {
        return ClaimVerdict{claim.id, binding, st, std::move(expected), std::move(computed),
                            std::move(witness)};
    }
    ClaimVerdict not_applicable(const std::string& reason) const {
        return verdict(VerdictStatus::not_applicable, nullptr, nullptr, Json{{"reason", reason}});
    }

    ClaimVerdict gi_equality(const Graph& g, int expected) const {
        IdsResult r = ctx.gamma_i_of(g);
        return verdict(r.size == expected ? VerdictStatus::confirmed : VerdictStatus::refuted,
                       expected, r.size,
                       Json{{"graph6", write_graph6(g)}, {"i_set", to_json(r.witness)}});
    }

    ClaimVerdict bid_equality(const Graph& g, int expected) const {
        auto cert = ctx.bondage_of(g);
        if (!cert) return not_applicable("b_id undefined: graph has no edges");
        return verdict(cert->k == expected ? VerdictStatus::confirmed : VerdictStatus::refuted,
                       expected, cert->k,
                       Json{{"graph6", write_graph6(g)}, {"certificate", to_json(*cert)}});
    }

    ClaimVerdict bid_bound(const Graph& g, int bound, Json witness_extra) const {
        auto cert = ctx.bondage_of(g);
        if (!cert) return not_applicable("b_id undefined: graph has no edges");
        Json witness{{"graph6", write_graph6(g)}, {"certificate", to_json(*cert)}};
        witness.update(witness_extra);
        return verdict(cert->k <= bound ? VerdictStatus::confirmed : VerdictStatus::refuted,
                       Json{{"bound", bound}}, cert->k, std::move(witness));
    }
};

Graph fam(Family f, int n, int m = 0, int q = 0) { return make_family({f, n, m, q}); }

ClaimVerdict evaluate_binding(const Claim& claim, const Binding& b, AuditContext& ctx) {
    const std::string& id = claim.id;
    Eval ev{claim, b, ctx};

    if (id == "STAR-B") return ev.bid_equality(fam(Family::star, *b.n), 1);
    if (id == "KMN-B")
        return ev.bid_equality(fam(Family::complete_bipartite, *b.n, *b.m), std::min(*b.m, *b.n));
    if (id == "FRIEND-GI") return ev.gi_equality(fam(Family::friendship, *b.n), 1);
    if (id == "FLOWER-GI")
        return ev.gi_equality(fam(Family::gen_friendship, *b.n, 0, *b.q), *b.n + 1);
    if (id == "BOOK-GI") return ev.gi_equality(fam(Family::book, *b.n), *b.n);
    if (id == "FRIEND-B") return ev.bid_equality(fam(Family::friendship, *b.n), 2);
    if (id == "FLOWER-B") return ev.bid_equality(fam(Family::gen_friendship, *b.n, 0, *b.q), 3);
    if (id == "BOOK-B") return ev.bid_equality(fam(Family::book, *b.n), 3);

    if (id == "GAP") {
        const int n = *b.n;
        auto complete_cert = ctx.bondage_of(fam(Family::complete, n));
        auto star_cert = ctx.bondage_of(fam(Family::star, n - 1));
        const int gap = std::abs(complete_cert->k - star_cert->k);
        return ev.verdict(gap == n - 2 ? VerdictStatus::confirmed : VerdictStatus::refuted, n - 2,
                          gap,
                          Json{{"b_id_complete", complete_cert->k}, {"b_id_star", star_cert->k},
                               {"complete_certificate", to_json(*complete_cert)},
                               {"star_certificate", to_json(*star_cert)}});
    }

    if (id == "PC-GI") {
        const int n = *b.n;
        const int expected = iceil(n, 3);
        IdsResult pr = ctx.gamma_i_of(fam(Family::path, n));
        Json computed{{"path", pr.size}};
        bool ok = pr.size == expected;
        if (n >= 3) {
            IdsResult cr = ctx.gamma_i_of(fam(Family::cycle, n));
            computed["cycle"] = cr.size;
            ok = ok && cr.size == expected;
        } else {
            computed["cycle"] = nullptr;
        }
        return ev.verdict(ok ? VerdictStatus::confirmed : VerdictStatus::refuted, expected,
                          computed, Json{{"path_graph6", write_graph6(fam(Family::path, n))}});
    }

    if (id == "PATH-B")
        return ev.bid_equality(fam(Family::path, *b.n), *b.n % 3 == 1 ? 2 : 1);
    if (id == "CYCLE-B")
        return ev.bid_equality(fam(Family::cycle, *b.n), *b.n % 3 == 1 ? 3 : 2);
    if (id == "KN-GI") return ev.gi_equality(fam(Family::complete, *b.n), 1);
    if (id == "KN-B") return ev.bid_equality(fam(Family::complete, *b.n), *b.n - 1);
    if (id == "TRI-GI") return ev.gi_equality(fam(Family::tri_chain, *b.n), *b.n);
    if (id == "TRI-B") return ev.bid_equality(fam(Family::tri_chain, *b.n), 2);

    if (id == "SQ-GI") {
        const int n = *b.n;
        const int expected = iceil(n, 2);
        Graph para = fam(Family::para_square_chain, n);
        Graph ortho = fam(Family::ortho_square_chain, n);
        IdsResult pr = ctx.gamma_i_of(para);
        IdsResult orr = ctx.gamma_i_of(ortho);
        const bool ok = pr.size == expected && orr.size == expected;
        return ev.verdict(ok ? VerdictStatus::confirmed : VerdictStatus::refuted, expected,
                          Json{{"para", pr.size}, {"ortho", orr.size}},
                          Json{{"para_graph6", write_graph6(para)},
                               {"ortho_graph6", write_graph6(ortho)},
                               {"para_i_set", to_json(pr.witness)},
                               {"ortho_i_set", to_json(orr.witness)}});
    }

    if (id == "PARA-B") return ev.bid_equality(fam(Family::para_square_chain, *b.n), 2);
    if (id == "ORTHO-B") return ev.bid_equality(fam(Family::ortho_square_chain, *b.n), 2);

    if (id == "DELTA") {
        Graph g = parse_graph6(*b.g);
        if (g.edge_count() == 0) return ev.not_applicable("b_id undefined: graph has no edges");
        const int bound = degree_stats(g).delta_min + 1;
        return ev.bid_bound(g, bound, Json::object());
    }

    if (id == "EDGE-DEL" || id == "EDGE-DEL-S") {
        Graph g = parse_graph6(*b.g);
        const int s = static_cast<int>(b.edges->size());
        Graph stripped = g.without_edges(EdgeSet::from(*b.edges));
        if (stripped.edge_count() == 0)
            return ev.not_applicable("b_id undefined on G minus the bound edges");
        auto cert = ctx.bondage_of(g);
        auto cert_stripped = ctx.bondage_of(stripped);
        const int bound = cert_stripped->k + s;
        return ev.verdict(cert->k <= bound ? VerdictStatus::confirmed : VerdictStatus::refuted,
                          Json{{"bound", bound}}, cert->k,
                          Json{{"graph6", write_graph6(g)},
                               {"stripped_graph6", write_graph6(stripped)},
                               {"certificate", to_json(*cert)},
                               {"stripped_certificate", to_json(*cert_stripped)}});
    }

    if (id == "ORDER") {
        Graph g = parse_graph6(*b.g);
        if (g.edge_count() == 0) return ev.not_applicable("b_id undefined: graph has no edges");
        const int bound = g.vertex_count() + 1 - 2 * ctx.gamma_i_of(g).size;
        return ev.bid_bound(g, bound, Json{{"gamma_i", ctx.gamma_i_of(g).size}});
    }

    if (id == "ORDER-COR") {
        Graph g = parse_graph6(*b.g);
        if (g.vertex_count() < 2) return ev.not_applicable("statement requires order n >= 2");
        if (g.edge_count() == 0) return ev.not_applicable("b_id undefined: graph has no edges");
        auto cert = ctx.bondage_of(g);
        if (cert->k != g.vertex_count() - 1)
            return ev.not_applicable("hypothesis b_id(G) = n - 1 not met");
        IdsResult r = ctx.gamma_i_of(g);
        return ev.verdict(r.size == 1 ? VerdictStatus::confirmed : VerdictStatus::refuted, 1,
                          r.size,
                          Json{{"graph6", write_graph6(g)}, {"certificate", to_json(*cert)}});
    }

    if (id == "MINMAX") {
        Graph g = parse_graph6(*b.g);
        if (g.edge_count() == 0) return ev.not_applicable("b_id undefined: graph has no edges");
        const int gi = ctx.gamma_i_of(g).size;
        if (gi < 2) return ev.not_applicable("hypothesis gamma_i(G) >= 2 not met");
        const int delta = degree_stats(g).delta_min;
        const int bound = std::min(delta + 1, g.vertex_count() - delta - 1);
        return ev.bid_bound(g, bound, Json{{"gamma_i", gi}});
    }

    if (id == "COMPL-1" || id == "NG") {
        Graph g = parse_graph6(*b.g);
        Graph gc = g.complemented();
        const int n = g.vertex_count();
        if (n == 0) return ev.not_applicable("empty graph");
        const int gi = ctx.gamma_i_of(g).size;
        const int gic = ctx.gamma_i_of(gc).size;
        if (id == "COMPL-1" && !(gi == 1 || gic == 1))
            return ev.not_applicable("hypothesis gamma_i(G) = 1 or gamma_i(G^c) = 1 not met");
        if (id == "NG" && !(gi >= 2 && gic >= 2))
            return ev.not_applicable("hypothesis gamma_i >= 2 on both G and G^c not met");
        if (g.edge_count() == 0) return ev.not_applicable("b_id undefined: G has no edges");
        if (gc.edge_count() == 0)
            return ev.not_applicable("b_id undefined: complement has no edges");
        auto cert = ctx.bondage_of(g);
        auto certc = ctx.bondage_of(gc);
        const int sum = cert->k + certc->k;
        const int bound = id == "COMPL-1" ? n + 1 : (n % 2 == 0 ? n : n - 1);
        return ev.verdict(sum <= bound ? VerdictStatus::confirmed : VerdictStatus::refuted,
                          Json{{"bound", bound}}, sum,
                          Json{{"graph6", write_graph6(g)},
                               {"complement_graph6", write_graph6(gc)},
                               {"b_id", cert->k},
                               {"b_id_complement", certc->k}});
    }

    if (id == "JOIN-GI" || id == "JOIN-B" || id == "LEX-GI" || id == "LEX-B" ||
        id == "CORONA-GI" || id == "CORONA-B") {
        Graph g = parse_graph6(*b.g);
        Graph h = parse_graph6(*b.h);
        Json pair{{"g_graph6", *b.g}, {"h_graph6", *b.h}};

        if (id == "JOIN-GI") {
            if (g.vertex_count() == 0 || h.vertex_count() == 0)
                return ev.not_applicable("join claim needs operands with at least one vertex");
            const int left = ctx.gamma_i_of(join(g, h)).size;
            const int right = std::min(ctx.gamma_i_of(g).size, ctx.gamma_i_of(h).size);
            return ev.verdict(left == right ? VerdictStatus::confirmed : VerdictStatus::refuted,
                              right, left, pair);
        }
        if (id == "JOIN-B" || id == "LEX-B") {
            if (g.edge_count() == 0 || h.edge_count() == 0)
                return ev.not_applicable("bondage claim needs operands with edges");
            Graph product = id == "JOIN-B" ? join(g, h) : lexicographic(g, h);
            auto cert = ctx.bondage_of(product);
            const int right = std::min(ctx.bondage_of(g)->k, ctx.bondage_of(h)->k);
            pair["certificate"] = to_json(*cert);
            return ev.verdict(cert->k == right ? VerdictStatus::confirmed : VerdictStatus::refuted,
                              right, cert->k, pair);
        }
        if (id == "LEX-GI") {
            const int left = ctx.gamma_i_of(lexicographic(g, h)).size;
            const int right = ctx.gamma_i_of(g).size * ctx.gamma_i_of(h).size;
            return ev.verdict(left == right ? VerdictStatus::confirmed : VerdictStatus::refuted,
                              right, left, pair);
        }
        if (id == "CORONA-GI") {
            if (g.vertex_count() == 0) return ev.not_applicable("corona needs a base vertex");
            const int left = ctx.gamma_i_of(corona(g, h)).size;
            const int right = g.vertex_count() * ctx.gamma_i_of(h).size;
            return ev.verdict(left == right ? VerdictStatus::confirmed : VerdictStatus::refuted,
                              right, left, pair);
        }
        // CORONA-B
        if (g.vertex_count() == 0) return ev.not_applicable("corona needs a base vertex");
        if (h.edge_count() == 0) return ev.not_applicable("b_id(H) undefined: H has no edges");
        auto cert = ctx.bondage_of(corona(g, h));
        const int bound = g.vertex_count() * ctx.bondage_of(h)->k;
        pair["certificate"] = to_json(*cert);
        return ev.verdict(cert->k <= bound ? VerdictStatus::confirmed : VerdictStatus::refuted,
                          Json{{"bound", bound}}, cert->k, pair);
    }

    throw UnknownClaimError("no evaluator for claim " + id);
}

ClaimVerdict evaluate_guarded(const Claim& claim, const Binding& b, AuditContext& ctx) {
    try {
        return evaluate_binding(claim, b, ctx);
    } catch (const BudgetExceededError& e) {
        return ClaimVerdict{claim.id, b, VerdictStatus::budget_exceeded, nullptr, nullptr,
                            Json{{"reason", e.what()}}};
    }
}

// ---- sweeps ----

Binding bind_n(int n) {
    Binding b;
    b.n = n;
    return b;
}

Binding bind_graph(const Graph& g) {
    Binding b;
    b.g = write_graph6(g);
    return b;
}

Binding bind_pair(const Graph& g, const Graph& h) {
    Binding b;
    b.g = write_graph6(g);
    b.h = write_graph6(h);
    return b;
}

std::vector<Graph> labeled_pool(int nmin, int nmax) {
    std::vector<Graph> pool;
    for (int n = nmin; n <= nmax; ++n)
        for (Graph& g : all_labeled_graphs(n)) pool.push_back(std::move(g));
    return pool;
}

std::vector<Graph> connected_pool(int nmin, int nmax) {
    std::vector<Graph> pool;
    for (Graph& g : labeled_pool(nmin, nmax))
        if (components(g).size() == 1) pool.push_back(std::move(g));
    return pool;
}

// paths, cycles, completes and stars of each size: lets pair sweeps reach
// operands beyond the exhaustive 4-vertex census
std::vector<Graph> family_spine(int size_min, int size_max) {
    std::vector<Graph> pool;
    for (int s = size_min; s <= size_max; ++s) {
        pool.push_back(fam(Family::path, s));
        if (s >= 3) pool.push_back(fam(Family::cycle, s));
        pool.push_back(fam(Family::complete, s));
        pool.push_back(fam(Family::star, s - 1));
    }
    return pool;
}

std::vector<Binding> sweep_bindings(const Claim& claim, int max_n) {
    const std::string& id = claim.id;
    std::vector<Binding> out;
    const auto n_sweep = [&](int lo, auto size_of) {
        for (int n = lo; size_of(n) <= max_n; ++n) out.push_back(bind_n(n));
    };

    if (id == "STAR-B") n_sweep(1, [](int n) { return n + 1; });
    else if (id == "KMN-B") {
        for (int total = 2; total <= max_n; ++total)
            for (int m = 1; m <= total - m; ++m) {
                Binding b;
                b.m = m;
                b.n = total - m;
                out.push_back(b);
            }
    } else if (id == "FRIEND-GI" || id == "FRIEND-B") n_sweep(1, [](int n) { return 2 * n + 1; });
    else if (id == "FLOWER-GI" || id == "FLOWER-B") {
        for (int q = 4; q <= 6; ++q)
            for (int n = 1; n * (q - 1) + 1 <= max_n; ++n) {
                Binding b;
                b.q = q;
                b.n = n;
                out.push_back(b);
            }
    } else if (id == "BOOK-GI" || id == "BOOK-B") n_sweep(2, [](int n) { return 2 * n + 2; });
    else if (id == "GAP") n_sweep(3, [](int n) { return n; });
    else if (id == "PC-GI") n_sweep(1, [](int n) { return n; });
    else if (id == "PATH-B") n_sweep(2, [](int n) { return n; });
    else if (id == "CYCLE-B") n_sweep(3, [](int n) { return n; });
    else if (id == "KN-GI") n_sweep(1, [](int n) { return n; });
    else if (id == "KN-B") n_sweep(1, [](int n) { return n; });
    else if (id == "TRI-GI" || id == "TRI-B") n_sweep(1, [](int n) { return 2 * n + 1; });
    else if (id == "SQ-GI" || id == "PARA-B" || id == "ORTHO-B")
        n_sweep(1, [](int n) { return 3 * n + 1; });
    else if (id == "DELTA" || id == "ORDER" || id == "ORDER-COR" || id == "MINMAX" ||
             id == "COMPL-1" || id == "NG") {
        for (const Graph& g : labeled_pool(1, std::min(max_n, 5))) out.push_back(bind_graph(g));
    } else if (id == "EDGE-DEL") {
        for (const Graph& g : labeled_pool(1, std::min(max_n, 5)))
            for (const Edge& e : g.edges()) {
                Binding b = bind_graph(g);
                b.edges = std::vector<Edge>{e};
                out.push_back(b);
            }
    } else if (id == "EDGE-DEL-S") {
        for (const Graph& g : labeled_pool(1, std::min(max_n, 4))) {
            const auto edges = g.edges();
            for (std::size_t i = 0; i < edges.size(); ++i)
                for (std::size_t j = i + 1; j < edges.size(); ++j) {
                    Binding b = bind_graph(g);
                    b.edges = std::vector<Edge>{edges[i], edges[j]};
                    b.s = 2;
                    out.push_back(b);
                }
        }
    } else if (id == "JOIN-GI" || id == "JOIN-B") {
        std::vector<Graph> pool = connected_pool(1, std::min(4, max_n - 1));
        if (max_n >= 7)
            for (Graph& g : family_spine(5, std::min(6, max_n - 2))) pool.push_back(std::move(g));
        for (const Graph& g : pool)
            for (const Graph& h : pool)
                if (g.vertex_count() + h.vertex_count() <= max_n)
                    out.push_back(bind_pair(g, h));
    } else if (id == "LEX-GI" || id == "LEX-B") {
        std::vector<Graph> pool = labeled_pool(1, std::min(3, max_n));
        for (const Graph& g : pool)
            for (const Graph& h : pool)
                if (g.vertex_count() * h.vertex_count() <= max_n) out.push_back(bind_pair(g, h));
    } else if (id == "CORONA-GI" || id == "CORONA-B") {
        std::vector<Graph> base = connected_pool(1, std::min(3, max_n));
        std::vector<Graph> tail = labeled_pool(1, std::min(4, max_n));
        for (const Graph& g : base)
            for (const Graph& h : tail)
                if (g.vertex_count() * (1 + h.vertex_count()) <= max_n)
                    out.push_back(bind_pair(g, h));
    }
    return out;
}

} // namespace

std::string to_string(ClaimKind k) {
    switch (k) {
    case ClaimKind::equality: return "equality";
    case ClaimKind::upper_bound: return "upper_bound";
    case ClaimKind::existential: return "existential";
    }
    return "?";
}

std::string to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::confirmed: return "CONFIRMED";
    case VerdictStatus::refuted: return "REFUTED";
    case VerdictStatus::not_applicable: return "NOT_APPLICABLE";
    case VerdictStatus::budget_exceeded: return "BUDGET_EXCEEDED";
    }
    return "?";
}

Json Binding::to_json() const {
    Json j = Json::object();
    if (n) j["n"] = *n;
    if (m) j["m"] = *m;
    if (q) j["q"] = *q;
    if (s) j["s"] = *s;
    if (g) j["g"] = *g;
    if (h) j["h"] = *h;
    if (edges) {
        Json arr = Json::array();
        for (const Edge& e : *edges) arr.push_back(Json::array({e.u, e.v}));
        j["edges"] = arr;
    }
    return j;
}

Json ClaimVerdict::to_json() const {
    return Json{{"params", binding.to_json()},
                {"status", to_string(status)},
                {"expected", expected},
                {"computed", computed},
                {"witness", witness}};
}

const std::vector<Claim>& claims_catalog() { return catalog(); }

const Claim& claim_by_id(const std::string& id) {
    for (const Claim& c : catalog())
        if (c.id == id) return c;
    throw UnknownClaimError("unknown claim id: " + id);
}

ClaimVerdict check_claim(const std::string& id, const Binding& binding, Budget budget) {
    const Claim& claim = claim_by_id(id);
    validate_binding(claim, binding);
    AuditContext ctx(budget);
    return evaluate_guarded(claim, binding, ctx);
}

AuditReport run_audit(const AuditOptions& opts) {
    std::vector<const Claim*> selected;
    if (opts.ids.empty()) {
        for (const Claim& c : catalog()) selected.push_back(&c);
    } else {
        for (const std::string& id : opts.ids) selected.push_back(&claim_by_id(id));
    }

    AuditReport report;
    report.notes = {
        "Claims are audited as hypotheses; computed values are ground truth.",
        "COMPL-1: the mixed b_i/b_id notation in the complement-sum statement is read as b_id "
        "on both sides.",
        "Chain families T_n, Q_n, O_n are indexed by block count under the published labelings.",
        "JOIN-GI reads 'nonempty' as 'has a vertex'; bondage pair claims additionally require "
        "edges on both operands (NOT_APPLICABLE otherwise).",
        "Census-scope sweeps cap at n <= 5 (n <= 4 for EDGE-DEL-S); family and pair sweeps are "
        "bounded by max_n vertices per evaluated graph.",
    };

    AuditContext ctx(opts.budget);
    for (const Claim* claim : selected) {
        ClaimReport cr;
        cr.claim = *claim;
        const std::vector<Binding> bindings = sweep_bindings(*claim, opts.max_n);
        cr.verdicts.resize(bindings.size());
        detail::parallel_for_indexed(bindings.size(), opts.threads, [&](std::size_t i) {
            cr.verdicts[i] = evaluate_guarded(*claim, bindings[i], ctx);
        });
        for (const ClaimVerdict& v : cr.verdicts) {
            switch (v.status) {
            case VerdictStatus::confirmed: ++cr.confirmed; break;
            case VerdictStatus::refuted: ++cr.refuted; break;
            case VerdictStatus::not_applicable: ++cr.not_applicable; break;
            case VerdictStatus::budget_exceeded: ++cr.budget_exceeded; break;
            }
        }
        report.claims.push_back(std::move(cr));
    }
    return report;
}

Json AuditReport::to_json() const {
    Json claims_json = Json::array();
    int confirmed = 0, refuted = 0, na = 0, budget = 0, bindings = 0;
    for (const ClaimReport& cr : claims) {
        Json rows = Json::array();
        Json first_refuted = nullptr;
        for (const ClaimVerdict& v : cr.verdicts) {
            rows.push_back(v.to_json());
            if (first_refuted.is_null() && v.status == VerdictStatus::refuted)
                first_refuted = v.to_json();
        }
        claims_json.push_back(Json{{"claim_id", cr.claim.id},
                                   {"kind", to_string(cr.claim.kind)},
                                   {"scope", cr.claim.scope},
                                   {"statement", cr.claim.statement},
                                   {"bindings", rows},
                                   {"summary",
                                    Json{{"confirmed", cr.confirmed},
                                         {"refuted", cr.refuted},
                                         {"not_applicable", cr.not_applicable},
                                         {"budget_exceeded", cr.budget_exceeded},
                                         {"first_refuted", first_refuted}}}});
        confirmed += cr.confirmed;
        refuted += cr.refuted;
        na += cr.not_applicable;
        budget += cr.budget_exceeded;
        bindings += static_cast<int>(cr.verdicts.size());
    }
    return Json{{"notes", notes},
                {"claims", claims_json},
                {"totals", Json{{"claims", claims.size()},
                                {"bindings", bindings},
                                {"confirmed", confirmed},
                                {"refuted", refuted},
                                {"not_applicable", na},
                                {"budget_exceeded", budget}}}};
}

} // namespace idb
