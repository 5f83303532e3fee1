#include <doctest.h>

#include "idb/census.hpp"
#include "idb/solvers.hpp"
#include "test_helpers.hpp"

using namespace idb;
using namespace idb::test;

TEST_CASE("gamma_i on known graphs") {
    CHECK(gamma_i(P(7)).size == 3);
    IdsResult f2 = gamma_i(F(2));
    CHECK(f2.size == 1);
    CHECK(f2.witness == vs({0})); // the hub
    CHECK(gamma_i(K(5)).size == 1);
    CHECK(gamma_i(Graph::build(4, {})).size == 4);
    CHECK(gamma_i(T(3)).size == 2);
    CHECK(gamma_i(Graph{}).size == 0);
}

TEST_CASE("oracle on known graphs") {
    IdsResult c4 = gamma_i_oracle(C(4));
    CHECK(c4.size == 2);
    CHECK(c4.witness == vs({0, 2})); // first in cardinality-then-lex order
    CHECK(gamma_i_oracle(B(2)).size == 2);
    Graph dbl_star = Graph::build(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    CHECK(gamma_i_oracle(dbl_star).size == 3);
    CHECK(gamma_i_oracle(Graph{}).size == 0);
}

TEST_CASE("independence number") {
    for (int n = 1; n <= 6; ++n) CHECK(independence_number(K(n)).size == 1);
    CHECK(independence_number(C(5)).size == 2);
    CHECK(independence_number(Kmn(3, 4)).size == 4);
    CHECK(independence_number(Graph{}).size == 0);
}

TEST_CASE("domination number") {
    CHECK(domination_number(C(7)).size == 3);
    CHECK(domination_number(star(9)).size == 1);
    CHECK(domination_number(P(4)).size == 2);
    CHECK(domination_number(Graph{}).size == 0);
}

TEST_CASE("oracle equivalence, all labeled graphs up to 5 vertices") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : all_labeled_graphs(n))
            REQUIRE(gamma_i(g).size == gamma_i_oracle(g).size);
}

TEST_CASE("witnesses are independent dominating and maximal") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_labeled_graphs(n)) {
            IdsResult r = gamma_i(g);
            auto p = set_predicates(g, r.witness);
            REQUIRE(p.independent);
            REQUIRE(p.dominating);
            REQUIRE(r.witness.count() == r.size);
            // maximal independent: every extension collides
            for (int v = 0; v < n; ++v) {
                if (r.witness.test(v)) continue;
                VertexSet bigger = r.witness;
                bigger.set(v);
                REQUIRE_FALSE(set_predicates(g, bigger).independent);
            }
        }
}

TEST_CASE("inequality chain gamma <= gamma_i <= alpha") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_labeled_graphs(n)) {
            const int gam = domination_number(g).size;
            const int gi = gamma_i(g).size;
            const int a = independence_number(g).size;
            REQUIRE(gam <= gi);
            REQUIRE(gi <= a);
        }
}

TEST_CASE("component additivity of gamma_i") {
    std::vector<Graph> pool = {P(1), P(4), P(8), C(3), C(6), K(5), star(4), F(2), B(2), T(3), Q(2)};
    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            if (g.vertex_count() > 8 || h.vertex_count() > 8) continue;
            CHECK(gamma_i(disjoint_union(g, h)).size == gamma_i(g).size + gamma_i(h).size);
        }
}

TEST_CASE("determinism") {
    for (const Graph& g : {C(9), B(3), T(4), Kmn(2, 3)}) {
        IdsResult a = gamma_i(g), b = gamma_i(g);
        CHECK(a.witness == b.witness);
        CHECK(a.nodes_explored == b.nodes_explored);
        CHECK(independence_number(g).witness == independence_number(g).witness);
        CHECK(domination_number(g).witness == domination_number(g).witness);
    }
}

TEST_CASE("budget exhaustion raises instead of guessing") {
    CHECK_THROWS_AS(gamma_i(C(20), Budget{3}), SolverBudgetExceededError);
    CHECK_THROWS_AS(independence_number(C(20), Budget{3}), SolverBudgetExceededError);
    CHECK_THROWS_AS(domination_number(C(20), Budget{3}), SolverBudgetExceededError);
    try {
        gamma_i(C(20), Budget{2000});
    } catch (const SolverBudgetExceededError& e) {
        if (e.best_upper_bound) CHECK(*e.best_upper_bound >= 7); // ceil(20/3)
    }
    // generous budgets do not change answers
    CHECK(gamma_i(C(12), Budget{1u << 20}).size == 4);
}

TEST_CASE("bounded search used by the bondage cache") {
    auto r = detail::gamma_i_below(P(4), 2, Budget{});
    CHECK_FALSE(r.improved); // gamma_i(P_4) = 2, nothing below 2
    auto r2 = detail::gamma_i_below(star(5), 3, Budget{});
    CHECK(r2.improved);
    CHECK(r2.result.size == 1);
}
