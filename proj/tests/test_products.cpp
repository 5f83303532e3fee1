#include <doctest.h>

#include <algorithm>

#include "idb/census.hpp"
#include "idb/products.hpp"
#include "idb/solvers.hpp"
#include "test_helpers.hpp"

using namespace idb;
using namespace idb::test;

namespace {

std::vector<int> degree_sequence(const Graph& g) {
    auto d = degree_stats(g).degrees;
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<Graph> small_pool() {
    return {P(1), P(2), P(3), P(4), P(5), C(3), C(4), C(5), K(4), K(5), star(3), star(4), T(2)};
}

} // namespace

TEST_CASE("join basics") {
    Graph wheel = join(K(1), C(4));
    CHECK(wheel.vertex_count() == 5);
    CHECK(wheel.edge_count() == 8);
    CHECK(degree_sequence(wheel) == std::vector<int>{3, 3, 3, 3, 4});
    CHECK(join(K(1), K(1)) == K(2));
    CHECK(join(P(3), P(3)).edge_count() == 13);
}

TEST_CASE("lexicographic basics") {
    CHECK(lexicographic(P(2), P(2)) == K(4));
    for (const Graph& g : small_pool())
        if (g.vertex_count() <= 5) CHECK(lexicographic(g, K(1)) == g);
    CHECK(lexicographic(P(3), K(2)).vertex_count() == 6);
    CHECK(lexicographic(P(3), K(2)).edge_count() == 11);
}

TEST_CASE("corona basics") {
    Graph gk = corona(K(2), K(1));
    CHECK(gk.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
    CHECK(isomorphic(gk, P(4)));
    CHECK(corona(K(1), C(4)) == join(K(1), C(4)));
    Graph big = corona(K(2), disjoint_union(K(2), K(2)));
    CHECK(big.vertex_count() == 10);
    CHECK(big.edge_count() == 13);
    CHECK_THROWS_AS(corona(Graph{}, K(2)), EmptyBaseError);
}

TEST_CASE("cartesian basics") {
    CHECK(cartesian(star(2), P(2)) == B(2));
    CHECK(isomorphic(cartesian(P(2), P(2)), C(4)));
    CHECK(cartesian(C(3), K(1)) == C(3));
}

TEST_CASE("product edge-count formulas and invariants") {
    for (const Graph& g : small_pool())
        for (const Graph& h : small_pool()) {
            const int ng = g.vertex_count(), nh = h.vertex_count();
            const int mg = g.edge_count(), mh = h.edge_count();
            if (ng + nh <= kMaxVertices) {
                Graph j = join(g, h);
                j.assert_valid();
                CHECK(j.edge_count() == mg + mh + ng * nh);
            }
            if (ng * nh <= kMaxVertices) {
                Graph l = lexicographic(g, h);
                l.assert_valid();
                CHECK(l.edge_count() == nh * nh * mg + ng * mh);
                Graph c = cartesian(g, h);
                c.assert_valid();
                CHECK(c.edge_count() == ng * mh + nh * mg);
            }
            if (ng * (1 + nh) <= kMaxVertices) {
                Graph c = corona(g, h);
                c.assert_valid();
                CHECK(c.edge_count() == mg + ng * (mh + nh));
            }
        }
}

TEST_CASE("join commutes, lexicographic does not") {
    for (const Graph& g : {P(3), C(4), star(2)})
        for (const Graph& h : {P(2), K(3)}) CHECK(isomorphic(join(g, h), join(h, g)));
    Graph a = lexicographic(P(2), disjoint_union(C(3), K(1)));
    Graph b = lexicographic(disjoint_union(C(3), K(1)), P(2));
    CHECK(degree_sequence(a) != degree_sequence(b));
}

TEST_CASE("gamma_i laws over all labeled pairs up to 4 vertices") {
    std::vector<Graph> pool;
    for (int n = 1; n <= 4; ++n)
        for (Graph& g : all_labeled_graphs(n)) pool.push_back(std::move(g));
    for (const Graph& g : pool)
        for (const Graph& h : pool) {
            REQUIRE(gamma_i(join(g, h)).size == std::min(gamma_i(g).size, gamma_i(h).size));
            REQUIRE(gamma_i(lexicographic(g, h)).size == gamma_i(g).size * gamma_i(h).size);
        }
}
