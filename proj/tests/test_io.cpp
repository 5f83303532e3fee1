#include <doctest.h>

#include "idb/census.hpp"
#include "idb/edgelist.hpp"
#include "idb/graph6.hpp"
#include "test_helpers.hpp"

using namespace idb;
using namespace idb::test;

TEST_CASE("graph6 frozen encodings") {
    // "C~" <-> K_4 cross-checked against an established encoder
    CHECK(parse_graph6("C~") == K(4));
    CHECK(write_graph6(K(4)) == "C~");
    // P_4 payload bits 101001 -> 'h'
    CHECK(write_graph6(P(4)) == "Ch");
    CHECK(parse_graph6("Ch") == P(4));
    CHECK(write_graph6(C(5)) == "Dhc");
    // "DUW" decodes to the labeled complement of C_5
    CHECK(parse_graph6("DUW") == C(5).complemented());
    CHECK(write_graph6(Graph::build(3, {})) == "B?");
    CHECK(write_graph6(Graph{}) == "?");
    CHECK(parse_graph6("?") == Graph{});
}

TEST_CASE("graph6 multibyte headers") {
    if (kMaxVertices >= 64) {
        Graph p63 = P(63), p64 = P(64);
        std::string s63 = write_graph6(p63), s64 = write_graph6(p64);
        CHECK(s63.substr(0, 4) == "~??~");
        CHECK(s64.substr(0, 4) == "~?@?");
        CHECK(s63.size() == 4 + (63 * 62 / 2 + 5) / 6);
        CHECK(s64.size() == 4 + (64 * 63 / 2 + 5) / 6);
        CHECK(parse_graph6(s63) == p63);
        CHECK(parse_graph6(s64) == p64);
    }
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), BadHeaderError);
    CHECK_THROWS_AS(parse_graph6("\x1f"), BadHeaderError);
    CHECK_THROWS_AS(parse_graph6("~?"), BadHeaderError); // header cut short
    CHECK_THROWS_AS(parse_graph6("C"), TruncatedPayloadError);
    CHECK_THROWS_AS(parse_graph6("C~x"), TrailingGarbageError);
    CHECK_THROWS_AS(parse_graph6("A@"), TrailingGarbageError); // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~~????"), TooLargeError);
    // 65 vertices exceeds the default width of 64
    if (kMaxVertices == 64) CHECK_THROWS_AS(parse_graph6("~?@@"), TooLargeError);
}

TEST_CASE("graph6 round trip over the small census") {
    for (int n = 0; n <= 4; ++n)
        for (const Graph& g : all_labeled_graphs(n)) CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("n 3\n0 1\n1 2") == P(3));
    CHECK(parse_edge_list("n 4\n# square\n0 1\n1 2\n2 3\n0 3") == C(4));
    CHECK(parse_edge_list("n 2\n\n  \n0 1\n") == K(2));
    CHECK(parse_edge_list("n 0\n") == Graph{});

    CHECK_THROWS_AS(parse_edge_list("n 2\n0 0"), LoopEdgeError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 1\n1 0"), DuplicateEdgeError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), VertexOutOfRangeError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 1"), SyntaxError);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 2"), SyntaxError);
    CHECK_THROWS_AS(parse_edge_list(""), SyntaxError);

    try {
        parse_edge_list("n 2\n0 0");
    } catch (const LoopEdgeError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("edge list round trip") {
    for (const Graph& g : {P(5), C(6), K(4), star(3)}) CHECK(parse_edge_list(write_edge_list(g)) == g);
}
