#include "idb/edgelist.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace idb {

namespace {

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
        line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    return line;
}

bool parse_int(std::string_view tok, int& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::array<VertexSet, kMaxVertices> seen{};

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = strip_comment(raw);
        if (line.empty()) continue;
        auto toks = split_ws(line);
        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "n" || !parse_int(toks[1], n) || n < 0)
                throw SyntaxError("expected header \"n <count>\"", line_no);
            if (n > kMaxVertices)
                throw VertexOutOfRangeError("vertex count " + std::to_string(n) +
                                            " exceeds width limit " + std::to_string(kMaxVertices) +
                                            " (line " + std::to_string(line_no) + ")");
            continue;
        }
        int u, v;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            throw SyntaxError("expected an edge line \"u v\"", line_no);
        if (u == v)
            throw LoopEdgeError("loop edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") (line " + std::to_string(line_no) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw VertexOutOfRangeError("edge endpoint outside [0," + std::to_string(n) +
                                        ") (line " + std::to_string(line_no) + ")");
        Edge e = make_edge(u, v);
        if (seen[e.u].test(e.v))
            throw DuplicateEdgeError("duplicate edge (" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ") (line " + std::to_string(line_no) +
                                     ")");
        seen[e.u].set(e.v);
        edges.push_back(e);
    }
    if (n < 0) throw SyntaxError("missing header \"n <count>\"", line_no + 1);
    return Graph::build(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

} // namespace idb
