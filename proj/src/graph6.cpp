#include "idb/graph6.hpp"

#include <istream>

namespace idb {

namespace {

constexpr int kBias = 63;

int payload_chars(int n) {
    const int bits = n * (n - 1) / 2;
    return (bits + 5) / 6;
}

} // namespace

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw BadHeaderError("empty graph6 string");
    std::size_t pos = 0;
    long n = 0;
    const auto header_char = [&](std::size_t i) -> int {
        if (i >= line.size()) throw BadHeaderError("graph6 header cut short");
        const unsigned char c = line[i];
        if (c < 63 || c > 126) throw BadHeaderError("graph6 header character out of range");
        return c - kBias;
    };
    if (line[0] != '~') {
        n = header_char(0);
        pos = 1;
    } else if (line.size() >= 2 && line[1] == '~') {
        // 36-bit length form: necessarily beyond any supported width
        throw TooLargeError("graph6 length exceeds supported width");
    } else {
        n = (long(header_char(1)) << 12) | (long(header_char(2)) << 6) | header_char(3);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw TooLargeError("graph6 has " + std::to_string(n) + " vertices; width limit is " +
                            std::to_string(kMaxVertices));

    const int want = payload_chars(static_cast<int>(n));
    if (static_cast<int>(line.size() - pos) < want)
        throw TruncatedPayloadError("graph6 payload has " + std::to_string(line.size() - pos) +
                                    " characters, expected " + std::to_string(want));
    if (static_cast<int>(line.size() - pos) > want)
        throw TrailingGarbageError("graph6 has trailing characters after the payload");

    std::vector<Edge> edges;
    int bit = 0; // position within the current character, MSB first
    int cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                const unsigned char c = line[pos++];
                if (c < 63 || c > 126)
                    throw TrailingGarbageError("graph6 payload character out of range");
                cur = c - kBias;
                bit = 6;
            }
            --bit;
            if ((cur >> bit) & 1) edges.push_back({u, v});
        }
    }
    if (bit > 0 && (cur & ((1 << bit) - 1)) != 0)
        throw TrailingGarbageError("graph6 padding bits are not zero");
    return Graph::build(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxVertices) throw TooLargeError("graph too large for configured width");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int bit = 6;
    int cur = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            --bit;
            if (g.row(u).test(v)) cur |= 1 << bit;
            if (bit == 0) {
                out.push_back(static_cast<char>(cur + kBias));
                cur = 0;
                bit = 6;
            }
        }
    }
    if (bit < 6) out.push_back(static_cast<char>(cur + kBias));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

} // namespace idb
