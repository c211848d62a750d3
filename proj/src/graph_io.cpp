#include "p7c5/graph_io.hpp"

#include <istream>
#include <sstream>

namespace p7c5 {

namespace {

constexpr int g6_lo = 63;
constexpr int g6_hi = 126;
constexpr int g6_max_n = 258047;

int g6_byte(const std::string& s, size_t i) {
    if (i >= s.size()) throw input_error("graph6: truncated at offset " + std::to_string(i));
    unsigned char c = s[i];
    if (c < g6_lo || c > g6_hi)
        throw input_error("graph6: byte value " + std::to_string((int)c) + " out of range at offset " +
                          std::to_string(i));
    return c - g6_lo;
}

} // namespace

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw input_error("graph6: empty line");
    size_t pos = 0;
    long n;
    if ((unsigned char)line[0] == '~') {
        if (line.size() >= 2 && (unsigned char)line[1] == '~')
            throw input_error("graph6: 8-byte headers (n > 258047) not supported");
        n = (long)g6_byte(line, 1) << 12 | g6_byte(line, 2) << 6 | g6_byte(line, 3);
        pos = 4;
    } else {
        n = g6_byte(line, 0);
        pos = 1;
    }
    if (n > g6_max_n) throw input_error("graph6: vertex count out of range");

    long bits = n * (n - 1) / 2;
    size_t need = (size_t)((bits + 5) / 6);
    if (line.size() != pos + need)
        throw input_error("graph6: expected " + std::to_string(need) + " payload bytes, got " +
                          std::to_string(line.size() - pos));

    std::vector<Edge> edges;
    long k = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0) cur = g6_byte(line, pos + k / 6);
            if (cur & (1 << (5 - k % 6))) edges.push_back({i, j});
        }
    }
    // Padding bits of the last byte must be zero.
    if (bits % 6 != 0 && need > 0) {
        int last = g6_byte(line, pos + need - 1);
        int pad = (int)(6 - bits % 6);
        if (last & ((1 << pad) - 1))
            throw input_error("graph6: nonzero padding bits in final byte at offset " +
                              std::to_string(pos + need - 1));
    }
    return Graph::build((int)n, edges);
}

std::string emit_graph6(const Graph& g) {
    long n = g.vertex_count();
    if (n > g6_max_n) throw size_limit_error("graph6: vertex count exceeds format limit");
    std::string out;
    if (n <= 62) {
        out.push_back((char)(g6_lo + n));
    } else {
        out.push_back('~');
        out.push_back((char)(g6_lo + ((n >> 12) & 63)));
        out.push_back((char)(g6_lo + ((n >> 6) & 63)));
        out.push_back((char)(g6_lo + (n & 63)));
    }
    long bits = n * (n - 1) / 2;
    std::string payload((size_t)((bits + 5) / 6), (char)g6_lo);
    long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j)) payload[k / 6] += (char)(1 << (5 - k % 6));
    return out + payload;
}

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    long n, m;
    if (!(in >> n >> m)) throw input_error("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw input_error("edge list: negative header values");
    std::vector<Edge> edges;
    edges.reserve((size_t)m);
    for (long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw input_error("edge list: expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
        edges.push_back({u, v});
    }
    return Graph::build((int)n, edges);
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string emit_dot(const Graph& g, const std::vector<int>* coloring) {
    static const char* palette[] = {"#e6194b", "#3cb44b", "#4363d8", "#ffe119", "#f58231",
                                    "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
                                    "#008080", "#e6beff"};
    constexpr int palette_size = 12;
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (coloring) {
            int c = (*coloring)[v];
            out << " [style=filled fillcolor=\"";
            if (c < palette_size)
                out << palette[c];
            else
                out << (0.83 * (c % 36) / 36.0) << " 0.6 0.9"; // HSV fallback
            out << "\" label=\"" << v << ":" << c << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::vector<GraphRecord> read_graph_stream(std::istream& in, StreamFormat fmt,
                                           const std::string& name) {
    std::vector<GraphRecord> out;
    std::string line;
    long lineno = 0;
    if (fmt == StreamFormat::graph6) {
        while (std::getline(in, line)) {
            ++lineno;
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty()) continue;
            out.push_back({parse_graph6(line), name + ":" + std::to_string(lineno)});
        }
    } else {
        std::string block;
        long block_start = 1;
        auto flush = [&]() {
            if (block.find_first_not_of(" \t\r\n") == std::string::npos) return;
            out.push_back({parse_edgelist(block), name + ":" + std::to_string(block_start)});
        };
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                flush();
                block.clear();
                block_start = lineno + 1;
            } else {
                block += line;
                block += '\n';
            }
        }
        flush();
    }
    return out;
}

} // namespace p7c5
