#include "satgraph/graph6.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace satgraph {

namespace {

[[noreturn]] void bad(std::string_view what, std::size_t offset) {
    throw std::invalid_argument("graph6: " + std::string(what) + " at byte offset " +
                                std::to_string(offset));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > 62)
        throw std::invalid_argument("graph6: encoder supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view s) {
    if (s.empty()) bad("empty input", 0);
    unsigned char size_byte = static_cast<unsigned char>(s[0]);
    if (size_byte == 126) bad("multi-byte sizes (n > 62) unsupported", 0);
    if (size_byte < 63 || size_byte > 125) bad("size byte out of range", 0);
    int n = size_byte - 63;
    int bits_needed = n * (n - 1) / 2;
    std::size_t body_len = (static_cast<std::size_t>(bits_needed) + 5) / 6;
    if (s.size() < 1 + body_len) bad("truncated body", s.size());
    if (s.size() > 1 + body_len) bad("trailing garbage", 1 + body_len);

    Graph g(n);
    int row = 0, col = 1;
    for (std::size_t i = 0; i < body_len; ++i) {
        unsigned char c = static_cast<unsigned char>(s[1 + i]);
        if (c < 63 || c > 126) bad("body byte out of range", 1 + i);
        int val = c - 63;
        for (int b = 5; b >= 0; --b) {
            int bit_index = static_cast<int>(i) * 6 + (5 - b);
            bool set = (val >> b) & 1;
            if (bit_index < bits_needed) {
                if (set) g.add_edge(row, col);
                if (++row == col) {
                    row = 0;
                    ++col;
                }
            } else if (set) {
                bad("nonzero padding bits", 1 + i);
            }
        }
    }
    return g;
}

std::vector<Graph> graph6_read_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        out.push_back(graph6_decode(line));
    }
    return out;
}

void graph6_write_stream(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
}

std::string dot_export(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace satgraph
