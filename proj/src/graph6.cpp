#include "nglab/graph6.hpp"

namespace nglab {

namespace {

constexpr int kOffset = 63;

int decode_char(char c) {
    const int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126) throw graph6_error("graph6 character out of range 63-126");
    return v - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw graph6_error("empty graph6 string");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != '~') {
        n = decode_char(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw graph6_error("graph6 order exceeds supported maximum of 64");
        if (text.size() < 4) throw graph6_error("truncated graph6 order field");
        n = (static_cast<long long>(decode_char(text[1])) << 12) |
            (decode_char(text[2]) << 6) | decode_char(text[3]);
        pos = 4;
    }
    if (n > Graph::kMaxVertices) throw graph6_error("graph6 order exceeds supported maximum of 64");

    const long long pairs = n * (n - 1) / 2;
    const std::size_t expected = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - pos < expected) throw graph6_error("graph6 string shorter than order requires");
    if (text.size() - pos > expected) throw graph6_error("trailing characters after graph6 data");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const int group = decode_char(text[pos + static_cast<std::size_t>(bit / 6)]);
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    // padding bits of the final group must be zero
    for (long long pad = bit; pad < static_cast<long long>(expected) * 6; ++pad) {
        const int group = decode_char(text[pos + static_cast<std::size_t>(pad / 6)]);
        if ((group >> (5 - pad % 6)) & 1) throw graph6_error("nonzero padding bits in graph6 data");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kOffset + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(kOffset + (n >> 12)));
        out.push_back(static_cast<char>(kOffset + ((n >> 6) & 0x3f)));
        out.push_back(static_cast<char>(kOffset + (n & 0x3f)));
    }

    int group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kOffset + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kOffset + (group << (6 - filled))));
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind(">>graph6<<", 0) == 0) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

}  // namespace nglab
