#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "nglab/enumerate.hpp"
#include "nglab/graph6.hpp"
#include "test_util.hpp"

using namespace nglab;

namespace {

// Independent reference encoder written straight from the format
// description: upper-triangle bits columnwise, 6-bit groups big-endian,
// 63-offset characters.
std::string reference_encode(const Graph& g) {
    const int n = g.order();
    std::string bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(g.has_edge(row, col) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');

    std::string out(1, static_cast<char>(63 + n));
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (std::size_t j = 0; j < 6; ++j) value = value * 2 + (bits[i + j] == '1');
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

}  // namespace

TEST_CASE("hand-packed strings") {
    // K_3: header 63+3 = 'B'; bits 111 padded to 111000 = 56, 63+56 = 'w'
    CHECK(parse_graph6("Bw") == testutil::complete_graph(3));
    CHECK(emit_graph6(testutil::complete_graph(3)) == "Bw");

    // single vertex: header only, 63+1 = '@'
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@") == Graph(1));

    // empty graph: 63+0 = '?'
    CHECK(emit_graph6(Graph(0)) == "?");
    CHECK(parse_graph6("?").order() == 0);

    CHECK(emit_graph6(parse_graph6("Bw")) == "Bw");
}

TEST_CASE("agrees with the reference encoder on all small graphs") {
    for (int n = 0; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            const std::string encoded = emit_graph6(g);
            CHECK(encoded == reference_encode(g));
            CHECK(parse_graph6(encoded) == g);
        });
    }
}

TEST_CASE("round-trips the long form at n = 63 and 64") {
    for (int n : {63, 64}) {
        Graph g(n);
        for (int v = 0; v + 1 < n; v += 2) g.add_edge(v, v + 1);
        const std::string encoded = emit_graph6(g);
        CHECK(encoded[0] == '~');
        CHECK(parse_graph6(encoded) == g);
    }
}

TEST_CASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), graph6_error);
    CHECK_THROWS_AS(parse_graph6("B"), graph6_error);         // missing edge data
    CHECK_THROWS_AS(parse_graph6("Bww"), graph6_error);       // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B\x20"), graph6_error);     // character below 63
    CHECK_THROWS_AS(parse_graph6(std::string("B") + static_cast<char>(127)), graph6_error);
    CHECK_THROWS_AS(parse_graph6("@w"), graph6_error);        // data after a 1-vertex header
    CHECK_THROWS_AS(parse_graph6("A@"), graph6_error);        // nonzero padding bits (n=2)
    CHECK(parse_graph6("A_") == testutil::complete_graph(2)); // K_2, clean padding
    CHECK_THROWS_AS(parse_graph6("~~"), graph6_error);        // 8-byte order form
    CHECK_THROWS_AS(parse_graph6("~?@@"), graph6_error);      // order 65 exceeds the cap
}

TEST_CASE("file reading skips headers and blank lines") {
    std::istringstream in(">>graph6<<\nBw\n\n@\n");
    const std::vector<Graph> graphs = read_graph6_lines(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == testutil::complete_graph(3));
    CHECK(graphs[1] == Graph(1));
}
