#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nglab/graph.hpp"

namespace nglab {

struct graph6_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Standard graph6 text format: 63-offset printable packing of the upper
// triangle, columnwise. Orders 63 and 64 use the '~' long form.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// One graph per line; blank lines and lines starting with ">>graph6<<"
// are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace nglab
