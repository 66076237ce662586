#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nglab/errors.hpp"
#include "nglab/graph.hpp"

namespace nglab {

inline constexpr int kMaxEnumerationVertices = 8;

// Labeled graphs on n vertices are indexed by an edge mask: bit
// edge_pair_index(u, v) set means edge uv. Pairs are ranked columnwise
// over the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
int edge_pair_index(int u, int v);
std::uint64_t labeled_graph_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask(const Graph& g);

// Canonical key of the isomorphism class: the smallest value, over all
// vertex relabelings, of the edge-bit sequence read in pair-rank order
// with pair (0,1) as the most significant bit.
std::uint64_t canonical_key(const Graph& g);
Graph canonical_form(const Graph& g);

// One canonical representative per isomorphism class, in ascending
// canonical-key order.
std::vector<Graph> nonisomorphic_graphs(int n);

// All labeled graphs in ascending edge-mask order; masks in [lo, hi)
// for the partitioned overload.
template <class F>
void for_each_labeled_graph(int n, std::uint64_t lo, std::uint64_t hi, F&& f) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) f(graph_from_edge_mask(n, mask));
}
template <class F>
void for_each_labeled_graph(int n, F&& f) {
    for_each_labeled_graph(n, 0, labeled_graph_count(n), f);
}

void enumerate_graphs(int n, bool dedup, const std::function<void(const Graph&)>& f);

}  // namespace nglab
