#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nglab/graph.hpp"

namespace nglab {

enum class NGShape { clique_a, independent_a, five_cycle_a };

// Construction recipe for the three NG-graph forms: an A-block (clique,
// independent set, or 5-cycle), a B-clique joined completely to A, and
// an independent C-block with no edges to A; B-C edges are free.
struct NGBlueprint {
    NGShape shape = NGShape::clique_a;
    int a = 0;
    int b = 0;
    int c = 0;
    // bc_edges[i] bit j set: edge between B vertex i and C vertex j
    std::vector<std::uint64_t> bc_edges;
};

Graph complete_multipartite(const std::vector<int>& parts);
// Disjoint union K_t + I_{t-1}: first t vertices a clique, rest isolated.
Graph clique_plus_independent(int t);
Graph cycle(int n);
Graph path(int n);
Graph petersen();

Graph build_ng(const NGBlueprint& blueprint);
NGBlueprint random_ng_blueprint(NGShape shape, int a, int b, int c, std::uint64_t seed);

// Eleven-vertex graph with a single A vertex, a B-clique of five, and
// five degree-one C vertices matched to distinct B vertices.
Graph matched_arms_graph();

// Named test fixtures; emit_fixture files writes them as graph6 lines
// plus a JSON name -> graph6 manifest.
std::map<std::string, Graph> fixture_catalog();
std::string fixture_graph6_lines();
std::string fixture_manifest_json();

}  // namespace nglab
