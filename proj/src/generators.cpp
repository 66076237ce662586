#include "nglab/generators.hpp"

#include <random>
#include <sstream>

#include "json.hpp"
#include "nglab/graph6.hpp"

namespace nglab {

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("complete multipartite graph needs at least one part");
    int n = 0;
    for (int size : parts) {
        if (size < 1) throw std::invalid_argument("part sizes must be at least 1");
        n += size;
    }
    Graph g(n);
    int offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int end = offset + parts[i];
        for (int u = offset; u < end; ++u)
            for (int v = end; v < n; ++v) g.add_edge(u, v);
        offset = end;
    }
    return g;
}

Graph clique_plus_independent(int t) {
    if (t < 1) throw std::invalid_argument("clique size must be at least 1");
    Graph g(2 * t - 1);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);        // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);              // spokes
    }
    return g;
}

Graph build_ng(const NGBlueprint& bp) {
    if (bp.shape == NGShape::five_cycle_a) {
        if (bp.a != 5) throw std::invalid_argument("a 5-cycle A-block needs exactly 5 vertices");
    } else if (bp.a < 1) {
        throw std::invalid_argument("the A-block needs at least one vertex");
    }
    if (bp.b < 0 || bp.c < 0) throw std::invalid_argument("negative block size");
    if (static_cast<int>(bp.bc_edges.size()) != bp.b)
        throw std::invalid_argument("bc_edges must have one row per B vertex");
    for (std::uint64_t row : bp.bc_edges)
        if (bp.c < 64 && (row >> bp.c) != 0)
            throw std::invalid_argument("bc_edges row addresses vertices beyond the C block");

    const int n = bp.a + bp.b + bp.c;
    Graph g(n);
    const int b_start = bp.a;
    const int c_start = bp.a + bp.b;

    switch (bp.shape) {
        case NGShape::clique_a:
            for (int u = 0; u < bp.a; ++u)
                for (int v = u + 1; v < bp.a; ++v) g.add_edge(u, v);
            break;
        case NGShape::independent_a:
            break;
        case NGShape::five_cycle_a:
            for (int v = 0; v < 5; ++v) g.add_edge(v, (v + 1) % 5);
            break;
    }
    for (int u = b_start; u < c_start; ++u)
        for (int v = u + 1; v < c_start; ++v) g.add_edge(u, v);
    for (int u = 0; u < bp.a; ++u)
        for (int v = b_start; v < c_start; ++v) g.add_edge(u, v);
    for (int i = 0; i < bp.b; ++i)
        for (int j : VertexSet(bp.bc_edges[static_cast<std::size_t>(i)]))
            g.add_edge(b_start + i, c_start + j);
    return g;
}

NGBlueprint random_ng_blueprint(NGShape shape, int a, int b, int c, std::uint64_t seed) {
    NGBlueprint bp;
    bp.shape = shape;
    bp.a = a;
    bp.b = b;
    bp.c = c;
    std::mt19937_64 rng(seed);
    const std::uint64_t row_mask = c >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
    for (int i = 0; i < b; ++i) bp.bc_edges.push_back(rng() & row_mask);
    return bp;
}

Graph matched_arms_graph() {
    NGBlueprint bp;
    bp.shape = NGShape::clique_a;
    bp.a = 1;
    bp.b = 5;
    bp.c = 5;
    for (int i = 0; i < 5; ++i) bp.bc_edges.push_back(std::uint64_t{1} << i);
    return build_ng(bp);
}

std::map<std::string, Graph> fixture_catalog() {
    std::map<std::string, Graph> fixtures;
    for (int n = 1; n <= 6; ++n) {
        fixtures["K" + std::to_string(n)] = complete_multipartite(std::vector<int>(static_cast<std::size_t>(n), 1));
        fixtures["I" + std::to_string(n)] = Graph(n);
    }
    for (int n = 4; n <= 8; ++n) fixtures["C" + std::to_string(n)] = cycle(n);
    fixtures["C3"] = cycle(3);
    fixtures["K3,1,1"] = complete_multipartite({3, 1, 1});
    fixtures["K3,2"] = complete_multipartite({3, 2});
    fixtures["K2,2"] = complete_multipartite({2, 2});
    for (int t = 2; t <= 4; ++t)
        fixtures["K" + std::to_string(t) + "+I" + std::to_string(t - 1)] = clique_plus_independent(t);
    fixtures["petersen"] = petersen();
    fixtures["matched-arms"] = matched_arms_graph();
    return fixtures;
}

std::string fixture_graph6_lines() {
    std::ostringstream out;
    out << ">>graph6<<\n";
    for (const auto& [name, graph] : fixture_catalog()) out << emit_graph6(graph) << "\n";
    return out.str();
}

std::string fixture_manifest_json() {
    nlohmann::json manifest = nlohmann::json::object();
    for (const auto& [name, graph] : fixture_catalog()) manifest[name] = emit_graph6(graph);
    return manifest.dump(2) + "\n";
}

}  // namespace nglab
