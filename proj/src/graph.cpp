#include "nglab/graph.hpp"

namespace nglab {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order must be in [0, 64]");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    const std::uint64_t all = VertexSet::range(n).bits;
    Graph h(n);
    for (int v = 0; v < n; ++v) {
        VertexSet row((all & ~g.neighbors(v).bits) & ~(std::uint64_t{1} << v));
        for (int w : row)
            if (w > v) h.add_edge(v, w);
    }
    return h;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) throw std::out_of_range("vertex set not contained in graph");
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(s.count()));
    for (int v : s) order.push_back(v);
    Graph h(static_cast<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (g.has_edge(order[i], order[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph remove_vertex(const Graph& g, int v) {
    return induced_subgraph(g, g.vertices().remove(v));
}

InducedShape classify_induced(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) throw std::out_of_range("vertex set not contained in graph");
    const int size = s.count();
    int edges = 0;
    bool two_regular = true;
    for (int v : s) {
        const int d = (g.neighbors(v) & s).count();
        edges += d;
        if (d != 2) two_regular = false;
    }
    edges /= 2;

    InducedShape shape;
    shape.clique = edges == size * (size - 1) / 2;
    shape.independent = edges == 0;
    if (size == 5 && edges == 5 && two_regular) shape.five_cycle = is_connected(induced_subgraph(g, s));
    return shape;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return true;
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= g.neighbors(v).bits;
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == VertexSet::range(n).bits;
}

}  // namespace nglab
