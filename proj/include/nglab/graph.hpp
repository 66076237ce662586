#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nglab {

// Set of vertex indices, backed by a 64-bit mask. Graphs in this library
// never exceed 64 vertices.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1; }
    constexpr VertexSet& add(int v) {
        bits |= std::uint64_t{1} << v;
        return *this;
    }
    constexpr VertexSet& remove(int v) {
        bits &= ~(std::uint64_t{1} << v);
        return *this;
    }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool subset_of(VertexSet s) const { return (bits & ~s.bits) == 0; }
    constexpr int lowest() const { return bits == 0 ? -1 : std::countr_zero(bits); }

    // Iterates set members in ascending order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits); }
    constexpr iterator end() const { return iterator(0); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
};

// Undirected simple graph on at most 64 vertices, adjacency stored as one
// bitset row per vertex. Rows stay symmetric and irreflexive, and bits at
// or above order() stay clear.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet(adj_[v]);
    }
    int degree(int v) const { return neighbors(v).count(); }
    int max_degree() const;
    VertexSet vertices() const { return VertexSet::range(n_); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph complement(const Graph& g);

// Vertices of s are reindexed 0..|s|-1 preserving relative order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph remove_vertex(const Graph& g, int v);

// Shape flags of an induced subgraph. Clique and independent co-hold for
// at most one vertex; five_cycle requires exactly C_5.
struct InducedShape {
    bool clique = false;
    bool independent = false;
    bool five_cycle = false;

    bool other() const { return !clique && !independent && !five_cycle; }
};

InducedShape classify_induced(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);

}  // namespace nglab
