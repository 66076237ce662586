#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nglab/errors.hpp"
#include "nglab/graph.hpp"

namespace nglab {

// Vertex coloring: colors[v] in 1..r, r = max used color.
using Coloring = std::vector<int>;
int max_color(const Coloring& c);

// Explicit list of vertex permutations forming a group; each permutation
// is stored as its image array.
class AutomorphismSet {
public:
    AutomorphismSet() = default;
    explicit AutomorphismSet(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    std::size_t size() const { return count_; }
    std::span<const std::uint8_t> perm(std::size_t i) const {
        return {flat_.data() + i * static_cast<std::size_t>(degree_), static_cast<std::size_t>(degree_)};
    }
    void add(std::span<const std::uint8_t> images);
    void add_identity();

    static bool is_identity(std::span<const std::uint8_t> p);

private:
    int degree_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint8_t> flat_;
};

// Size guards for the exponential oracles. Chromatic search handles 16
// vertices; automorphism search is bounded by the number of non-fixed
// vertices; distinguishing searches handle 12 (the largest built-in
// fixture has 11).
inline constexpr int kMaxChromaticVertices = 16;
inline constexpr int kMaxAutomorphismFreeVertices = 10;
inline constexpr int kMaxDistinguishingVertices = 12;

int chromatic_number(const Graph& g);
Coloring optimal_coloring(const Graph& g);

AutomorphismSet automorphisms(const Graph& g);
// Subgroup fixing every vertex of `fixed` pointwise.
AutomorphismSet restricted_automorphisms(const Graph& g, VertexSet fixed);
// Reindexes a group whose every element maps `keep` onto itself to the
// induced-subgraph indexing of `keep`.
AutomorphismSet restrict_to(const AutomorphismSet& auts, VertexSet keep);

bool is_distinguishing(const Graph& g, const Coloring& c, const AutomorphismSet& auts);
int distinguishing_number(const Graph& g, const AutomorphismSet& auts);
int distinguishing_chromatic_number(const Graph& g, const AutomorphismSet& auts);

bool is_color_critical(const Graph& g, int v);

}  // namespace nglab
