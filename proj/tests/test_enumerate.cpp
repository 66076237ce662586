#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "nglab/enumerate.hpp"
#include "test_util.hpp"

using namespace nglab;

namespace {

// Brute-force canonical key: minimum edge-bit sequence over every
// permutation, pair (0,1) most significant. Independent of the library's
// pruned search.
std::uint64_t brute_canonical_key(const Graph& g) {
    const int n = g.order();
    const int total_bits = n * (n - 1) / 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    if (total_bits < 64) best = (std::uint64_t{1} << total_bits) - 1;
    do {
        std::uint64_t key = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                key = (key << 1) |
                      (g.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) ? 1 : 0);
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

TEST_CASE("edge masks index labeled graphs") {
    CHECK(labeled_graph_count(0) == 1);
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(4) == 64);
    CHECK_THROWS_AS(labeled_graph_count(9), guard_error);

    CHECK(edge_pair_index(0, 1) == 0);
    CHECK(edge_pair_index(0, 2) == 1);
    CHECK(edge_pair_index(1, 2) == 2);
    CHECK(edge_pair_index(2, 1) == 2);

    for (int n = 0; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask)
            CHECK(edge_mask(graph_from_edge_mask(n, mask)) == mask);
    }
}

TEST_CASE("pruned canonical key equals the brute-force key") {
    for (int n = 0; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            CHECK(canonical_key(g) == brute_canonical_key(g));
        });
    }
}

TEST_CASE("class enumeration matches the brute-force canonicalization sweep") {
    const std::array<std::size_t, 6> expected_counts = {1, 1, 2, 4, 11, 34};
    for (int n = 0; n <= 5; ++n) {
        std::set<std::uint64_t> brute_keys;
        for_each_labeled_graph(n, [&](const Graph& g) { brute_keys.insert(brute_canonical_key(g)); });
        CHECK(brute_keys.size() == expected_counts[static_cast<std::size_t>(n)]);

        const std::vector<Graph> reps = nonisomorphic_graphs(n);
        CHECK(reps.size() == brute_keys.size());
        auto it = brute_keys.begin();
        for (const Graph& rep : reps) {
            // ascending canonical order, each representative in canonical form
            CHECK(canonical_key(rep) == *it);
            CHECK(brute_canonical_key(rep) == *it);
            ++it;
        }
    }
}

TEST_CASE("class representatives are pairwise non-isomorphic") {
    for (int n = 0; n <= 5; ++n) {
        const std::vector<Graph> reps = nonisomorphic_graphs(n);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK(!testutil::isomorphic_brute(reps[i], reps[j]));
    }
}

TEST_CASE("enumerate facade") {
    std::size_t labeled = 0;
    enumerate_graphs(3, false, [&](const Graph&) { ++labeled; });
    CHECK(labeled == 8);

    std::size_t classes = 0;
    enumerate_graphs(4, true, [&](const Graph&) { ++classes; });
    CHECK(classes == 11);

    std::size_t empty = 0;
    enumerate_graphs(0, true, [&](const Graph& g) {
        ++empty;
        CHECK(g.order() == 0);
    });
    CHECK(empty == 1);

    CHECK_THROWS_AS(nonisomorphic_graphs(9), guard_error);
}

TEST_CASE("larger class counts match the standard sequence") {
    CHECK(nonisomorphic_graphs(6).size() == 156);
    CHECK(nonisomorphic_graphs(7).size() == 1044);
    CHECK(nonisomorphic_graphs(8).size() == 12346);
}
