#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nglab/graph.hpp"

namespace nglab {

// Degree partition for a candidate chromatic number k:
// a = {deg = k-1}, b = {deg > k-1}, c = {deg < k-1}.
struct ABCPartition {
    int k = 0;
    VertexSet a, b, c;
};

// Outcome of the six recognition conditions for one candidate partition.
// Conditions, in order: (0) G[A] is a clique, an independent set or a
// 5-cycle and A is nonempty; (1) G[B] is a clique; (2) G[C] is an
// independent set; (3) every A-B pair is an edge; (4) no A-C pair is an
// edge; (5) the shape-dependent count identity |A|+|B| = k (clique),
// |B|+1 = k (independent set) or |B|+3 = k (5-cycle) holds for some
// shape G[A] satisfies.
struct ConditionReport {
    ABCPartition partition;
    InducedShape a_shape;
    std::array<bool, 6> passed{};
    // shapes whose count identity holds: 1 clique, 2 independent, 3 five-cycle
    std::vector<int> matching_types;
    std::optional<std::pair<int, int>> witness_pair;
    std::string detail;

    bool all_passed() const {
        for (bool ok : passed)
            if (!ok) return false;
        return true;
    }
};

struct NGClassification {
    bool is_ng = false;
    int k = 0;               // chi(G) when is_ng
    int chi_complement = 0;  // n+1-k when is_ng
    ABCPartition partition;
    std::vector<int> types;  // nonempty iff is_ng; subset of {1,2,3}

    bool has_type(int t) const {
        for (int x : types)
            if (x == t) return true;
        return false;
    }
};

ABCPartition abc_candidate(const Graph& g, int k);
ConditionReport check_ng_conditions(const Graph& g, const ABCPartition& p);

// Scans k = 1..n and reports the first candidate passing all six
// conditions; runs in O(n^3).
NGClassification recognize_ng(const Graph& g);

// Definitional test chi(G) + chi(complement) = n + 1 via the exact
// chromatic oracle.
bool is_ng_oracle(const Graph& g);

}  // namespace nglab
