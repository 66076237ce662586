#include "nglab/ng.hpp"

#include "nglab/oracles.hpp"

namespace nglab {

namespace {

// First pair (u, v) with u in s, v in t, and presence of edge uv equal
// to `want_edge` being violated; nullopt when all pairs conform.
std::optional<std::pair<int, int>> find_pair_violation(const Graph& g, VertexSet s, VertexSet t,
                                                       bool want_edge) {
    for (int u : s) {
        const VertexSet bad = want_edge ? (t - g.neighbors(u)).remove(u) : (t & g.neighbors(u));
        if (!bad.empty()) return std::make_pair(u, bad.lowest());
    }
    return std::nullopt;
}

}  // namespace

ABCPartition abc_candidate(const Graph& g, int k) {
    if (k < 1 || k > g.order()) throw std::invalid_argument("candidate chromatic number out of range");
    ABCPartition p;
    p.k = k;
    for (int v = 0; v < g.order(); ++v) {
        const int d = g.degree(v);
        if (d == k - 1)
            p.a.add(v);
        else if (d > k - 1)
            p.b.add(v);
        else
            p.c.add(v);
    }
    return p;
}

ConditionReport check_ng_conditions(const Graph& g, const ABCPartition& p) {
    ConditionReport r;
    r.partition = p;
    r.a_shape = classify_induced(g, p.a);

    r.passed[0] = !p.a.empty() &&
                  (r.a_shape.clique || r.a_shape.independent || r.a_shape.five_cycle);
    if (p.a.empty()) r.detail = "A is empty";

    const auto b_violation = find_pair_violation(g, p.b, p.b, /*want_edge=*/true);
    r.passed[1] = !b_violation.has_value();

    const auto c_violation = find_pair_violation(g, p.c, p.c, /*want_edge=*/false);
    r.passed[2] = !c_violation.has_value();

    const auto ab_violation = find_pair_violation(g, p.a, p.b, /*want_edge=*/true);
    r.passed[3] = !ab_violation.has_value();

    const auto ac_violation = find_pair_violation(g, p.a, p.c, /*want_edge=*/false);
    r.passed[4] = !ac_violation.has_value();

    if (!r.witness_pair) r.witness_pair = b_violation;
    if (!r.witness_pair) r.witness_pair = c_violation;
    if (!r.witness_pair) r.witness_pair = ab_violation;
    if (!r.witness_pair) r.witness_pair = ac_violation;

    if (r.passed[0]) {
        const int a_size = p.a.count();
        const int b_size = p.b.count();
        if (r.a_shape.clique && a_size + b_size == p.k) r.matching_types.push_back(1);
        if (r.a_shape.independent && b_size + 1 == p.k) r.matching_types.push_back(2);
        if (r.a_shape.five_cycle && b_size + 3 == p.k) r.matching_types.push_back(3);
        r.passed[5] = !r.matching_types.empty();
        if (!r.passed[5] && r.detail.empty()) r.detail = "no shape count matches k";
    }

    return r;
}

NGClassification recognize_ng(const Graph& g) {
    NGClassification cls;
    const int n = g.order();
    for (int k = 1; k <= n; ++k) {
        const ABCPartition p = abc_candidate(g, k);
        const ConditionReport r = check_ng_conditions(g, p);
        if (r.all_passed()) {
            cls.is_ng = true;
            cls.k = k;
            cls.chi_complement = n + 1 - k;
            cls.partition = p;
            cls.types = r.matching_types;
            return cls;
        }
    }
    return cls;
}

bool is_ng_oracle(const Graph& g) {
    return chromatic_number(g) + chromatic_number(complement(g)) == g.order() + 1;
}

}  // namespace nglab
