#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "nglab/graph.hpp"
#include "nglab/ng.hpp"

namespace nglab {

inline constexpr int kDefaultMaxOracleN = 8;

// Refinement of the degree partition of a Type 1 graph: C splits into
// L (vertices adjacent to every vertex of B) and M (the rest).
struct ABLMPartition {
    VertexSet a, b, l, m;

    int a_size() const { return a.count(); }
    int b_size() const { return b.count(); }
    int l_size() const { return l.count(); }
    int m_size() const { return m.count(); }
};

enum class NGDMethod { type1_closed_form, type2_closed_form, type3_theorem, oracle };
std::string_view to_string(NGDMethod m);

struct NGDReport {
    bool is_ngd = false;
    NGDMethod method = NGDMethod::oracle;
    // closed-form parameters, present on the Type 1/2 paths
    std::optional<int> a, b, l, m, x, y;
    std::optional<int> dist;  // D(G), present on every path that needed it
    std::optional<int> chi_d, chi_d_complement;
    // which Type 2 equality fired: 'a' (D = |A|), 'l' (D = count of
    // B-vertices with no C-neighbors), or 'b' for both
    std::optional<char> type2_disjunct;
};

ABLMPartition ablm_partition(const Graph& g, const NGClassification& cls);

// Minimum colors beyond the |B| clique colors needed on M for a proper
// coloring of G[B u M] that no automorphism fixing A and L preserves;
// evaluated by the neighborhood-class formula.
int compute_x(const Graph& g, const ABLMPartition& p);
// Complement-side analog: colors beyond |M| needed on B in the
// complement of G[B u M].
int compute_y(const Graph& g, const ABLMPartition& p);

// (chi_D(G), chi_D(complement)) = (b + max{a, l, x}, m + max{a+l, y})
// for a Type 1 graph.
std::pair<int, int> chi_d_type1(const Graph& g, const ABLMPartition& p, int x, int y);

// D(G) = max{a, l, D^Gamma(G[B u M])} with Gamma the pointwise
// stabilizer of A u L restricted to B u M.
int distinguishing_number_formula(const Graph& g, const ABLMPartition& p);

// Closed-form decision for recognized graphs (Type 3: never; Type 1:
// D(G) = max{a, l}; Type 2: via the complement), exact-oracle fallback
// for everything else. The fallback refuses graphs larger than
// max_oracle_n.
NGDReport decide_ngd(const Graph& g, int max_oracle_n = kDefaultMaxOracleN);

// Definitional test chi_D(G) + chi_D(complement) = n + D(G) via the
// exact oracles.
bool is_ngd_oracle(const Graph& g);

}  // namespace nglab
