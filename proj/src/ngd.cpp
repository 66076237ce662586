#include "nglab/ngd.hpp"

#include <algorithm>
#include <map>

#include "nglab/oracles.hpp"

namespace nglab {

namespace {

// Shared kernel of the x/y formulas. One side induces a clique colored
// with |clique_side| distinct colors; the other side is independent and
// splits into classes of equal neighborhood within the clique side. A
// class of size t whose members see s clique colors leaves t - (k - s)
// vertices short of reusable colors, k = |clique_side|. The worst
// shortfall, clamped at zero, is the number of extra colors needed.
int extra_colors_over_clique(const Graph& g, VertexSet clique_side, VertexSet indep_side) {
    const int k = clique_side.count();
    std::map<std::uint64_t, int> class_sizes;
    for (int v : indep_side) class_sizes[(g.neighbors(v) & clique_side).bits] += 1;

    int worst = 0;
    for (const auto& [nbrs, size] : class_sizes) {
        const int seen = std::popcount(nbrs);
        worst = std::max(worst, size - (k - seen));
    }
    return worst;
}

void require_type1(const NGClassification& cls) {
    if (!cls.is_ng || !cls.has_type(1))
        throw std::invalid_argument("operation requires a Type 1 NG-graph");
}

void validate_partition(const Graph& g, const ABLMPartition& p) {
    const VertexSet all = p.a | p.b | p.l | p.m;
    if (!(all == g.vertices()) ||
        p.a.count() + p.b.count() + p.l.count() + p.m.count() != g.order())
        throw std::invalid_argument("partition does not cover the graph");
}

}  // namespace

std::string_view to_string(NGDMethod m) {
    switch (m) {
        case NGDMethod::type1_closed_form: return "type1-closed-form";
        case NGDMethod::type2_closed_form: return "type2-closed-form";
        case NGDMethod::type3_theorem: return "type3-theorem";
        case NGDMethod::oracle: return "oracle";
    }
    return "unknown";
}

ABLMPartition ablm_partition(const Graph& g, const NGClassification& cls) {
    require_type1(cls);
    ABLMPartition p;
    p.a = cls.partition.a;
    p.b = cls.partition.b;
    for (int v : cls.partition.c) {
        if (p.b.subset_of(g.neighbors(v)))
            p.l.add(v);
        else
            p.m.add(v);
    }
    return p;
}

int compute_x(const Graph& g, const ABLMPartition& p) {
    validate_partition(g, p);
    if (p.m.empty()) return 0;
    return extra_colors_over_clique(g, p.b, p.m);
}

int compute_y(const Graph& g, const ABLMPartition& p) {
    validate_partition(g, p);
    if (p.b.empty()) return 0;
    return extra_colors_over_clique(complement(g), p.m, p.b);
}

std::pair<int, int> chi_d_type1(const Graph& g, const ABLMPartition& p, int x, int y) {
    validate_partition(g, p);
    const int a = p.a_size();
    const int l = p.l_size();
    return {p.b_size() + std::max({a, l, x}), p.m_size() + std::max(a + l, y)};
}

int distinguishing_number_formula(const Graph& g, const ABLMPartition& p) {
    validate_partition(g, p);
    const VertexSet bm = p.b | p.m;
    const AutomorphismSet stabilizer = restricted_automorphisms(g, p.a | p.l);
    const AutomorphismSet gamma = restrict_to(stabilizer, bm);
    const int d_gamma = distinguishing_number(induced_subgraph(g, bm), gamma);
    return std::max({p.a_size(), p.l_size(), d_gamma});
}

NGDReport decide_ngd(const Graph& g, int max_oracle_n) {
    if (g.order() < 1) throw std::invalid_argument("decide_ngd requires at least one vertex");

    const NGClassification cls = recognize_ng(g);
    NGDReport report;

    if (cls.is_ng && cls.has_type(3)) {
        report.method = NGDMethod::type3_theorem;
        report.is_ngd = false;
        return report;
    }

    if (cls.is_ng && cls.has_type(1)) {
        const ABLMPartition p = ablm_partition(g, cls);
        const int x = compute_x(g, p);
        const int y = compute_y(g, p);
        const int dist = distinguishing_number_formula(g, p);
        const auto [cd, cd_bar] = chi_d_type1(g, p, x, y);
        report.method = NGDMethod::type1_closed_form;
        report.is_ngd = dist == std::max(p.a_size(), p.l_size());
        report.a = p.a_size();
        report.b = p.b_size();
        report.l = p.l_size();
        report.m = p.m_size();
        report.x = x;
        report.y = y;
        report.dist = dist;
        report.chi_d = cd;
        report.chi_d_complement = cd_bar;
        return report;
    }

    if (cls.is_ng) {  // Type 2 only: decide through the Type 1 complement
        const Graph gc = complement(g);
        const NGClassification cls_c = recognize_ng(gc);
        if (!cls_c.is_ng || !cls_c.has_type(1))
            throw std::logic_error("complement of a Type 2 NG-graph must be Type 1");
        const ABLMPartition p = ablm_partition(gc, cls_c);
        const int x = compute_x(gc, p);
        const int y = compute_y(gc, p);
        const int dist = distinguishing_number_formula(gc, p);  // = D(G)
        const auto [cd_bar, cd] = chi_d_type1(gc, p, x, y);
        report.method = NGDMethod::type2_closed_form;
        report.is_ngd = dist == std::max(p.a_size(), p.l_size());
        // |A_G| = |A_complement|; the count of B_G vertices without
        // C_G-neighbors equals |L| of the complement
        if (dist == p.a_size() && dist == p.l_size())
            report.type2_disjunct = 'b';
        else if (dist == p.a_size())
            report.type2_disjunct = 'a';
        else if (dist == p.l_size())
            report.type2_disjunct = 'l';
        report.a = p.a_size();
        report.b = p.b_size();
        report.l = p.l_size();
        report.m = p.m_size();
        report.x = x;
        report.y = y;
        report.dist = dist;
        report.chi_d = cd;
        report.chi_d_complement = cd_bar;
        return report;
    }

    if (g.order() > max_oracle_n)
        throw guard_error("NGD oracle fallback exceeds the configured size gate");
    const AutomorphismSet auts = automorphisms(g);
    const int dist = distinguishing_number(g, auts);
    const int cd = distinguishing_chromatic_number(g, auts);
    const int cd_bar = distinguishing_chromatic_number(complement(g), auts);
    report.method = NGDMethod::oracle;
    report.is_ngd = cd + cd_bar == g.order() + dist;
    report.dist = dist;
    report.chi_d = cd;
    report.chi_d_complement = cd_bar;
    return report;
}

bool is_ngd_oracle(const Graph& g) {
    const AutomorphismSet auts = automorphisms(g);
    const int cd = distinguishing_chromatic_number(g, auts);
    const int cd_bar = distinguishing_chromatic_number(complement(g), auts);
    return cd + cd_bar == g.order() + distinguishing_number(g, auts);
}

}  // namespace nglab
