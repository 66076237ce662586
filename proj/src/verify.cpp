#include "nglab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "nglab/analyze.hpp"
#include "nglab/enumerate.hpp"
#include "nglab/generators.hpp"
#include "nglab/graph6.hpp"
#include "nglab/ng.hpp"
#include "nglab/ngd.hpp"
#include "nglab/oracles.hpp"

namespace nglab {

namespace {

class SuiteRunner {
public:
    explicit SuiteRunner(std::string name) : name_(std::move(name)), start_(clock::now()) {}

    void require(const Graph& g, bool ok, const std::string& claim) {
        if (ok) return;
        const std::scoped_lock lock(mutex_);
        violations_.push_back({emit_graph6(g), claim});
    }

    void tick(std::uint64_t delta = 1) { checked_ += delta; }

    SuiteResult finish() {
        SuiteResult result;
        result.name = std::move(name_);
        result.checked = checked_.load();
        result.violations = std::move(violations_);
        std::sort(result.violations.begin(), result.violations.end(),
                  [](const Violation& a, const Violation& b) {
                      return std::tie(a.graph6, a.claim) < std::tie(b.graph6, b.claim);
                  });
        result.millis =
            std::chrono::duration<double, std::milli>(clock::now() - start_).count();
        return result;
    }

private:
    using clock = std::chrono::steady_clock;
    std::string name_;
    std::atomic<std::uint64_t> checked_{0};
    std::mutex mutex_;
    std::vector<Violation> violations_;
    clock::time_point start_;
};

template <class F>
void for_labeled_parallel(int n, int jobs, F&& fn) {
    const std::uint64_t total = labeled_graph_count(n);
    parallel_ranges(static_cast<std::size_t>(total), jobs, [&](std::size_t begin, std::size_t end) {
        for (std::size_t mask = begin; mask < end; ++mask) fn(graph_from_edge_mask(n, mask));
    });
}

// Canonical colorings (first occurrences of colors in increasing order)
// whose maximum color is exactly r.
template <class F>
void for_each_exact_coloring(const Graph& g, int r, bool proper, F&& fn) {
    const int n = g.order();
    if (n == 0 || r < 1 || r > n) return;
    Coloring coloring(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(r) + 1, 0);
    auto dfs = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            if (used == r) fn(coloring);
            return;
        }
        if (r - used > n - pos) return;
        const std::uint64_t nbrs = g.neighbors(pos).bits;
        const int cap = std::min(used + 1, r);
        for (int c = 1; c <= cap; ++c) {
            if (proper && (masks[static_cast<std::size_t>(c)] & nbrs)) continue;
            coloring[static_cast<std::size_t>(pos)] = c;
            masks[static_cast<std::size_t>(c)] |= std::uint64_t{1} << pos;
            self(self, pos + 1, std::max(used, c));
            masks[static_cast<std::size_t>(c)] &= ~(std::uint64_t{1} << pos);
        }
        coloring[static_cast<std::size_t>(pos)] = 0;
    };
    dfs(dfs, 0, 0);
}

bool isomorphic_brute(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n && match; ++v)
                if (a.has_edge(u, v) !=
                    b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                    match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

void partitions_of(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            fn(parts);
            return;
        }
        for (int next = std::min(remaining, cap); next >= 1; --next) {
            parts.push_back(next);
            self(self, remaining - next, next);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
}

bool is_complete_graph(const Graph& g) {
    const int n = g.order();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_odd_cycle(const Graph& g) {
    const int n = g.order();
    if (n < 3 || n % 2 == 0 || g.edge_count() != n) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// All k in 1..n passing the six recognition conditions; the recognizer
// returns the first, this exposes possible duplicates.
std::vector<int> all_passing_k(const Graph& g) {
    std::vector<int> passing;
    for (int k = 1; k <= g.order(); ++k)
        if (check_ng_conditions(g, abc_candidate(g, k)).all_passed()) passing.push_back(k);
    return passing;
}

void check_recognizer_against_oracle(SuiteRunner& suite, const Graph& g) {
    suite.tick();
    const std::vector<int> passing = all_passing_k(g);
    if (passing.size() > 1) {
        std::string ks;
        for (int k : passing) ks += " " + std::to_string(k);
        suite.require(g, false, "several candidate chromatic numbers pass all conditions:" + ks);
    }
    const NGClassification cls = recognize_ng(g);
    const bool oracle = is_ng_oracle(g);
    suite.require(g, cls.is_ng == oracle, "recognizer disagrees with the chromatic oracle");
    if (cls.is_ng && oracle)
        suite.require(g, cls.k == chromatic_number(g), "recognized chromatic number is wrong");
}

}  // namespace

SuiteResult suite_graph_basics(int max_n) {
    SuiteRunner suite("graph-basics");
    for (int n = 0; n <= std::min(max_n, 6); ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            suite.tick();
            suite.require(g, complement(complement(g)) == g, "complement is not an involution");
            const Graph comp = complement(g);
            for (int v = 0; v < n; ++v)
                suite.require(g, g.degree(v) + comp.degree(v) == n - 1,
                              "degree sum with complement is not n-1");
            suite.require(g, parse_graph6(emit_graph6(g)) == g, "graph6 round-trip changed the graph");
        });
    }
    return suite.finish();
}

SuiteResult suite_isomorphism_classes(int max_n) {
    SuiteRunner suite("isomorphism-classes");
    for (int n = 0; n <= std::min(max_n, 5); ++n) {
        const std::vector<Graph> reps = nonisomorphic_graphs(n);
        for (std::size_t i = 0; i < reps.size(); ++i) {
            suite.tick();
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                suite.require(reps[i], !isomorphic_brute(reps[i], reps[j]),
                              "duplicate isomorphism class representatives");
        }
        if (n <= 4) {
            for_each_labeled_graph(n, [&](const Graph& g) {
                bool covered = false;
                for (const Graph& rep : reps)
                    if (isomorphic_brute(g, rep)) {
                        covered = true;
                        break;
                    }
                suite.require(g, covered, "labeled graph matches no class representative");
            });
        }
    }
    return suite.finish();
}

SuiteResult suite_chromatic_bounds(int max_n, int jobs) {
    SuiteRunner suite("chromatic-bounds");
    for (int n = 0; n <= std::min(max_n, 6); ++n) {
        for_labeled_parallel(n, jobs, [&](const Graph& g) {
            suite.tick();
            const int chi = chromatic_number(g);
            const int chi_bar = chromatic_number(complement(g));
            const int sum = chi + chi_bar;
            const int product = chi * chi_bar;
            suite.require(g, sum <= n + 1, "chi sum exceeds n+1");
            suite.require(g, sum * sum >= 4 * n, "chi sum below 2*sqrt(n)");
            suite.require(g, product >= n, "chi product below n");
            suite.require(g, 4 * product <= (n + 1) * (n + 1), "chi product exceeds ((n+1)/2)^2");
            if (is_connected(g) && !is_complete_graph(g) && !is_odd_cycle(g))
                suite.require(g, chi <= g.max_degree(), "chi exceeds max degree on a Brooks graph");
        });
    }
    return suite.finish();
}

SuiteResult suite_distinguishing_bounds(int max_n, int jobs) {
    SuiteRunner suite("distinguishing-bounds");
    for (int n = 0; n <= std::min(max_n, 6); ++n) {
        for_labeled_parallel(n, jobs, [&](const Graph& g) {
            suite.tick();
            const Graph comp = complement(g);
            const AutomorphismSet auts = automorphisms(g);
            const AutomorphismSet auts_comp = automorphisms(comp);

            bool same_group = auts.size() == auts_comp.size();
            for (std::size_t i = 0; same_group && i < auts.size(); ++i) {
                const auto p = auts.perm(i);
                const auto q = auts_comp.perm(i);
                same_group = std::equal(p.begin(), p.end(), q.begin(), q.end());
            }
            suite.require(g, same_group, "automorphism groups of graph and complement differ");

            const int chi = chromatic_number(g);
            const int dist = distinguishing_number(g, auts);
            const int dist_comp = distinguishing_number(comp, auts_comp);
            suite.require(g, dist == dist_comp, "distinguishing number differs on the complement");

            const int cd = distinguishing_chromatic_number(g, auts);
            const int cd_bar = distinguishing_chromatic_number(comp, auts_comp);
            suite.require(g, chi <= cd, "chi_D below chi");
            suite.require(g, cd + cd_bar <= n + dist, "chi_D sum exceeds n + D");
            suite.require(g, 4 * cd * cd_bar <= (n + dist) * (n + dist),
                          "chi_D product exceeds ((n+D)/2)^2");
            suite.require(g, (cd + cd_bar) * (cd + cd_bar) >= 4 * n, "chi_D sum below 2*sqrt(n)");
            suite.require(g, cd * cd_bar >= n, "chi_D product below n");
        });
    }
    return suite.finish();
}

SuiteResult suite_subgroup_bound(int max_n) {
    SuiteRunner suite("subgroup-bound");
    for (int n = 0; n <= std::min(max_n, 5); ++n) {
        for (const Graph& g : nonisomorphic_graphs(n)) {
            const Graph comp = complement(g);
            const std::uint64_t subsets = std::uint64_t{1} << n;
            for (std::uint64_t bits = 0; bits < subsets; ++bits) {
                suite.tick();
                const AutomorphismSet gamma = restricted_automorphisms(g, VertexSet(bits));
                const int dist = distinguishing_number(g, gamma);
                const int cd = distinguishing_chromatic_number(g, gamma);
                const int cd_bar = distinguishing_chromatic_number(comp, gamma);
                suite.require(g, cd + cd_bar <= n + dist,
                              "subgroup-relative chi_D sum exceeds n + D");
            }
        }
    }
    return suite.finish();
}

SuiteResult suite_multipartite(int max_n) {
    SuiteRunner suite("multipartite");
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        partitions_of(n, [&](const std::vector<int>& parts) {
            suite.tick();
            const Graph g = complete_multipartite(parts);
            const Graph comp = complement(g);
            const AutomorphismSet auts = automorphisms(g);
            suite.require(g, distinguishing_chromatic_number(g, auts) == n,
                          "complete multipartite chi_D is not n");
            suite.require(g, distinguishing_chromatic_number(comp, auts) ==
                                 distinguishing_number(comp, auts),
                          "complement chi_D is not its distinguishing number");
            suite.require(g, is_ngd_oracle(g), "complete multipartite graph is not an NGD-graph");
        });
    }
    return suite.finish();
}

SuiteResult suite_recognizer_equivalence(int max_n, int jobs) {
    SuiteRunner suite("recognizer-vs-oracle");
    for (int n = 0; n <= std::min(max_n, 6); ++n)
        for_labeled_parallel(n, jobs, [&](const Graph& g) { check_recognizer_against_oracle(suite, g); });
    return suite.finish();
}

SuiteResult suite_recognizer_sample(int n, int count, std::uint64_t seed, int jobs) {
    SuiteRunner suite("recognizer-vs-oracle-sample-n" + std::to_string(n));
    std::mt19937_64 rng(seed);
    const std::uint64_t total = labeled_graph_count(n);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(count));
    for (auto& mask : masks) mask = rng() & (total - 1);  // total is a power of two
    parallel_ranges(masks.size(), jobs, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            check_recognizer_against_oracle(suite, graph_from_edge_mask(n, masks[i]));
    });
    return suite.finish();
}

SuiteResult suite_complement_type_flip(int max_n) {
    SuiteRunner suite("complement-type-flip");
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        for (const Graph& g : nonisomorphic_graphs(n)) {
            suite.tick();
            const NGClassification cls = recognize_ng(g);
            suite.require(g, cls.types.empty() != cls.is_ng, "type set empty iff not an NG-graph");
            if (!cls.is_ng) continue;
            suite.require(g, (cls.has_type(1) && cls.has_type(2)) == (cls.partition.a.count() == 1),
                          "types 1 and 2 co-held exactly when |A| = 1");
            const Graph comp = complement(g);
            const NGClassification cls_c = recognize_ng(comp);
            suite.require(g, cls_c.is_ng, "complement of an NG-graph is not an NG-graph");
            if (!cls_c.is_ng) continue;
            suite.require(g, cls.has_type(1) == cls_c.has_type(2),
                          "Type 1 does not flip to Type 2 under complement");
            suite.require(g, cls.has_type(2) == cls_c.has_type(1),
                          "Type 2 does not flip to Type 1 under complement");
            suite.require(g, cls.has_type(3) == cls_c.has_type(3),
                          "Type 3 is not preserved under complement");
            suite.require(g, cls.partition.a == cls_c.partition.a,
                          "degree partition A differs on the complement");
        }
    }
    return suite.finish();
}

SuiteResult suite_unique_color_vertex(int max_n) {
    SuiteRunner suite("unique-color-vertex");
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        for (const Graph& g : nonisomorphic_graphs(n)) {
            const NGClassification cls = recognize_ng(g);
            if (!cls.is_ng || !cls.has_type(1)) continue;
            suite.tick();
            VertexSet uniquely_colorable;
            for_each_exact_coloring(g, cls.k, /*proper=*/true, [&](const Coloring& c) {
                for (int v = 0; v < n; ++v) {
                    bool unique = true;
                    for (int w = 0; w < n && unique; ++w)
                        if (w != v && c[static_cast<std::size_t>(w)] == c[static_cast<std::size_t>(v)])
                            unique = false;
                    if (unique) uniquely_colorable.add(v);
                }
            });
            for (int v : cls.partition.a | cls.partition.b)
                suite.require(g, uniquely_colorable.contains(v),
                              "no optimal coloring isolates vertex " + std::to_string(v));
        }
    }
    return suite.finish();
}

SuiteResult suite_critical_vertices(int max_n) {
    SuiteRunner suite("critical-vertices");
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        for (const Graph& g : nonisomorphic_graphs(n)) {
            const NGClassification cls = recognize_ng(g);
            if (!cls.is_ng) continue;
            suite.tick();
            const Graph comp = complement(g);
            for (int v : cls.partition.b) {
                suite.require(g, is_color_critical(g, v),
                              "high-degree vertex is not color-critical");
                suite.require(g, !is_color_critical(comp, v),
                              "high-degree vertex is color-critical in the complement");
            }
        }
    }
    return suite.finish();
}

SuiteResult suite_color_classes_ng(int max_n) {
    SuiteRunner suite("ngd-color-classes");
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        for (const Graph& g : nonisomorphic_graphs(n)) {
            if (!is_ngd_oracle(g)) continue;
            suite.tick();
            const AutomorphismSet auts = automorphisms(g);
            const int dist = distinguishing_number(g, auts);
            for_each_exact_coloring(g, dist, /*proper=*/false, [&](const Coloring& c) {
                if (!is_distinguishing(g, c, auts)) return;
                for (int color = 1; color <= dist; ++color) {
                    VertexSet cls_set;
                    for (int v = 0; v < n; ++v)
                        if (c[static_cast<std::size_t>(v)] == color) cls_set.add(v);
                    suite.require(g, is_ng_oracle(induced_subgraph(g, cls_set)),
                                  "color class of a distinguishing coloring induces a non-NG graph");
                }
            });
        }
    }
    return suite.finish();
}

SuiteResult suite_type1_parameters(int max_n, int jobs) {
    SuiteRunner suite("type1-parameters");
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        const std::vector<Graph> classes = nonisomorphic_graphs(n);
        parallel_ranges(classes.size(), jobs, [&](std::size_t begin, std::size_t end) {
            for (std::size_t idx = begin; idx < end; ++idx) {
                const Graph& g = classes[idx];
                const NGClassification cls = recognize_ng(g);
                if (!cls.is_ng || !cls.has_type(1)) continue;
                suite.tick();

                const ABLMPartition p = ablm_partition(g, cls);
                const int a = p.a_size(), b = p.b_size(), l = p.l_size(), m = p.m_size();
                for (int v : p.l)
                    suite.require(g, g.degree(v) == b, "L vertex degree is not |B|");
                for (int v : p.m)
                    suite.require(g, g.degree(v) <= b - 1, "M vertex degree is not below |B|");
                suite.require(g, a != 1 || l == 0, "|A| = 1 but L is nonempty");

                const int x = compute_x(g, p);
                const int y = compute_y(g, p);
                const AutomorphismSet auts = automorphisms(g);
                const int dist = distinguishing_number(g, auts);

                suite.require(g, x >= 0 && y >= 0, "x or y negative");
                suite.require(g, x + y <= dist, "x + y exceeds D");
                suite.require(g, x < dist, "x is not below D");
                if (l == 0) suite.require(g, y < dist, "y is not below D when L is empty");
                suite.require(g, dist >= std::max(a, l), "D below max(|A|, |L|)");

                const VertexSet bm = p.b | p.m;
                const AutomorphismSet stabilizer = restricted_automorphisms(g, p.a | p.l);
                const AutomorphismSet gamma = restrict_to(stabilizer, bm);
                suite.require(g, auts.size() == factorial(a) * factorial(l) * stabilizer.size(),
                              "|Aut| is not a! * l! * |stabilizer|");

                // every automorphism preserves the blocks and restricts into the stabilizer
                std::set<std::vector<std::uint8_t>> gamma_elements;
                for (std::size_t i = 0; i < stabilizer.size(); ++i) {
                    const auto q = stabilizer.perm(i);
                    gamma_elements.emplace(q.begin(), q.end());
                }
                for (std::size_t i = 0; i < auts.size(); ++i) {
                    const auto q = auts.perm(i);
                    bool blocks_preserved = true;
                    std::vector<std::uint8_t> bm_part(q.size());
                    for (int v = 0; v < n; ++v) {
                        const int w = q[static_cast<std::size_t>(v)];
                        const bool same_block = (p.a.contains(v) == p.a.contains(w)) &&
                                                (p.b.contains(v) == p.b.contains(w)) &&
                                                (p.l.contains(v) == p.l.contains(w)) &&
                                                (p.m.contains(v) == p.m.contains(w));
                        if (!same_block) blocks_preserved = false;
                        bm_part[static_cast<std::size_t>(v)] =
                            bm.contains(v) ? static_cast<std::uint8_t>(w) : static_cast<std::uint8_t>(v);
                    }
                    suite.require(g, blocks_preserved, "automorphism does not preserve the ABLM blocks");
                    if (blocks_preserved)
                        suite.require(g, gamma_elements.count(bm_part) == 1,
                                      "automorphism restriction to B u M is outside the stabilizer");
                }

                suite.require(g, distinguishing_number_formula(g, p) == dist,
                              "distinguishing-number formula disagrees with the oracle");

                const auto [cd_formula, cd_bar_formula] = chi_d_type1(g, p, x, y);
                const Graph comp = complement(g);
                suite.require(g, cd_formula == distinguishing_chromatic_number(g, auts),
                              "chi_D formula disagrees with the oracle");
                suite.require(g, cd_bar_formula == distinguishing_chromatic_number(comp, auts),
                              "complement chi_D formula disagrees with the oracle");

                // x and y against their defining subgroup-relative quantities
                const Graph bm_graph = induced_subgraph(g, bm);
                suite.require(g, b + x == distinguishing_chromatic_number(bm_graph, gamma),
                              "x disagrees with the subgroup-relative chi_D of G[B u M]");
                suite.require(g, m + y == distinguishing_chromatic_number(complement(bm_graph), gamma),
                              "y disagrees with the subgroup-relative chi_D of the complement");
            }
        });
    }
    return suite.finish();
}

SuiteResult suite_ngd_dispatch(int max_n, int max_oracle_n, int jobs) {
    SuiteRunner suite("ngd-closed-form-vs-oracle");
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        const std::vector<Graph> classes = nonisomorphic_graphs(n);
        parallel_ranges(classes.size(), jobs, [&](std::size_t begin, std::size_t end) {
            for (std::size_t idx = begin; idx < end; ++idx) {
                const Graph& g = classes[idx];
                const NGClassification cls = recognize_ng(g);
                if (!cls.is_ng) continue;
                suite.tick();

                const NGDReport report = decide_ngd(g, max_oracle_n);
                const bool oracle = is_ngd_oracle(g);
                suite.require(g, report.is_ngd == oracle,
                              "closed-form NGD verdict disagrees with the oracle");

                if (report.chi_d && report.chi_d_complement && report.dist)
                    suite.require(g,
                                  report.is_ngd ==
                                      (*report.chi_d + *report.chi_d_complement == n + *report.dist),
                                  "report fields inconsistent with the NGD identity");

                if (report.method == NGDMethod::type2_closed_form && report.dist) {
                    const bool or_form = *report.dist == *report.a || *report.dist == *report.l;
                    suite.require(g, or_form == report.is_ngd,
                                  "Type 2 or-form and max-form verdicts differ");
                }

                // graphs that are both Type 1 and Type 2 must agree on both routes
                if (cls.has_type(1) && cls.has_type(2)) {
                    const Graph comp = complement(g);
                    const NGClassification cls_c = recognize_ng(comp);
                    const ABLMPartition pc = ablm_partition(comp, cls_c);
                    const int dist_c = distinguishing_number_formula(comp, pc);
                    const bool type2_verdict = dist_c == std::max(pc.a_size(), pc.l_size());
                    suite.require(g, type2_verdict == report.is_ngd,
                                  "Type 1 and Type 2 criteria disagree when |A| = 1");
                }
            }
        });
    }
    return suite.finish();
}

SuiteResult suite_builders(int max_n) {
    SuiteRunner suite("ng-builder");
    std::vector<NGBlueprint> corpus;
    for (const NGShape shape : {NGShape::clique_a, NGShape::independent_a, NGShape::five_cycle_a}) {
        const int a_lo = shape == NGShape::five_cycle_a ? 5 : 1;
        const int a_hi = shape == NGShape::five_cycle_a ? 5 : 3;
        for (int a = a_lo; a <= a_hi; ++a)
            for (int b = 0; b <= 3; ++b)
                for (int c = 0; c <= 3; ++c)
                    for (std::uint64_t seed : {1u, 2u, 3u})
                        if (a + b + c <= std::min(std::max(max_n, 5), kMaxChromaticVertices))
                            corpus.push_back(random_ng_blueprint(shape, a, b, c, seed));
    }
    for (const NGBlueprint& bp : corpus) {
        suite.tick();
        const Graph g = build_ng(bp);
        suite.require(g, recognize_ng(g).is_ng, "built graph is not recognized as an NG-graph");
        suite.require(g, is_ng_oracle(g), "built graph fails the chromatic oracle");
    }
    return suite.finish();
}

VerificationReport run_verification(int max_n, bool recognizer_only, int jobs) {
    VerificationReport report;
    report.max_n = max_n;
    report.recognizer_only = recognizer_only;

    if (recognizer_only) {
        if (max_n > 7) throw std::invalid_argument("recognizer-only verification is capped at n = 7");
        report.suites.push_back(suite_recognizer_equivalence(std::min(max_n, 6), jobs));
        if (max_n >= 7)
            report.suites.push_back(
                suite_recognizer_sample(7, kRecognizerSampleSize, kRecognizerSampleSeed, jobs));
        return report;
    }

    if (max_n > 6)
        throw std::invalid_argument("full verification is capped at n = 6; use recognizer-only for 7");

    report.suites.push_back(suite_graph_basics(max_n));
    report.suites.push_back(suite_isomorphism_classes(max_n));
    report.suites.push_back(suite_chromatic_bounds(max_n, jobs));
    report.suites.push_back(suite_distinguishing_bounds(max_n, jobs));
    report.suites.push_back(suite_subgroup_bound(max_n));
    report.suites.push_back(suite_multipartite(max_n));
    report.suites.push_back(suite_recognizer_equivalence(max_n, jobs));
    report.suites.push_back(suite_complement_type_flip(max_n));
    report.suites.push_back(suite_unique_color_vertex(max_n));
    report.suites.push_back(suite_critical_vertices(max_n));
    report.suites.push_back(suite_color_classes_ng(max_n));
    report.suites.push_back(suite_type1_parameters(max_n, jobs));
    report.suites.push_back(suite_ngd_dispatch(max_n, std::max(max_n, kDefaultMaxOracleN), jobs));
    report.suites.push_back(suite_builders(max_n));
    return report;
}

nlohmann::json verification_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["max_n"] = report.max_n;
    j["recognizer_only"] = report.recognizer_only;
    j["passed"] = report.passed();
    j["suites"] = nlohmann::json::array();
    for (const SuiteResult& suite : report.suites) {
        nlohmann::json s;
        s["name"] = suite.name;
        s["checked"] = suite.checked;
        s["passed"] = suite.passed();
        s["millis"] = suite.millis;
        s["violations"] = nlohmann::json::array();
        for (const Violation& v : suite.violations)
            s["violations"].push_back({{"graph6", v.graph6}, {"claim", v.claim}});
        j["suites"].push_back(std::move(s));
    }
    return j;
}

}  // namespace nglab
