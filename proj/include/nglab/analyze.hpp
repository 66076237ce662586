#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nglab/graph.hpp"
#include "nglab/ng.hpp"
#include "nglab/ngd.hpp"

namespace nglab {

// Full per-graph verdict: recognition always runs; the NGD decision and
// the oracle cross-check run when the size guards admit them.
struct AnalyzeReport {
    int n = 0;
    std::string graph6;
    NGClassification cls;
    std::optional<NGDReport> ngd;
    std::optional<std::string> skipped;  // why the NGD decision was not produced
    bool oracle_checked = false;
    bool oracle_mismatch = false;
};

AnalyzeReport analyze_graph(const Graph& g, int max_oracle_n = kDefaultMaxOracleN);
nlohmann::json report_to_json(const AnalyzeReport& report);

enum class GraphFilter { all, ng, ngd, ng_not_ngd, ngd_not_ng };
std::optional<GraphFilter> parse_filter(std::string_view name);

// One report per isomorphism class matching the filter, in canonical
// order. NGD-dependent filters evaluate decide_ngd per class.
std::vector<AnalyzeReport> enumerate_reports(int n, GraphFilter filter, int max_oracle_n, int jobs);

struct Table1Row {
    std::string name;
    int n = 0;
    std::array<int, 5> computed{};  // chi_D(G), chi_D(comp), sum, product, D(G)
    std::array<int, 5> expected{};
    bool matches() const { return computed == expected; }
};

struct Table2Row {
    std::string name;
    bool computed_ng = false, computed_ngd = false;
    bool expected_ng = false, expected_ngd = false;
    bool matches() const { return computed_ng == expected_ng && computed_ngd == expected_ngd; }
};

std::vector<Table1Row> compute_table1();
std::vector<Table2Row> compute_table2();
std::string render_tables(const std::vector<Table1Row>& t1, const std::vector<Table2Row>& t2);

// Splits [0, count) into contiguous chunks and runs fn(begin, end) on
// up to `jobs` threads; fn must only touch its own range.
void parallel_ranges(std::size_t count, int jobs, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace nglab
