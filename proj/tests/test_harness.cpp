#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nglab/analyze.hpp"
#include "nglab/enumerate.hpp"
#include "nglab/generators.hpp"
#include "nglab/graph6.hpp"
#include "nglab/verify.hpp"
#include "test_util.hpp"

using namespace nglab;

TEST_CASE("per-graph analysis of the separating examples") {
    const AnalyzeReport c5 = analyze_graph(cycle(5));
    CHECK(c5.cls.is_ng);
    CHECK(c5.cls.types == std::vector<int>{3});
    CHECK(c5.cls.k == 3);
    REQUIRE(c5.ngd.has_value());
    CHECK(!c5.ngd->is_ngd);
    CHECK(c5.oracle_checked);
    CHECK(!c5.oracle_mismatch);

    const AnalyzeReport k32 = analyze_graph(complete_multipartite({3, 2}));
    CHECK(!k32.cls.is_ng);
    REQUIRE(k32.ngd.has_value());
    CHECK(k32.ngd->is_ngd);

    const AnalyzeReport k1 = analyze_graph(Graph(1));
    CHECK(k1.cls.is_ng);
    CHECK(k1.cls.k == 1);
    REQUIRE(k1.ngd.has_value());
    CHECK(k1.ngd->is_ngd);
}

TEST_CASE("report JSON carries the advertised fields") {
    const nlohmann::json j = report_to_json(analyze_graph(cycle(5)));
    CHECK(j["n"] == 5);
    CHECK(j["graph6"] == emit_graph6(cycle(5)));
    CHECK(j["is_ng"] == true);
    CHECK(j["types"] == nlohmann::json::array({3}));
    CHECK(j["chi"] == 3);
    CHECK(j["chi_complement"] == 3);
    CHECK(j["is_ngd"] == false);
    CHECK(j["method"] == "type3-theorem");
    CHECK(j["oracle_checked"] == true);
    CHECK(!j.contains("oracle_mismatch"));

    const nlohmann::json arms = report_to_json(analyze_graph(matched_arms_graph()));
    CHECK(arms["a"] == 1);
    CHECK(arms["b"] == 5);
    CHECK(arms["l"] == 0);
    CHECK(arms["m"] == 5);
    CHECK(arms["x"] == 0);
    CHECK(arms["y"] == 0);
    CHECK(arms["D"] == 3);
    CHECK(arms["oracle_checked"] == false);  // 11 vertices exceeds the default gate

    // beyond every closed form and beyond the oracle gate: NGD fields are
    // omitted and the reason is recorded
    const nlohmann::json big = report_to_json(analyze_graph(cycle(20)));
    CHECK(big["is_ng"] == false);
    CHECK(!big.contains("is_ngd"));
    CHECK(big.contains("skipped"));
}

TEST_CASE("filtered class enumeration") {
    const auto all1 = enumerate_reports(1, GraphFilter::all, 8, 1);
    REQUIRE(all1.size() == 1);
    CHECK(all1[0].cls.is_ng);

    const auto ng_not_ngd = enumerate_reports(5, GraphFilter::ng_not_ngd, 8, 2);
    bool has_c5 = false;
    for (const auto& report : ng_not_ngd)
        if (canonical_key(parse_graph6(report.graph6)) == canonical_key(cycle(5))) has_c5 = true;
    CHECK(has_c5);

    const auto ngd_not_ng = enumerate_reports(5, GraphFilter::ngd_not_ng, 8, 2);
    bool has_k32 = false;
    for (const auto& report : ngd_not_ng)
        if (canonical_key(parse_graph6(report.graph6)) ==
            canonical_key(complete_multipartite({3, 2})))
            has_k32 = true;
    CHECK(has_k32);

    for (const auto& report : ng_not_ngd) {
        CHECK(report.cls.is_ng);
        REQUIRE(report.ngd.has_value());
        CHECK(!report.ngd->is_ngd);
    }

    // reports arrive in canonical order
    const auto all4 = enumerate_reports(4, GraphFilter::all, 8, 2);
    CHECK(all4.size() == 11);
    for (std::size_t i = 1; i < all4.size(); ++i)
        CHECK(canonical_key(parse_graph6(all4[i - 1].graph6)) <
              canonical_key(parse_graph6(all4[i].graph6)));

    CHECK(parse_filter("ng-not-ngd") == GraphFilter::ng_not_ngd);
    CHECK(!parse_filter("bogus").has_value());
}

TEST_CASE("empty graph analysis degrades cleanly") {
    const AnalyzeReport empty = analyze_graph(Graph(0));
    CHECK(!empty.cls.is_ng);
    CHECK(!empty.ngd.has_value());
    CHECK(empty.skipped == "empty graph");
    const nlohmann::json j = report_to_json(empty);
    CHECK(j["types"].empty());
    CHECK(!j.contains("is_ngd"));
}

TEST_CASE("worker threads propagate guard errors") {
    // an NGD filter whose oracle gate is below n forces the fallback to refuse
    CHECK_THROWS_AS(enumerate_reports(6, GraphFilter::ngd, 4, 2), guard_error);
}

TEST_CASE("job count does not change enumeration output") {
    const auto solo = enumerate_reports(6, GraphFilter::ng, 8, 1);
    const auto parallel = enumerate_reports(6, GraphFilter::ng, 8, 8);
    REQUIRE(solo.size() == parallel.size());
    for (std::size_t i = 0; i < solo.size(); ++i) {
        CHECK(solo[i].graph6 == parallel[i].graph6);
        CHECK(report_to_json(solo[i]) == report_to_json(parallel[i]));
    }
}

TEST_CASE("tables reproduce the expected family values") {
    for (const auto& row : compute_table1()) CHECK_MESSAGE(row.matches(), row.name);
    for (const auto& row : compute_table2()) CHECK_MESSAGE(row.matches(), row.name);
    const std::string text = render_tables(compute_table1(), compute_table2());
    CHECK(text.find("MISMATCH") == std::string::npos);
    CHECK(text.find("K2,2") != std::string::npos);
}

TEST_CASE("verification runs clean at small orders") {
    const VerificationReport report = run_verification(4, false, 2);
    CHECK(report.passed());
    CHECK(report.suites.size() == 14);
    for (const auto& suite : report.suites) {
        CHECK(suite.violations.empty());
        CHECK(suite.checked > 0);
    }

    const nlohmann::json j = verification_to_json(report);
    CHECK(j["passed"] == true);
    CHECK(j["suites"].size() == report.suites.size());

    CHECK_THROWS_AS(run_verification(7, false, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_verification(8, true, 1), std::invalid_argument);
}

TEST_CASE("recognizer-only mode samples larger orders") {
    const VerificationReport report = run_verification(7, true, 4);
    CHECK(report.passed());
    REQUIRE(report.suites.size() == 2);
    CHECK(report.suites[1].checked == kRecognizerSampleSize);
}
