#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "nglab/graph.hpp"

namespace nglab {

struct Violation {
    std::string graph6;
    std::string claim;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<Violation> violations;
    double millis = 0.0;

    bool passed() const { return violations.empty(); }
};

struct VerificationReport {
    int max_n = 0;
    bool recognizer_only = false;
    std::vector<SuiteResult> suites;

    bool passed() const {
        for (const auto& s : suites)
            if (!s.passed()) return false;
        return true;
    }
};

inline constexpr std::uint64_t kRecognizerSampleSeed = 0xC0FFEE;
inline constexpr int kRecognizerSampleSize = 100000;

// Each suite checks one body of claims over exhaustively enumerated
// graphs, capped both by the caller and by the suite's own guard.
SuiteResult suite_graph_basics(int max_n);
SuiteResult suite_isomorphism_classes(int max_n);
SuiteResult suite_chromatic_bounds(int max_n, int jobs);
SuiteResult suite_distinguishing_bounds(int max_n, int jobs);
SuiteResult suite_subgroup_bound(int max_n);
SuiteResult suite_multipartite(int max_n);
SuiteResult suite_recognizer_equivalence(int max_n, int jobs);
SuiteResult suite_recognizer_sample(int n, int count, std::uint64_t seed, int jobs);
SuiteResult suite_complement_type_flip(int max_n);
SuiteResult suite_unique_color_vertex(int max_n);
SuiteResult suite_critical_vertices(int max_n);
SuiteResult suite_color_classes_ng(int max_n);
SuiteResult suite_type1_parameters(int max_n, int jobs);
SuiteResult suite_ngd_dispatch(int max_n, int max_oracle_n, int jobs);
SuiteResult suite_builders(int max_n);

// Full suite needs max_n <= 6; max_n = 7 is allowed in recognizer-only
// mode (exhaustive n <= 6 plus a fixed-seed labeled sample at 7).
VerificationReport run_verification(int max_n, bool recognizer_only, int jobs);
nlohmann::json verification_to_json(const VerificationReport& report);

}  // namespace nglab
