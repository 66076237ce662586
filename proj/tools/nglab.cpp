#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nglab/analyze.hpp"
#include "nglab/enumerate.hpp"
#include "nglab/graph6.hpp"
#include "nglab/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

int run_analyze(const std::string& g6, const std::string& file, int max_oracle_n) {
    std::vector<nglab::Graph> graphs;
    try {
        if (!g6.empty()) {
            graphs.push_back(nglab::parse_graph6(g6));
        } else if (file == "-") {
            graphs = nglab::read_graph6_lines(std::cin);
        } else {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "error: cannot open " << file << "\n";
                return kExitInputError;
            }
            graphs = nglab::read_graph6_lines(in);
        }
    } catch (const nglab::graph6_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    bool mismatch = false;
    for (const nglab::Graph& g : graphs) {
        const nglab::AnalyzeReport report = nglab::analyze_graph(g, max_oracle_n);
        mismatch = mismatch || report.oracle_mismatch;
        std::cout << nglab::report_to_json(report).dump() << "\n";
    }
    return mismatch ? kExitCounterexample : kExitOk;
}

int run_enumerate(int n, const std::string& filter_name, int max_oracle_n, int jobs) {
    const auto filter = nglab::parse_filter(filter_name);
    if (!filter) {
        std::cerr << "error: unknown filter " << filter_name << "\n";
        return kExitInputError;
    }
    try {
        for (const nglab::AnalyzeReport& report :
             nglab::enumerate_reports(n, *filter, max_oracle_n, jobs))
            std::cout << nglab::report_to_json(report).dump() << "\n";
    } catch (const nglab::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

int run_verify(int max_n, bool recognizer_only, int jobs) {
    try {
        const nglab::VerificationReport report = nglab::run_verification(max_n, recognizer_only, jobs);
        std::cout << nglab::verification_to_json(report).dump(2) << "\n";
        return report.passed() ? kExitOk : kExitCounterexample;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int run_tables() {
    const auto t1 = nglab::compute_table1();
    const auto t2 = nglab::compute_table2();
    std::cout << nglab::render_tables(t1, t2);
    for (const auto& row : t1)
        if (!row.matches()) return kExitCounterexample;
    for (const auto& row : t2)
        if (!row.matches()) return kExitCounterexample;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nordhaus-Gaddum equality-class analysis"};
    app.require_subcommand(1);

    int max_oracle_n = nglab::kDefaultMaxOracleN;
    app.add_option("--max-oracle-n", max_oracle_n, "size gate for exponential oracle paths")
        ->envname("NGLAB_MAX_ORACLE_N");

    auto* analyze = app.add_subcommand("analyze", "classify one graph or a file of graphs");
    std::string g6, file;
    auto* g6_opt = analyze->add_option("--g6", g6, "graph6 string");
    auto* file_opt = analyze->add_option("--file", file, "file of graph6 lines, - for stdin");
    g6_opt->excludes(file_opt);

    auto* enumerate = app.add_subcommand("enumerate", "classify every isomorphism class at order n");
    int enum_n = 0;
    std::string filter_name = "all";
    int enum_jobs = 1;
    enumerate->add_option("--n", enum_n, "number of vertices")->required();
    enumerate->add_option("--filter", filter_name, "all | ng | ngd | ng-not-ngd | ngd-not-ng");
    enumerate->add_option("--jobs", enum_jobs, "worker threads");

    auto* verify = app.add_subcommand("verify", "run the exhaustive claim suites");
    int max_n = 6;
    bool recognizer_only = false;
    int verify_jobs = 1;
    verify->add_option("--max-n", max_n, "largest graph order to sweep");
    verify->add_flag("--recognizer-only", recognizer_only, "only the recognizer-vs-oracle suites");
    verify->add_option("--jobs", verify_jobs, "worker threads");

    auto* tables = app.add_subcommand("tables", "recompute the classic family tables");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        if (g6.empty() && file.empty()) {
            std::cerr << "error: analyze needs --g6 or --file\n";
            return kExitInputError;
        }
        return run_analyze(g6, file, max_oracle_n);
    }
    if (enumerate->parsed()) return run_enumerate(enum_n, filter_name, max_oracle_n, enum_jobs);
    if (verify->parsed()) return run_verify(max_n, recognizer_only, verify_jobs);
    if (tables->parsed()) return run_tables();
    return kExitInputError;
}
