#include <gtest/gtest.h>

#include <filesystem>

#include "permrec/ball_cache.hpp"
#include "permrec/probe.hpp"
#include "permrec/report.hpp"
#include "permrec/verify.hpp"

using namespace permrec;

TEST(Report, TranspositionGraphOfDegreeFour) {
    const auto rep = cayley_graph_report(GeneratorSet::all_transpositions(4), 2);
    const Json j = to_json(rep);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["generator_kind"], "T");
    EXPECT_EQ(j["v"], 24);
    EXPECT_EQ(j["k"], 6);
    EXPECT_EQ(j["lambda"], 0);
    EXPECT_EQ(j["mu"], 3);
    EXPECT_EQ(j["diameter"], 3);
    EXPECT_EQ(j["n_r"]["1"], 3);
    EXPECT_EQ(j["n_r"]["2"], 15);
    EXPECT_TRUE(j["n_s"]["4"].is_null());
    // Witness order follows traversal order; only the class is pinned.
    const std::string w = j["witnesses"]["2"][0];
    EXPECT_TRUE(w.ends_with(" {1^1 3^1}")) << w;
}

TEST(Report, BubbleAndStarSmallCases) {
    EXPECT_EQ(cayley_graph_report(GeneratorSet::prefix(5), 1).n_r.at(1), 2);
    EXPECT_EQ(cayley_graph_report(GeneratorSet::adjacent(3), 1).n_r.at(1), 2);
}

TEST(Report, CsvRowsHaveTheHeaderWidth) {
    const auto rep = cayley_graph_report(GeneratorSet::adjacent(4), 2);
    const auto header = csv_header();
    const auto commas = std::count(header.begin(), header.end(), ',');
    const auto rows = csv_rows(rep);
    EXPECT_EQ(rows.size(), 4u);
    for (const auto& row : rows) EXPECT_EQ(std::count(row.begin(), row.end(), ','), commas);
}

TEST(Report, CacheAndWorkersLeaveTheDocumentUnchanged) {
    const auto dir = std::filesystem::temp_directory_path() / "permrec-report-cache";
    std::filesystem::remove_all(dir);
    const BallCache cache(dir);
    for (auto kind : {GeneratorKind::AllTranspositions, GeneratorKind::Adjacent, GeneratorKind::Prefix}) {
        const auto g = GeneratorSet::make(kind, 5);
        MetricOptions plain;
        MetricOptions cached;
        cached.cache = &cache;
        cached.workers = 3;
        const auto base = to_json(cayley_graph_report(g, 2, plain)).dump();
        EXPECT_EQ(to_json(cayley_graph_report(g, 2, cached)).dump(), base);
        EXPECT_EQ(to_json(cayley_graph_report(g, 2, cached)).dump(), base);
    }
    std::filesystem::remove_all(dir);
}

TEST(Probe, RadiusTwoDegreeFive) {
    const auto p = probe_three_cycle_conjecture(5, 2);
    EXPECT_EQ(p.value, 27);
    EXPECT_EQ(p.attaining_s, std::vector<int>{2});
    EXPECT_EQ(p.attaining_classes, std::vector<std::string>{"1^2 3^1"});
    EXPECT_TRUE(p.three_cycle_attains);
    EXPECT_EQ(to_json(p)["kind"], "probe");
    EXPECT_THROW(probe_three_cycle_conjecture(4, 2), DomainError);
}

TEST(Probe, RadiusOneDegreeThree) {
    const auto p = probe_three_cycle_conjecture(3, 1);
    EXPECT_EQ(p.value, 3);
    EXPECT_TRUE(p.three_cycle_attains);
}

TEST(Verify, SkippedRowsNeverFailARun) {
    std::vector<VerifyRow> rows{{"a", "c", "i", "1", "1", Verdict::Pass, ""},
                                {"b", "c", "i", "", "", Verdict::Skip, "budget"}};
    EXPECT_TRUE(all_passed(rows));
    rows.push_back({"c", "c", "i", "1", "2", Verdict::Fail, ""});
    EXPECT_FALSE(all_passed(rows));
}

TEST(Verify, CapacityOverrunsBecomeSkips) {
    VerifyConfig cfg;
    cfg.max_n = 7;
    cfg.metric.limits.max_whole_graph_degree = 6;
    const auto rows = run_verify("diameters", cfg);
    std::size_t skipped = 0;
    for (const auto& r : rows) {
        if (r.instance == "n=7") {
            EXPECT_EQ(r.verdict, Verdict::Skip);
            EXPECT_FALSE(r.reason.empty());
            ++skipped;
        } else {
            EXPECT_EQ(r.verdict, Verdict::Pass) << r.id << " " << r.instance;
        }
    }
    EXPECT_EQ(skipped, 3u);
}

TEST(Verify, SuitesThatHoldPassEntirely) {
    VerifyConfig cfg;
    cfg.max_n = 5;
    cfg.trials = 50;
    for (const char* suite : {"classes", "factorizations", "local-params", "n-values", "diameters", "structure",
                              "distance-regular", "closed-forms", "bounds", "reconstruction"}) {
        for (const auto& r : run_verify(suite, cfg)) {
            EXPECT_NE(r.verdict, Verdict::Fail) << suite << ": " << r.id << " " << r.instance << " expected "
                                                << r.expected << " measured " << r.measured;
        }
    }
}

TEST(Verify, KnownDisagreementsAreReportedAsFailures) {
    VerifyConfig cfg;
    cfg.max_n = 5;
    std::vector<std::string> failing;
    for (const auto& r : run_verify("ns-table", cfg)) {
        if (r.verdict == Verdict::Fail) failing.push_back(r.id + " " + r.instance + " " + r.measured);
    }
    for (const auto& r : run_verify("lambda-mu", cfg)) {
        if (r.verdict == Verdict::Fail) failing.push_back(r.id + " " + r.instance + " " + r.measured);
    }
    const std::vector<std::string> expected{"bubble.ns.s3 n=4 4", "bubble.ns.s3 n=5 4", "star.ns.s2 n=5 6",
                                            "bubble.lambda_mu n=3 (0,1)"};
    EXPECT_EQ(failing, expected);
}

TEST(Verify, BoundsSuiteMarksBubbleAttainment) {
    VerifyConfig cfg;
    cfg.max_n = 5;
    bool saw = false;
    for (const auto& r : run_verify("bounds", cfg)) {
        if (r.id == "bubble.lower_bound_attained") {
            saw = true;
            EXPECT_EQ(r.verdict, Verdict::Pass) << r.instance;
        }
        if (r.id == "multipartite.upper_bound_attained") {
            EXPECT_EQ(r.verdict, Verdict::Pass);
            EXPECT_NE(r.measured.find("attained"), std::string::npos);
        }
    }
    EXPECT_TRUE(saw);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_verify("nope", VerifyConfig{}), DomainError); }
