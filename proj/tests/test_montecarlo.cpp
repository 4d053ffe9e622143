#include <doctest.h>

#include "lots/generators.hpp"
#include "lots/montecarlo.hpp"
#include "lots/oracle.hpp"

#include "support/random_markets.hpp"

using namespace lots;

TEST_CASE("monte carlo runs are deterministic") {
    GeneratedCase c = gen_thm2(2);
    MonteCarloOptions opt;
    opt.trials = 50;
    opt.master_seed = 99;
    opt.partition = c.partition;

    PairedTrials paired_a, paired_b;
    auto a = compare_procedures(c.market, {ProcedureKind::QingOne, ProcedureKind::QingTwo},
                                c.regime, opt, &paired_a);
    auto b = compare_procedures(c.market, {ProcedureKind::QingOne, ProcedureKind::QingTwo},
                                c.regime, opt, &paired_b);
    for (std::size_t p = 0; p < a.size(); ++p) {
        CHECK(a[p].mean_size == b[p].mean_size);
        CHECK(a[p].size_histogram == b[p].size_histogram);
        CHECK(a[p].frac_maximum == b[p].frac_maximum);
    }
    CHECK(paired_a.sizes == paired_b.sizes);
    CHECK(paired_a.trial_seeds == paired_b.trial_seeds);
}

TEST_CASE("qing two always hits the maximum on the thm2 market") {
    GeneratedCase c = gen_thm2(2);
    MonteCarloOptions opt;
    opt.trials = 1000;
    opt.master_seed = 4;
    opt.partition = c.partition;
    TrialStats stats = run_monte_carlo(c.market, ProcedureKind::QingTwo, c.regime, opt);
    CHECK(stats.frac_maximum == 1.0);
    CHECK(stats.mean_size == 4.0);
}

TEST_CASE("first ming is deterministic in size under eligibility only") {
    GeneratedCase c = gen_prop1(2);
    MonteCarloOptions opt;
    opt.trials = 500;
    opt.master_seed = 5;
    opt.partition = c.partition;
    TrialStats stats = run_monte_carlo(c.market, ProcedureKind::MingOne, c.regime, opt);
    CHECK(stats.mean_size == 4.0);
    CHECK(stats.size_histogram.size() == 1);
    CHECK(stats.size_histogram.at(4) == 500);
    REQUIRE(stats.frac_hl_optimal.has_value());
    CHECK(*stats.frac_hl_optimal == 1.0);
}

TEST_CASE("paired per-trial sizes satisfy qing2 >= qing1") {
    SplitMix64 rng(51);
    int checked = 0;
    for (int round = 0; round < 600; ++round) {
        Market m = testsupport::random_market(
            rng, {.max_workers = 8, .max_jobs = 8, .max_regions = 4, .exact_fill = true});
        QingPartition part = testsupport::random_partition(rng, m);
        MonteCarloOptions opt;
        opt.trials = 2;
        opt.master_seed = rng.next();
        opt.partition = part;
        opt.oracle_bound = 0; // skip the hl sweep; sizes are what matter here

        PairedTrials paired;
        compare_procedures(m, {ProcedureKind::QingOne, ProcedureKind::QingTwo},
                           CompatibilityRegime::EligibilityAndAvoidance, opt, &paired);
        for (const auto& row : paired.sizes) {
            CHECK(row[1] >= row[0]);
            ++checked;
        }
    }
    CHECK(checked == 1200);
}

TEST_CASE("single-region markets match nobody under avoidance") {
    Market m({"X"},
             {{"w1", WorkerCategory::A, "X", 1}, {"w2", WorkerCategory::A, "X", 2}},
             {{"j1", JobCategory::A, "X"}, {"j2", JobCategory::AB, "X"}});
    MonteCarloOptions opt;
    opt.trials = 20;
    opt.master_seed = 8;
    opt.partition = default_qing_partition(m);
    opt.song_preferences = std::map<std::string, std::vector<std::string>>{
        {"w1", {"j1", "j2"}}, {"w2", {"j1", "j2"}}};
    auto stats = compare_procedures(m,
                                    {ProcedureKind::Song, ProcedureKind::MingOne,
                                     ProcedureKind::MingTwo, ProcedureKind::QingOne,
                                     ProcedureKind::QingTwo, ProcedureKind::TwoTube},
                                    CompatibilityRegime::EligibilityAndAvoidance, opt);
    for (const auto& s : stats) {
        CHECK(s.mean_size == 0.0);
        CHECK(s.frac_maximum == 1.0); // the maximum itself is zero
    }
}

TEST_CASE("prop1 market under eligibility only: ranked draws tie at 2n every trial") {
    GeneratedCase c = gen_prop1(2);
    MonteCarloOptions opt;
    opt.trials = 200;
    opt.master_seed = 17;
    opt.partition = c.partition;
    PairedTrials paired;
    compare_procedures(c.market,
                       {ProcedureKind::MingOne, ProcedureKind::QingOne, ProcedureKind::QingTwo},
                       c.regime, opt, &paired);
    for (const auto& row : paired.sizes)
        for (std::size_t p = 0; p < row.size(); ++p)
            CHECK(row[p] == 4);
}

TEST_CASE("song in monte carlo needs preferences; qing needs a partition") {
    GeneratedCase c = gen_thm2(2);
    MonteCarloOptions opt;
    opt.trials = 1;
    CHECK_THROWS_AS(run_monte_carlo(c.market, ProcedureKind::Song, c.regime, opt), Error);
    CHECK_THROWS_AS(run_monte_carlo(c.market, ProcedureKind::QingOne, c.regime, opt), Error);

    opt.trials = 0;
    CHECK_THROWS_AS(run_monte_carlo(c.market, ProcedureKind::MingTwo, c.regime, opt), Error);

    opt.trials = 3;
    opt.song_preferences = c.plan.job_orders;
    TrialStats stats = run_monte_carlo(c.market, ProcedureKind::Song, c.regime, opt);
    CHECK(stats.size_histogram.at(2) == 3); // fixed preferences, fixed outcome
}

TEST_CASE("hl fraction is absent over the enumeration bound") {
    std::vector<Worker> ws;
    std::vector<Job> js;
    for (int i = 1; i <= 9; ++i) {
        ws.push_back({"w" + std::to_string(i), WorkerCategory::A, "X", i});
        js.push_back({"j" + std::to_string(i), JobCategory::A, "Y"});
    }
    Market m({"X", "Y"}, ws, js);
    MonteCarloOptions opt;
    opt.trials = 2;
    TrialStats stats = run_monte_carlo(m, ProcedureKind::MingTwo,
                                       CompatibilityRegime::EligibilityOnly, opt);
    CHECK_FALSE(stats.frac_hl_optimal.has_value());
    CHECK(stats.frac_maximum == 1.0);
}
