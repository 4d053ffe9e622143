#include <doctest.h>

#include "lots/generators.hpp"
#include "lots/market.hpp"
#include "lots/rng.hpp"

#include "support/random_markets.hpp"

using namespace lots;

namespace {

Market example1_market() { return gen_example1().market; }

} // namespace

TEST_CASE("market construction validates its invariants") {
    CHECK_THROWS_AS(Market({"X", "X"}, {}, {}), Error);
    CHECK_THROWS_AS(Market({""}, {}, {}), Error);
    CHECK_THROWS_AS(Market({"X"}, {{"w", WorkerCategory::A, "Y", 1}}, {}), Error);
    CHECK_THROWS_AS(Market({"X"}, {}, {{"j", JobCategory::A, "Y"}}), Error);
    CHECK_THROWS_AS(Market({"X"},
                           {{"w", WorkerCategory::A, "X", 1}, {"w", WorkerCategory::B, "X", 1}},
                           {}),
                    Error);
    CHECK_THROWS_AS(Market({"X"},
                           {{"w1", WorkerCategory::A, "X", 1}, {"w2", WorkerCategory::A, "X", 1}},
                           {}),
                    Error);
    CHECK_THROWS_AS(Market({"X"}, {{"w", WorkerCategory::A, "X", 0}}, {}), Error);
    // same rank in different categories is fine
    CHECK_NOTHROW(Market({"X"},
                         {{"w1", WorkerCategory::A, "X", 1}, {"w2", WorkerCategory::B, "X", 1}},
                         {}));
    // ids shared between a worker and a job collide
    CHECK_THROWS_AS(Market({"X"}, {{"n", WorkerCategory::A, "X", 1}},
                           {{"n", JobCategory::A, "X"}}),
                    Error);
}

TEST_CASE("is_compatible implements both regimes") {
    Market m({"X", "Y"},
             {{"wa", WorkerCategory::A, "X", 1}, {"wb", WorkerCategory::B, "Y", 1}},
             {{"ja_x", JobCategory::A, "X"},
              {"jab_y", JobCategory::AB, "Y"},
              {"jb_y", JobCategory::B, "Y"}});

    CHECK(is_compatible(m, CompatibilityRegime::EligibilityOnly, "wa", "jab_y"));
    CHECK_FALSE(is_compatible(m, CompatibilityRegime::EligibilityAndAvoidance, "wa", "ja_x"));
    CHECK(is_compatible(m, CompatibilityRegime::EligibilityOnly, "wa", "ja_x"));
    CHECK_FALSE(is_compatible(m, CompatibilityRegime::EligibilityOnly, "wb", "ja_x"));
    CHECK_FALSE(is_compatible(m, CompatibilityRegime::EligibilityOnly, "wa", "jb_y"));
    CHECK_FALSE(is_compatible(m, CompatibilityRegime::EligibilityAndAvoidance, "wb", "jab_y"));

    CHECK_THROWS_AS(is_compatible(m, CompatibilityRegime::EligibilityOnly, "nope", "ja_x"),
                    Error);
    CHECK_THROWS_AS(is_compatible(m, CompatibilityRegime::EligibilityOnly, "wa", "nope"), Error);
}

TEST_CASE("is_feasible checks every pair") {
    Market m = example1_market();
    auto regime = CompatibilityRegime::EligibilityOnly;

    CHECK(is_feasible(m, regime, Matching{}));
    CHECK(is_feasible(m, regime, Matching::from_pairs({{"w_a", "j_ab"}})));
    CHECK_FALSE(is_feasible(m, regime, Matching::from_pairs({{"w_b", "j_a"}})));
    CHECK_THROWS_AS(is_feasible(m, regime, Matching::from_pairs({{"ghost", "j_a"}})), Error);
}

TEST_CASE("matching_size and one-to-one enforcement") {
    CHECK(matching_size(Matching{}) == 0);
    CHECK(matching_size(Matching::from_pairs({{"w_a", "j_a"}, {"w_b", "j_ab"}})) == 2);
    CHECK(matching_size(Matching::from_pairs({{"w_a", "j_ab"}})) == 1);

    CHECK_THROWS_AS(Matching::from_pairs({{"w", "j1"}, {"w", "j2"}}), Error);
    CHECK_THROWS_AS(Matching::from_pairs({{"w1", "j"}, {"w2", "j"}}), Error);
}

TEST_CASE("level_vector counts the four coordinates") {
    Market empty;
    CHECK(level_vector(empty, Matching{}) == LevelVector{0, 0, 0, 0});

    // prop3 market at n=2: the greedy outcome puts both A-workers on the
    // AB-jobs, the alternative pairs A-workers with A-jobs and B-workers with
    // AB-jobs.
    Market m = gen_prop3(2).market;
    Matching greedy = Matching::from_pairs({{"wA_X_1", "jAB_X_1"}, {"wA_X_2", "jAB_X_2"}});
    CHECK(level_vector(m, greedy) == LevelVector{2, 2, 0, 2});

    Matching alt = Matching::from_pairs({{"wA_X_1", "jA_X_1"},
                                         {"wA_X_2", "jA_X_2"},
                                         {"wB_X_1", "jAB_X_1"},
                                         {"wB_X_2", "jAB_X_2"}});
    CHECK(level_vector(m, alt) == LevelVector{4, 2, 2, 2});

    CHECK_THROWS_AS(level_vector(m, Matching::from_pairs({{"ghost", "jA_X_1"}})), Error);
}

TEST_CASE("hl_dominates is coordinatewise") {
    LevelVector hi{4, 2, 2, 2};
    LevelVector lo{2, 2, 0, 2};
    CHECK(hl_dominates(hi, lo));
    CHECK(hl_dominates(hi, hi));
    CHECK_FALSE(hl_dominates(lo, hi));
    CHECK_FALSE(hl_dominates({3, 2, 0, 2}, {2, 1, 1, 2}));
}

TEST_CASE("avoidance only removes pairs") {
    SplitMix64 rng(11);
    for (int round = 0; round < 200; ++round) {
        Market m = testsupport::random_market(rng);
        for (const auto& w : m.workers())
            for (const auto& j : m.jobs())
                if (is_compatible(m, CompatibilityRegime::EligibilityAndAvoidance, w.id, j.id))
                    CHECK(is_compatible(m, CompatibilityRegime::EligibilityOnly, w.id, j.id));
    }
}

TEST_CASE("feasibility is monotone under pair removal") {
    SplitMix64 rng(12);
    for (int round = 0; round < 100; ++round) {
        Market m = testsupport::random_market(rng);
        auto regime = rng.next_below(2) == 0 ? CompatibilityRegime::EligibilityOnly
                                             : CompatibilityRegime::EligibilityAndAvoidance;
        Matching mu = testsupport::random_feasible_matching(rng, m, regime);
        REQUIRE(is_feasible(m, regime, mu));
        Matching sub = mu;
        for (const auto& [w, j] : mu.pairs()) {
            (void)j;
            if (rng.next_below(2) == 0)
                sub.erase_worker(w);
        }
        CHECK(is_feasible(m, regime, sub));
    }
}

TEST_CASE("hl_dominates is a preorder on random vectors") {
    SplitMix64 rng(13);
    auto rand_vec = [&]() {
        return LevelVector{rng.next_below(6), rng.next_below(6), rng.next_below(6),
                           rng.next_below(6)};
    };
    for (int round = 0; round < 500; ++round) {
        LevelVector a = rand_vec(), b = rand_vec(), c = rand_vec();
        CHECK(hl_dominates(a, a));
        if (hl_dominates(a, b) && hl_dominates(b, c))
            CHECK(hl_dominates(a, c));
    }
}

TEST_CASE("level_vector total equals matching size") {
    SplitMix64 rng(14);
    for (int round = 0; round < 100; ++round) {
        Market m = testsupport::random_market(rng);
        Matching mu =
            testsupport::random_feasible_matching(rng, m, CompatibilityRegime::EligibilityOnly);
        CHECK(level_vector(m, mu).total_matched == matching_size(mu));
    }
}
