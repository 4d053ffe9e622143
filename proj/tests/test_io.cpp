#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "lots/generators.hpp"
#include "lots/io.hpp"

using namespace lots;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("lots_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("market files round trip") {
    TempDir dir;
    GeneratedCase c = gen_thm1(2);
    fs::path p = dir.path / "market.json";
    save_market(c.market, p);
    Market loaded = load_market(p);
    CHECK(loaded.regions() == c.market.regions());
    CHECK(loaded.worker_ids() == c.market.worker_ids());
    CHECK(loaded.job_ids() == c.market.job_ids());
    CHECK(loaded.worker("wA_Y_1").exam_rank == 1);
    CHECK(loaded.job("jAB_X_1").category == JobCategory::AB);
}

TEST_CASE("market files reject unknown and missing fields") {
    TempDir dir;
    fs::path p = dir.path / "bad.json";

    write(p, R"({"regions":["X"],"workers":[],"jobs":[],"extra":1})");
    CHECK_THROWS_AS(load_market(p), Error);

    write(p, R"({"regions":["X"],"workers":[]})");
    CHECK_THROWS_AS(load_market(p), Error);

    write(p, R"({"regions":["X"],
                 "workers":[{"id":"w","category":"A","region":"X","exam_rank":1,"age":30}],
                 "jobs":[]})");
    CHECK_THROWS_AS(load_market(p), Error);

    write(p, R"({"regions":["X"],
                 "workers":[{"id":"w","category":"C","region":"X","exam_rank":1}],
                 "jobs":[]})");
    CHECK_THROWS_AS(load_market(p), Error);

    write(p, "{not json");
    try {
        load_market(p);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }

    try {
        load_market(dir.path / "absent.json");
        FAIL("expected an io error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Io);
    }

    // well-formed but semantically invalid: duplicated id
    write(p, R"({"regions":["X"],
                 "workers":[{"id":"w","category":"A","region":"X","exam_rank":1},
                            {"id":"w","category":"B","region":"X","exam_rank":1}],
                 "jobs":[]})");
    try {
        load_market(p);
        FAIL("expected a validation error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
    }
}

TEST_CASE("plan, partition and preference files round trip") {
    TempDir dir;
    GeneratedCase c = gen_thm2(2);

    fs::path plan_path = dir.path / "plan.json";
    save_plan(c.plan, plan_path);
    AssignmentPlan plan = load_plan(plan_path);
    CHECK(plan.worker_order == c.plan.worker_order);
    CHECK(plan.job_orders == c.plan.job_orders);

    fs::path part_path = dir.path / "partition.json";
    save_partition(c.partition, part_path);
    QingPartition part = load_partition(part_path);
    CHECK(part.wa1 == c.partition.wa1);
    CHECK(part.wa2 == c.partition.wa2);
    CHECK(part.wb1 == c.partition.wb1);
    CHECK(part.wb2 == c.partition.wb2);

    fs::path pref_path = dir.path / "prefs.json";
    save_preferences(c.plan.job_orders, pref_path);
    CHECK(load_preferences(pref_path) == c.plan.job_orders);
}

TEST_CASE("report fragments are stable") {
    Matching mu = Matching::from_pairs({{"w2", "j1"}, {"w1", "j2"}});
    CHECK(matching_to_json(mu).dump() == R"([["w1","j2"],["w2","j1"]])");

    LevelVector v{3, 2, 1, 0};
    CHECK(level_vector_to_json(v).dump() ==
          R"({"total_matched":3,"a_workers_matched":2,"a_jobs_filled":1,"ab_jobs_filled":0})");
}
