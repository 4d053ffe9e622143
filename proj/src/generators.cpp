#include "lots/generators.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "lots/oracle.hpp"

namespace lots {

namespace {

std::string seq_id(const std::string& stem, std::size_t i) {
    return stem + "_" + std::to_string(i);
}

void give_everyone_job_order(GeneratedCase& c, const std::vector<std::string>& order) {
    for (const auto& w : c.market.workers())
        c.plan.job_orders[w.id] = order;
}

void require_scale(std::size_t n) {
    if (n < 1)
        throw usage_error("scale n must be at least 1");
}

// The prop1 and prop3 constructions share one market and plan; only the
// property under scrutiny differs.
GeneratedCase prop1_like(const std::string& name, std::size_t n) {
    require_scale(n);
    GeneratedCase c;
    c.name = name;
    c.scale = n;
    c.regime = CompatibilityRegime::EligibilityOnly;

    std::vector<Worker> workers;
    std::vector<Job> jobs;
    for (std::size_t i = 1; i <= n; ++i) {
        workers.push_back({seq_id("wA_X", i), WorkerCategory::A, "X", static_cast<int>(i)});
        workers.push_back({seq_id("wB_X", i), WorkerCategory::B, "X", static_cast<int>(i)});
        jobs.push_back({seq_id("jA_X", i), JobCategory::A, "X"});
        jobs.push_back({seq_id("jAB_X", i), JobCategory::AB, "X"});
    }
    c.market = Market({"X"}, workers, jobs);

    c.plan.worker_order = exam_rank_worker_order(c.market);
    std::vector<std::string> job_order = c.market.job_ids(JobCategory::AB);
    auto a_jobs = c.market.job_ids(JobCategory::A);
    job_order.insert(job_order.end(), a_jobs.begin(), a_jobs.end());
    give_everyone_job_order(c, job_order);

    c.partition = default_qing_partition(c.market);
    c.maximum_size = 2 * n;

    ExpectedOutcome greedy{n, {n, n, 0, n}};
    ExpectedOutcome full{2 * n, {2 * n, n, n, n}};
    c.expected = {{ProcedureKind::Song, greedy},
                  {ProcedureKind::MingTwo, greedy},
                  {ProcedureKind::MingOne, full},
                  {ProcedureKind::QingOne, full},
                  {ProcedureKind::QingTwo, full}};
    for (auto kind : {ProcedureKind::Song, ProcedureKind::MingTwo}) {
        c.expected_maximal[kind] = false;
        c.expected_hl_optimal[kind] = false;
    }
    for (auto kind : {ProcedureKind::MingOne, ProcedureKind::QingOne, ProcedureKind::QingTwo}) {
        c.expected_maximal[kind] = true;
        c.expected_hl_optimal[kind] = true;
    }
    return c;
}

} // namespace

GeneratedCase gen_example1() {
    GeneratedCase c;
    c.name = "example1";
    c.scale = 1;
    c.regime = CompatibilityRegime::EligibilityOnly;
    c.market = Market({"X"},
                      {{"w_a", WorkerCategory::A, "X", 1}, {"w_b", WorkerCategory::B, "X", 1}},
                      {{"j_a", JobCategory::A, "X"}, {"j_ab", JobCategory::AB, "X"}});
    c.plan.worker_order = {"w_a", "w_b"};
    give_everyone_job_order(c, {"j_ab", "j_a"});
    c.partition = default_qing_partition(c.market);
    c.maximum_size = 2;

    ExpectedOutcome greedy{1, {1, 1, 0, 1}};
    ExpectedOutcome full{2, {2, 1, 1, 1}};
    c.expected = {{ProcedureKind::Song, greedy},
                  {ProcedureKind::MingTwo, greedy},
                  {ProcedureKind::MingOne, full},
                  {ProcedureKind::QingOne, full},
                  {ProcedureKind::QingTwo, full}};
    for (auto kind : {ProcedureKind::Song, ProcedureKind::MingTwo}) {
        c.expected_maximal[kind] = false;
        c.expected_hl_optimal[kind] = false;
    }
    for (auto kind : {ProcedureKind::MingOne, ProcedureKind::QingOne, ProcedureKind::QingTwo}) {
        c.expected_maximal[kind] = true;
        c.expected_hl_optimal[kind] = true;
    }
    return c;
}

GeneratedCase gen_prop1(std::size_t n) { return prop1_like("prop1", n); }
GeneratedCase gen_prop3(std::size_t n) { return prop1_like("prop3", n); }

GeneratedCase gen_prop2(std::size_t n) {
    require_scale(n);
    GeneratedCase c;
    c.name = "prop2";
    c.scale = n;
    c.regime = CompatibilityRegime::EligibilityAndAvoidance;

    std::vector<Worker> workers;
    std::vector<Job> jobs;
    for (std::size_t i = 1; i <= n; ++i)
        workers.push_back({seq_id("wA_Y", i), WorkerCategory::A, "Y", static_cast<int>(i)});
    for (std::size_t i = 1; i <= n; ++i)
        workers.push_back({seq_id("wA_X", i), WorkerCategory::A, "X", static_cast<int>(n + i)});
    for (std::size_t i = 1; i <= n; ++i)
        jobs.push_back({seq_id("jA_Z", i), JobCategory::A, "Z"});
    for (std::size_t i = 1; i + 1 <= n; ++i)
        jobs.push_back({seq_id("jA_X", i), JobCategory::A, "X"});
    jobs.push_back({seq_id("jA_Y", 1), JobCategory::A, "Y"});
    c.market = Market({"X", "Y", "Z"}, workers, jobs);

    c.plan.worker_order = exam_rank_worker_order(c.market); // Y-workers first by rank
    std::vector<std::string> job_order;
    for (const auto& j : jobs) if (j.region == "Z") job_order.push_back(j.id);
    for (const auto& j : jobs) if (j.region == "X") job_order.push_back(j.id);
    for (const auto& j : jobs) if (j.region == "Y") job_order.push_back(j.id);
    give_everyone_job_order(c, job_order);

    c.partition = default_qing_partition(c.market);
    c.maximum_size = 2 * n;

    // Every sequential-history procedure strands the same n-1 workers; the
    // two-tube draw behaves differently on this market and is out of scope
    // for the fixture.
    ExpectedOutcome out{n + 1, {n + 1, n + 1, n + 1, 0}};
    for (auto kind : {ProcedureKind::Song, ProcedureKind::MingOne, ProcedureKind::MingTwo,
                      ProcedureKind::QingOne, ProcedureKind::QingTwo}) {
        c.expected[kind] = out;
        c.expected_maximal[kind] = n == 1;
        c.expected_hl_optimal[kind] = n == 1;
    }
    return c;
}

GeneratedCase gen_thm1(std::size_t n) {
    require_scale(n);
    GeneratedCase c;
    c.name = "thm1";
    c.scale = n;
    c.regime = CompatibilityRegime::EligibilityAndAvoidance;

    std::vector<Worker> workers;
    std::vector<Job> jobs;
    for (std::size_t i = 1; i <= n; ++i)
        workers.push_back({seq_id("wA_Y", i), WorkerCategory::A, "Y", static_cast<int>(i)});
    for (std::size_t i = 1; i <= n; ++i)
        workers.push_back({seq_id("wA_X", i), WorkerCategory::A, "X", static_cast<int>(n + i)});
    for (std::size_t i = 1; i <= n; ++i)
        jobs.push_back({seq_id("jAB_X", i), JobCategory::AB, "X"});
    for (std::size_t i = 1; i <= n; ++i)
        jobs.push_back({seq_id("jA_Z", i), JobCategory::A, "Z"});
    c.market = Market({"X", "Y", "Z"}, workers, jobs);

    c.plan.worker_order = exam_rank_worker_order(c.market);
    std::vector<std::string> job_order = c.market.job_ids(JobCategory::AB);
    auto a_jobs = c.market.job_ids(JobCategory::A);
    job_order.insert(job_order.end(), a_jobs.begin(), a_jobs.end());
    give_everyone_job_order(c, job_order);

    // Exam grades put the Y-workers into the A-job sequence.
    c.partition = default_qing_partition(c.market);
    c.maximum_size = 2 * n;

    ExpectedOutcome preference{2 * n, {2 * n, 2 * n, n, n}};
    ExpectedOutcome partitioned{n, {n, n, n, 0}};
    c.expected = {{ProcedureKind::Song, preference},
                  {ProcedureKind::MingTwo, preference},
                  {ProcedureKind::MingOne, partitioned},
                  {ProcedureKind::QingOne, partitioned},
                  {ProcedureKind::QingTwo, partitioned}};
    for (auto kind : {ProcedureKind::Song, ProcedureKind::MingTwo}) {
        c.expected_maximal[kind] = true;
        c.expected_hl_optimal[kind] = true;
    }
    for (auto kind : {ProcedureKind::MingOne, ProcedureKind::QingOne, ProcedureKind::QingTwo}) {
        c.expected_maximal[kind] = false;
        c.expected_hl_optimal[kind] = false;
    }
    return c;
}

GeneratedCase gen_thm2(std::size_t n) {
    require_scale(n);
    GeneratedCase c;
    c.name = "thm2";
    c.scale = n;
    c.regime = CompatibilityRegime::EligibilityAndAvoidance;

    std::vector<Worker> workers;
    std::vector<Job> jobs;
    for (std::size_t i = 1; i <= n; ++i)
        workers.push_back({seq_id("wA_Y", i), WorkerCategory::A, "Y", static_cast<int>(i)});
    for (std::size_t i = 1; i <= n; ++i)
        workers.push_back({seq_id("wA_X", i), WorkerCategory::A, "X", static_cast<int>(n + i)});
    for (std::size_t i = 1; i <= n; ++i)
        jobs.push_back({seq_id("jA_Z", i), JobCategory::A, "Z"});
    for (std::size_t i = 1; i <= n; ++i)
        jobs.push_back({seq_id("jA_X", i), JobCategory::A, "X"});
    c.market = Market({"X", "Y", "Z"}, workers, jobs);

    c.plan.worker_order = exam_rank_worker_order(c.market);
    std::vector<std::string> job_order;
    for (const auto& j : jobs) if (j.region == "Z") job_order.push_back(j.id);
    for (const auto& j : jobs) if (j.region == "X") job_order.push_back(j.id);
    give_everyone_job_order(c, job_order);

    c.partition = default_qing_partition(c.market);
    c.maximum_size = 2 * n;

    ExpectedOutcome starved{n, {n, n, n, 0}};
    ExpectedOutcome full{2 * n, {2 * n, 2 * n, 2 * n, 0}};
    c.expected = {{ProcedureKind::Song, starved},
                  {ProcedureKind::MingOne, starved},
                  {ProcedureKind::MingTwo, starved},
                  {ProcedureKind::QingOne, starved},
                  {ProcedureKind::QingTwo, full},
                  {ProcedureKind::TwoTube, full}};
    for (auto kind : {ProcedureKind::Song, ProcedureKind::MingOne, ProcedureKind::MingTwo,
                      ProcedureKind::QingOne}) {
        c.expected_maximal[kind] = false;
        c.expected_hl_optimal[kind] = false;
    }
    for (auto kind : {ProcedureKind::QingTwo, ProcedureKind::TwoTube}) {
        c.expected_maximal[kind] = true;
        c.expected_hl_optimal[kind] = true;
    }
    return c;
}

GeneratedCase generate_case(std::string_view name, std::size_t n) {
    if (name == "example1") return gen_example1();
    if (name == "prop1") return gen_prop1(n);
    if (name == "prop2") return gen_prop2(n);
    if (name == "prop3") return gen_prop3(n);
    if (name == "prop4") {
        GeneratedCase c = gen_prop2(n);
        c.name = "prop4";
        return c;
    }
    if (name == "thm1") return gen_thm1(n);
    if (name == "thm2") return gen_thm2(n);
    throw usage_error("unknown case '" + std::string(name) + "'");
}

const std::vector<std::string>& generated_case_names() {
    static const std::vector<std::string> names = {"example1", "prop1", "prop2", "prop3",
                                                   "prop4",    "thm1",  "thm2"};
    return names;
}

namespace {

Market catalog_market(const std::array<std::size_t, 3>& workers,
                      const std::array<std::size_t, 3>& jobs) {
    const char* names[3] = {"X", "Y", "Z"};
    std::vector<Worker> ws;
    std::vector<Job> js;
    int rank = 1;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t i = 1; i <= workers[r]; ++i)
            ws.push_back({std::string("w") + names[r] + std::to_string(i), WorkerCategory::A,
                          names[r], rank++});
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t i = 1; i <= jobs[r]; ++i)
            js.push_back({std::string("j") + names[r] + std::to_string(i), JobCategory::A,
                          names[r]});
    return Market({"X", "Y", "Z"}, ws, js);
}

std::string profile_of(const std::array<std::size_t, 3>& workers,
                       const std::array<std::size_t, 3>& jobs) {
    std::ostringstream os;
    os << "workers X:" << workers[0] << ",Y:" << workers[1] << ",Z:" << workers[2]
       << " jobs X:" << jobs[0] << ",Y:" << jobs[1] << ",Z:" << jobs[2];
    return os.str();
}

} // namespace

TwoTubeSweepStats two_tube_catalog_sweep(std::size_t max_workers, std::size_t max_jobs,
                                         bool only_worker_backed_jobs) {
    TwoTubeSweepStats result;
    const auto regime = CompatibilityRegime::EligibilityAndAvoidance;
    for (std::size_t wx = 0; wx <= max_workers; ++wx)
    for (std::size_t wy = 0; wy + wx <= max_workers; ++wy)
    for (std::size_t wz = 0; wz + wy + wx <= max_workers; ++wz)
    for (std::size_t jx = 0; jx <= max_jobs; ++jx)
    for (std::size_t jy = 0; jy + jx <= max_jobs; ++jy)
    for (std::size_t jz = 0; jz + jy + jx <= max_jobs; ++jz) {
        std::array<std::size_t, 3> workers{wx, wy, wz};
        std::array<std::size_t, 3> jobs{jx, jy, jz};
        bool sufficient = true;
        bool worker_backed = true;
        for (std::size_t r = 0; r < 3; ++r) {
            if (workers[r] > 0 && jobs[r] > 0 && workers[r] < jobs[r]) sufficient = false;
            if (jobs[r] > 0 && workers[r] < jobs[r]) worker_backed = false;
        }
        if (!sufficient) continue;
        if (only_worker_backed_jobs && !worker_backed) continue;

        Market market = catalog_market(workers, jobs);
        ++result.markets;

        const std::size_t maximum = maximum_matching(market, regime).size();
        AssignmentArrangement arr = arrangement_for(ProcedureKind::TwoTube, market);
        const bool want_all_jobs = arr.sequences[0].job_tubes[1].size() <=
                                   arr.sequences[0].worker_tubes[1].size();
        const std::size_t job_count = market.jobs().size();

        std::size_t min_size = maximum;
        bool all_jobs_ok = true;
        for_each_plan_outcome(market, regime, arr, [&](const Matching& mu) {
            min_size = std::min(min_size, mu.size());
            if (want_all_jobs && mu.size() != job_count) all_jobs_ok = false;
            return true;
        });

        if (min_size < maximum) {
            ++result.maximality_failures;
            if (result.first_maximality_failure.empty())
                result.first_maximality_failure =
                    profile_of(workers, jobs) + ": two-tube size " +
                    std::to_string(min_size) + " < maximum " + std::to_string(maximum);
        }
        if (!all_jobs_ok) {
            ++result.fill_failures;
            if (result.first_fill_failure.empty())
                result.first_fill_failure = profile_of(workers, jobs) +
                                            ": a job stays open although |J1| <= |W-1|";
        }
    }
    return result;
}

} // namespace lots
