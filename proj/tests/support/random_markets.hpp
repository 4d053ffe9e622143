#pragma once

#include <string>
#include <vector>

#include "lots/market.hpp"
#include "lots/procedures.hpp"
#include "lots/rng.hpp"

namespace lots::testsupport {

struct RandomMarketOptions {
    std::size_t max_workers = 5;
    std::size_t max_jobs = 5;
    std::size_t max_regions = 3;
    // Force |W^A| >= |J^A|, |W^B| >= |J^B| and |W| = |J| so a Qing partition
    // exists.
    bool exact_fill = false;
};

inline Market random_market(SplitMix64& rng, const RandomMarketOptions& opt = {}) {
    std::size_t n_regions = 1 + rng.next_below(opt.max_regions);
    std::vector<std::string> regions;
    for (std::size_t r = 0; r < n_regions; ++r)
        regions.push_back("R" + std::to_string(r + 1));

    std::size_t n_a = 0, n_b = 0, j_a = 0, j_ab = 0, j_b = 0;
    if (opt.exact_fill) {
        do {
            n_a = rng.next_below(opt.max_workers + 1);
            n_b = rng.next_below(opt.max_workers + 1 - n_a);
        } while (n_a + n_b == 0);
        j_a = rng.next_below(n_a + 1);
        j_b = rng.next_below(n_b + 1);
        j_ab = n_a + n_b - j_a - j_b;
    } else {
        n_a = rng.next_below(opt.max_workers + 1);
        n_b = rng.next_below(opt.max_workers + 1 - n_a);
        std::size_t n_jobs = rng.next_below(opt.max_jobs + 1);
        for (std::size_t i = 0; i < n_jobs; ++i) {
            switch (rng.next_below(3)) {
            case 0: ++j_a; break;
            case 1: ++j_ab; break;
            default: ++j_b; break;
            }
        }
    }

    auto region_of = [&]() { return regions[rng.next_below(regions.size())]; };
    std::vector<Worker> workers;
    for (std::size_t i = 1; i <= n_a; ++i)
        workers.push_back({"wA" + std::to_string(i), WorkerCategory::A, region_of(),
                           static_cast<int>(i)});
    for (std::size_t i = 1; i <= n_b; ++i)
        workers.push_back({"wB" + std::to_string(i), WorkerCategory::B, region_of(),
                           static_cast<int>(i)});
    std::vector<Job> jobs;
    for (std::size_t i = 1; i <= j_a; ++i)
        jobs.push_back({"jA" + std::to_string(i), JobCategory::A, region_of()});
    for (std::size_t i = 1; i <= j_ab; ++i)
        jobs.push_back({"jAB" + std::to_string(i), JobCategory::AB, region_of()});
    for (std::size_t i = 1; i <= j_b; ++i)
        jobs.push_back({"jB" + std::to_string(i), JobCategory::B, region_of()});

    return Market(std::move(regions), std::move(workers), std::move(jobs));
}

inline QingPartition random_partition(SplitMix64& rng, const Market& m) {
    auto pick = [&](std::vector<std::string> ids, std::size_t first_count,
                    std::vector<std::string>& one, std::vector<std::string>& two) {
        ids = sample_permutation(std::move(ids), rng.next());
        one.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(first_count));
        two.assign(ids.begin() + static_cast<std::ptrdiff_t>(first_count), ids.end());
    };
    QingPartition p;
    pick(m.worker_ids(WorkerCategory::A), m.job_ids(JobCategory::A).size(), p.wa1, p.wa2);
    pick(m.worker_ids(WorkerCategory::B), m.job_ids(JobCategory::B).size(), p.wb1, p.wb2);
    return p;
}

inline AssignmentPlan random_plan(SplitMix64& rng, const Market& m) {
    return sample_plan(m, rng.next());
}

// Random feasible matching, not necessarily maximal: visit compatible pairs
// in shuffled order and keep each with probability 1/2.
inline Matching random_feasible_matching(SplitMix64& rng, const Market& m,
                                         CompatibilityRegime regime) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& w : m.workers())
        for (const auto& j : m.jobs())
            if (is_compatible(m, regime, w.id, j.id))
                pairs.emplace_back(w.id, j.id);
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng.next_below(i)]);
    Matching mu;
    for (const auto& [w, j] : pairs)
        if (!mu.has_worker(w) && !mu.has_job(j) && rng.next_below(2) == 0)
            mu.add(w, j);
    return mu;
}

} // namespace lots::testsupport
