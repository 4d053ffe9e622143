#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lots/error.hpp"

namespace lots {

// Workers come in two categories; jobs in three. A-jobs take only A-workers,
// B-jobs only B-workers, AB-jobs take anyone.
enum class WorkerCategory { A, B };
enum class JobCategory { A, AB, B };

// C- enforces eligibility only; C+ additionally bars same-region pairs
// (rule of avoidance).
enum class CompatibilityRegime { EligibilityOnly, EligibilityAndAvoidance };

std::string to_string(WorkerCategory c);
std::string to_string(JobCategory c);
std::string to_token(CompatibilityRegime regime); // "C-" / "C+"
std::optional<CompatibilityRegime> regime_from_token(std::string_view token);

struct Worker {
    std::string id;
    WorkerCategory category = WorkerCategory::A;
    std::string region;
    int exam_rank = 1; // 1 = best; unique within a category
};

struct Job {
    std::string id;
    JobCategory category = JobCategory::A;
    std::string region;
};

// Immutable after construction. The constructor enforces: nonempty unique
// region ids, globally unique worker/job ids, regions resolvable, positive
// exam ranks unique per worker category.
class Market {
public:
    Market() = default;
    Market(std::vector<std::string> regions,
           std::vector<Worker> workers,
           std::vector<Job> jobs);

    const std::vector<std::string>& regions() const { return regions_; }
    const std::vector<Worker>& workers() const { return workers_; }
    const std::vector<Job>& jobs() const { return jobs_; }

    bool has_worker(std::string_view id) const;
    bool has_job(std::string_view id) const;
    bool has_region(std::string_view id) const;

    const Worker& worker(std::string_view id) const; // throws on unknown id
    const Job& job(std::string_view id) const;       // throws on unknown id

    std::vector<std::string> worker_ids() const;
    std::vector<std::string> job_ids() const;
    std::vector<std::string> worker_ids(WorkerCategory c) const;
    std::vector<std::string> job_ids(JobCategory c) const;

private:
    std::vector<std::string> regions_;
    std::vector<Worker> workers_;
    std::vector<Job> jobs_;
    std::map<std::string, std::size_t, std::less<>> worker_index_;
    std::map<std::string, std::size_t, std::less<>> job_index_;
};

// Partial one-to-one map between workers and jobs. Value object: it carries
// no market reference, so one matching can be evaluated under both regimes.
class Matching {
public:
    Matching() = default;

    // Throws Validation if a worker or job id repeats.
    static Matching from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

    void add(const std::string& worker_id, const std::string& job_id);
    void erase_worker(const std::string& worker_id);

    bool has_worker(std::string_view worker_id) const;
    bool has_job(std::string_view job_id) const;
    std::optional<std::string> job_of(std::string_view worker_id) const;
    std::optional<std::string> worker_of(std::string_view job_id) const;

    std::size_t size() const { return worker_to_job_.size(); }
    bool empty() const { return worker_to_job_.empty(); }

    // Sorted by worker id.
    const std::map<std::string, std::string, std::less<>>& pairs() const { return worker_to_job_; }

    bool operator==(const Matching& other) const { return worker_to_job_ == other.worker_to_job_; }

private:
    std::map<std::string, std::string, std::less<>> worker_to_job_;
    std::map<std::string, std::string, std::less<>> job_to_worker_;
};

// The four counts ordered by the high-level dominance relation:
// |mu|, |mu(J) ∩ W^A|, |mu(J^A)|, |mu(J^AB)|.
struct LevelVector {
    std::size_t total_matched = 0;
    std::size_t a_workers_matched = 0;
    std::size_t a_jobs_filled = 0;
    std::size_t ab_jobs_filled = 0;

    bool operator==(const LevelVector&) const = default;
};

std::size_t matching_size(const Matching& mu);

// False under C- iff the pair is cross-eligibility (A-worker/B-job or
// B-worker/A-job); C+ additionally rejects same-region pairs.
bool is_compatible(const Market& market, CompatibilityRegime regime,
                   std::string_view worker_id, std::string_view job_id);

// True iff every pair of mu passes is_compatible.
bool is_feasible(const Market& market, CompatibilityRegime regime, const Matching& mu);

LevelVector level_vector(const Market& market, const Matching& mu);

// v1 weakly dominates v2: >= on all four coordinates.
bool hl_dominates(const LevelVector& v1, const LevelVector& v2);

} // namespace lots
