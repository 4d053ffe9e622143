#include "lots/market.hpp"

#include <algorithm>
#include <set>

namespace lots {

std::string to_string(WorkerCategory c) {
    return c == WorkerCategory::A ? "A" : "B";
}

std::string to_string(JobCategory c) {
    switch (c) {
    case JobCategory::A: return "A";
    case JobCategory::AB: return "AB";
    case JobCategory::B: return "B";
    }
    return "?";
}

std::string to_token(CompatibilityRegime regime) {
    return regime == CompatibilityRegime::EligibilityOnly ? "C-" : "C+";
}

std::optional<CompatibilityRegime> regime_from_token(std::string_view token) {
    if (token == "C-") return CompatibilityRegime::EligibilityOnly;
    if (token == "C+") return CompatibilityRegime::EligibilityAndAvoidance;
    return std::nullopt;
}

Market::Market(std::vector<std::string> regions,
               std::vector<Worker> workers,
               std::vector<Job> jobs)
    : regions_(std::move(regions)), workers_(std::move(workers)), jobs_(std::move(jobs)) {
    std::set<std::string, std::less<>> region_set;
    for (const auto& r : regions_) {
        if (r.empty())
            throw validation_error("region id must be nonempty");
        if (!region_set.insert(r).second)
            throw validation_error("duplicate region id '" + r + "'");
    }

    std::set<std::string, std::less<>> all_ids;
    for (std::size_t i = 0; i < workers_.size(); ++i) {
        const Worker& w = workers_[i];
        if (w.id.empty())
            throw validation_error("worker id must be nonempty");
        if (!all_ids.insert(w.id).second)
            throw validation_error("duplicate id '" + w.id + "'");
        if (!region_set.contains(w.region))
            throw validation_error("worker '" + w.id + "' references unknown region '" + w.region + "'");
        if (w.exam_rank < 1)
            throw validation_error("worker '" + w.id + "' has non-positive exam_rank");
        worker_index_.emplace(w.id, i);
    }
    for (std::size_t i = 0; i < jobs_.size(); ++i) {
        const Job& j = jobs_[i];
        if (j.id.empty())
            throw validation_error("job id must be nonempty");
        if (!all_ids.insert(j.id).second)
            throw validation_error("duplicate id '" + j.id + "'");
        if (!region_set.contains(j.region))
            throw validation_error("job '" + j.id + "' references unknown region '" + j.region + "'");
        job_index_.emplace(j.id, i);
    }

    // exam_rank unique within each worker category
    std::set<std::pair<int, int>> seen_ranks;
    for (const auto& w : workers_) {
        auto key = std::make_pair(static_cast<int>(w.category), w.exam_rank);
        if (!seen_ranks.insert(key).second)
            throw validation_error("duplicate exam_rank " + std::to_string(w.exam_rank) +
                                   " within category " + to_string(w.category));
    }
}

bool Market::has_worker(std::string_view id) const { return worker_index_.find(id) != worker_index_.end(); }
bool Market::has_job(std::string_view id) const { return job_index_.find(id) != job_index_.end(); }
bool Market::has_region(std::string_view id) const {
    return std::find(regions_.begin(), regions_.end(), id) != regions_.end();
}

const Worker& Market::worker(std::string_view id) const {
    auto it = worker_index_.find(id);
    if (it == worker_index_.end())
        throw validation_error("unknown worker id '" + std::string(id) + "'");
    return workers_[it->second];
}

const Job& Market::job(std::string_view id) const {
    auto it = job_index_.find(id);
    if (it == job_index_.end())
        throw validation_error("unknown job id '" + std::string(id) + "'");
    return jobs_[it->second];
}

std::vector<std::string> Market::worker_ids() const {
    std::vector<std::string> out;
    out.reserve(workers_.size());
    for (const auto& w : workers_) out.push_back(w.id);
    return out;
}

std::vector<std::string> Market::job_ids() const {
    std::vector<std::string> out;
    out.reserve(jobs_.size());
    for (const auto& j : jobs_) out.push_back(j.id);
    return out;
}

std::vector<std::string> Market::worker_ids(WorkerCategory c) const {
    std::vector<std::string> out;
    for (const auto& w : workers_)
        if (w.category == c) out.push_back(w.id);
    return out;
}

std::vector<std::string> Market::job_ids(JobCategory c) const {
    std::vector<std::string> out;
    for (const auto& j : jobs_)
        if (j.category == c) out.push_back(j.id);
    return out;
}

Matching Matching::from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
    Matching mu;
    for (const auto& [w, j] : pairs)
        mu.add(w, j);
    return mu;
}

void Matching::add(const std::string& worker_id, const std::string& job_id) {
    if (worker_to_job_.contains(worker_id))
        throw validation_error("worker '" + worker_id + "' matched twice");
    if (job_to_worker_.contains(job_id))
        throw validation_error("job '" + job_id + "' matched twice");
    worker_to_job_.emplace(worker_id, job_id);
    job_to_worker_.emplace(job_id, worker_id);
}

void Matching::erase_worker(const std::string& worker_id) {
    auto it = worker_to_job_.find(worker_id);
    if (it == worker_to_job_.end()) return;
    job_to_worker_.erase(it->second);
    worker_to_job_.erase(it);
}

bool Matching::has_worker(std::string_view worker_id) const {
    return worker_to_job_.find(worker_id) != worker_to_job_.end();
}

bool Matching::has_job(std::string_view job_id) const {
    return job_to_worker_.find(job_id) != job_to_worker_.end();
}

std::optional<std::string> Matching::job_of(std::string_view worker_id) const {
    auto it = worker_to_job_.find(worker_id);
    if (it == worker_to_job_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> Matching::worker_of(std::string_view job_id) const {
    auto it = job_to_worker_.find(job_id);
    if (it == job_to_worker_.end()) return std::nullopt;
    return it->second;
}

std::size_t matching_size(const Matching& mu) { return mu.size(); }

bool is_compatible(const Market& market, CompatibilityRegime regime,
                   std::string_view worker_id, std::string_view job_id) {
    const Worker& w = market.worker(worker_id);
    const Job& j = market.job(job_id);
    if (w.category == WorkerCategory::A && j.category == JobCategory::B) return false;
    if (w.category == WorkerCategory::B && j.category == JobCategory::A) return false;
    if (regime == CompatibilityRegime::EligibilityAndAvoidance && w.region == j.region)
        return false;
    return true;
}

bool is_feasible(const Market& market, CompatibilityRegime regime, const Matching& mu) {
    for (const auto& [w, j] : mu.pairs())
        if (!is_compatible(market, regime, w, j))
            return false;
    return true;
}

LevelVector level_vector(const Market& market, const Matching& mu) {
    LevelVector v;
    v.total_matched = mu.size();
    for (const auto& [wid, jid] : mu.pairs()) {
        const Worker& w = market.worker(wid);
        const Job& j = market.job(jid);
        if (w.category == WorkerCategory::A) ++v.a_workers_matched;
        if (j.category == JobCategory::A) ++v.a_jobs_filled;
        if (j.category == JobCategory::AB) ++v.ab_jobs_filled;
    }
    return v;
}

bool hl_dominates(const LevelVector& v1, const LevelVector& v2) {
    return v1.total_matched >= v2.total_matched &&
           v1.a_workers_matched >= v2.a_workers_matched &&
           v1.a_jobs_filled >= v2.a_jobs_filled &&
           v1.ab_jobs_filled >= v2.ab_jobs_filled;
}

} // namespace lots
