#include "lots/procedures.hpp"

#include <algorithm>
#include <set>

#include "lots/rng.hpp"

namespace lots {

std::string to_token(ProcedureKind kind) {
    switch (kind) {
    case ProcedureKind::Song: return "song";
    case ProcedureKind::MingOne: return "ming1";
    case ProcedureKind::MingTwo: return "ming2";
    case ProcedureKind::QingOne: return "qing1";
    case ProcedureKind::QingTwo: return "qing2";
    case ProcedureKind::TwoTube: return "twotube";
    }
    return "?";
}

std::optional<ProcedureKind> procedure_from_token(std::string_view token) {
    for (ProcedureKind kind : kAllProcedures)
        if (to_token(kind) == token)
            return kind;
    return std::nullopt;
}

namespace {

std::vector<std::string> sorted_by_rank(const Market& market, WorkerCategory c) {
    std::vector<const Worker*> ws;
    for (const auto& w : market.workers())
        if (w.category == c) ws.push_back(&w);
    std::sort(ws.begin(), ws.end(),
              [](const Worker* a, const Worker* b) { return a->exam_rank < b->exam_rank; });
    std::vector<std::string> ids;
    ids.reserve(ws.size());
    for (const auto* w : ws) ids.push_back(w->id);
    return ids;
}

void check_full_job_orders(const Market& market,
                           const std::map<std::string, std::vector<std::string>>& orders,
                           const char* what) {
    // Reuse plan validation for the per-worker permutation checks.
    AssignmentPlan probe;
    probe.worker_order = market.worker_ids();
    probe.job_orders = orders;
    if (auto err = validate_plan(market, probe))
        throw usage_error(std::string(what) + ": " + *err);
}

} // namespace

std::vector<std::string> exam_rank_worker_order(const Market& market) {
    std::vector<std::string> order = sorted_by_rank(market, WorkerCategory::A);
    std::vector<std::string> b = sorted_by_rank(market, WorkerCategory::B);
    order.insert(order.end(), b.begin(), b.end());
    return order;
}

void validate_qing_partition(const Market& market, const QingPartition& partition) {
    auto wa = market.worker_ids(WorkerCategory::A);
    auto wb = market.worker_ids(WorkerCategory::B);
    std::size_t ja = market.job_ids(JobCategory::A).size();
    std::size_t jab = market.job_ids(JobCategory::AB).size();
    std::size_t jb = market.job_ids(JobCategory::B).size();

    if (partition.wa1.size() != ja)
        throw validation_error("partition: |wa1| = " + std::to_string(partition.wa1.size()) +
                               " but |J^A| = " + std::to_string(ja));
    if (partition.wb1.size() != jb)
        throw validation_error("partition: |wb1| = " + std::to_string(partition.wb1.size()) +
                               " but |J^B| = " + std::to_string(jb));
    if (partition.wa2.size() + partition.wb2.size() != jab)
        throw validation_error("partition: |wa2| + |wb2| = " +
                               std::to_string(partition.wa2.size() + partition.wb2.size()) +
                               " but |J^AB| = " + std::to_string(jab));

    auto check_cover = [&](const std::vector<std::string>& first,
                           const std::vector<std::string>& second,
                           const std::vector<std::string>& universe, WorkerCategory c) {
        std::set<std::string> seen;
        for (const auto& lists : {&first, &second})
            for (const auto& id : *lists) {
                if (market.worker(id).category != c)
                    throw validation_error("partition: worker '" + id + "' is not category " +
                                           to_string(c));
                if (!seen.insert(id).second)
                    throw validation_error("partition: worker '" + id + "' listed twice");
            }
        if (seen.size() != universe.size())
            throw validation_error("partition does not cover category " + to_string(c));
    };
    check_cover(partition.wa1, partition.wa2, wa, WorkerCategory::A);
    check_cover(partition.wb1, partition.wb2, wb, WorkerCategory::B);
}

QingPartition default_qing_partition(const Market& market) {
    auto wa = sorted_by_rank(market, WorkerCategory::A);
    auto wb = sorted_by_rank(market, WorkerCategory::B);
    std::size_t ja = market.job_ids(JobCategory::A).size();
    std::size_t jab = market.job_ids(JobCategory::AB).size();
    std::size_t jb = market.job_ids(JobCategory::B).size();

    if (wa.size() < ja)
        throw validation_error("cannot build partition: |W^A| = " + std::to_string(wa.size()) +
                               " < |J^A| = " + std::to_string(ja));
    if (wb.size() < jb)
        throw validation_error("cannot build partition: |W^B| = " + std::to_string(wb.size()) +
                               " < |J^B| = " + std::to_string(jb));
    if (wa.size() + wb.size() != ja + jab + jb)
        throw validation_error("cannot build partition: |W| = " +
                               std::to_string(wa.size() + wb.size()) +
                               " but |J| = " + std::to_string(ja + jab + jb));

    QingPartition p;
    p.wa1.assign(wa.begin(), wa.begin() + static_cast<std::ptrdiff_t>(ja));
    p.wa2.assign(wa.begin() + static_cast<std::ptrdiff_t>(ja), wa.end());
    p.wb1.assign(wb.begin(), wb.begin() + static_cast<std::ptrdiff_t>(jb));
    p.wb2.assign(wb.begin() + static_cast<std::ptrdiff_t>(jb), wb.end());
    return p;
}

std::pair<std::vector<std::string>, std::vector<std::string>>
split_priority(const Market& market, const std::vector<std::string>& workers,
               const std::vector<std::string>& job_tube) {
    std::set<std::string, std::less<>> job_regions;
    for (const auto& jid : job_tube)
        job_regions.insert(market.job(jid).region);

    std::vector<std::string> priority, rest;
    for (const auto& wid : workers) {
        if (job_regions.contains(market.worker(wid).region))
            priority.push_back(wid);
        else
            rest.push_back(wid);
    }
    return {priority, rest};
}

AssignmentPlan sample_plan(const Market& market, std::uint64_t seed) {
    AssignmentPlan plan;
    plan.worker_order = sample_uniform_worker_order(market.worker_ids(),
                                                    derive_seed(seed, "worker-order"));
    plan.job_orders = sample_uniform_job_orders(market.worker_ids(), market.job_ids(), seed);
    return plan;
}

namespace {

AssignmentArrangement song_arrangement(const Market& market) {
    TubeSequence seq;
    seq.worker_tubes = {market.worker_ids(WorkerCategory::A), market.worker_ids(WorkerCategory::B)};
    seq.job_tubes = {market.job_ids()};
    return AssignmentArrangement{{seq}};
}

AssignmentArrangement ming_one_arrangement(const Market& market) {
    TubeSequence seq;
    seq.worker_tubes = {market.worker_ids(WorkerCategory::A), market.worker_ids(WorkerCategory::B)};
    seq.job_tubes = {market.job_ids(JobCategory::A), market.job_ids(JobCategory::AB),
                     market.job_ids(JobCategory::B)};
    return AssignmentArrangement{{seq}};
}

AssignmentArrangement qing_arrangement(const Market& market, const QingPartition& partition,
                                       bool split_by_avoidance) {
    validate_qing_partition(market, partition);

    std::vector<std::string> wab = partition.wa2;
    wab.insert(wab.end(), partition.wb2.begin(), partition.wb2.end());

    auto make_seq = [&](const std::vector<std::string>& workers,
                        std::vector<std::string> jobs) {
        TubeSequence seq;
        if (split_by_avoidance) {
            auto [priority, rest] = split_priority(market, workers, jobs);
            seq.worker_tubes = {priority, rest};
        } else {
            seq.worker_tubes = {workers};
        }
        seq.job_tubes = {std::move(jobs)};
        return seq;
    };

    AssignmentArrangement arr;
    arr.sequences.push_back(make_seq(partition.wa1, market.job_ids(JobCategory::A)));
    arr.sequences.push_back(make_seq(wab, market.job_ids(JobCategory::AB)));
    arr.sequences.push_back(make_seq(partition.wb1, market.job_ids(JobCategory::B)));
    return arr;
}

AssignmentArrangement two_tube_arrangement(const Market& market) {
    bool has_a = false, has_b = false;
    for (const auto& w : market.workers())
        (w.category == WorkerCategory::A ? has_a : has_b) = true;
    if (has_a && has_b)
        throw usage_error("two-tube draw needs a single category of workers; "
                          "run it per category");
    for (const auto& j : market.jobs()) {
        bool ok = j.category == JobCategory::AB ||
                  (has_b ? j.category == JobCategory::B : j.category == JobCategory::A);
        if ((has_a || has_b) && !ok)
            throw usage_error("two-tube draw needs jobs eligible to every worker; job '" +
                              j.id + "' is not");
    }

    std::map<std::string, std::size_t> worker_count, job_count;
    for (const auto& w : market.workers()) ++worker_count[w.region];
    for (const auto& j : market.jobs()) ++job_count[j.region];

    // Most workers among regions having both workers and jobs; ties go to the
    // lexicographically smallest region id. No such region: both lead tubes
    // stay empty and everything is drawn in one pass.
    std::string lead;
    std::size_t best = 0;
    for (const auto& [region, wc] : worker_count) {
        if (wc == 0 || job_count[region] == 0) continue;
        if (wc > best || (wc == best && (lead.empty() || region < lead))) {
            best = wc;
            lead = region;
        }
    }

    std::vector<std::string> w1, wrest, j1, jrest;
    for (const auto& w : market.workers())
        (w.region == lead ? w1 : wrest).push_back(w.id);
    for (const auto& j : market.jobs())
        (j.region == lead ? j1 : jrest).push_back(j.id);

    TubeSequence seq;
    seq.worker_tubes = {w1, wrest};
    seq.job_tubes = {jrest, j1};
    return AssignmentArrangement{{seq}};
}

AssignmentPlan exam_rank_plan(const Market& market,
                              std::map<std::string, std::vector<std::string>> job_orders) {
    AssignmentPlan plan;
    plan.worker_order = exam_rank_worker_order(market);
    plan.job_orders = std::move(job_orders);
    return plan;
}

} // namespace

Procedure build_song(const Market& market,
                     const std::map<std::string, std::vector<std::string>>& song_preferences) {
    check_full_job_orders(market, song_preferences, "song preferences");
    return {song_arrangement(market), exam_rank_plan(market, song_preferences)};
}

Procedure build_ming_one(const Market& market,
                         const std::map<std::string, std::vector<std::string>>& ministry_orders) {
    check_full_job_orders(market, ministry_orders, "ministry orders");
    return {ming_one_arrangement(market), exam_rank_plan(market, ministry_orders)};
}

Procedure build_ming_two(const Market& market, std::uint64_t seed) {
    return {song_arrangement(market),
            exam_rank_plan(market, sample_uniform_job_orders(market.worker_ids(),
                                                             market.job_ids(), seed))};
}

Procedure build_qing_one(const Market& market, const QingPartition& partition,
                         std::uint64_t seed) {
    return {qing_arrangement(market, partition, /*split_by_avoidance=*/false),
            sample_plan(market, seed)};
}

Procedure build_qing_two(const Market& market, const QingPartition& partition,
                         std::uint64_t seed) {
    return {qing_arrangement(market, partition, /*split_by_avoidance=*/true),
            sample_plan(market, seed)};
}

Procedure build_two_tube(const Market& market, std::uint64_t seed) {
    return {two_tube_arrangement(market), sample_plan(market, seed)};
}

AssignmentArrangement arrangement_for(ProcedureKind kind, const Market& market,
                                      const QingPartition* partition) {
    switch (kind) {
    case ProcedureKind::Song:
    case ProcedureKind::MingTwo:
        return song_arrangement(market);
    case ProcedureKind::MingOne:
        return ming_one_arrangement(market);
    case ProcedureKind::QingOne:
    case ProcedureKind::QingTwo: {
        if (!partition)
            throw usage_error("qing arrangements need a partition");
        bool split = kind == ProcedureKind::QingTwo;
        return qing_arrangement(market, *partition, split);
    }
    case ProcedureKind::TwoTube:
        return two_tube_arrangement(market);
    }
    throw usage_error("unknown procedure");
}

} // namespace lots
