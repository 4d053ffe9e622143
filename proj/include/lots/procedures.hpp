#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lots/arrangement.hpp"
#include "lots/market.hpp"

namespace lots {

enum class ProcedureKind { Song, MingOne, MingTwo, QingOne, QingTwo, TwoTube };

inline constexpr ProcedureKind kAllProcedures[] = {
    ProcedureKind::Song,    ProcedureKind::MingOne, ProcedureKind::MingTwo,
    ProcedureKind::QingOne, ProcedureKind::QingTwo, ProcedureKind::TwoTube,
};

std::string to_token(ProcedureKind kind); // song, ming1, ming2, qing1, qing2, twotube
std::optional<ProcedureKind> procedure_from_token(std::string_view token);

// Splits the workers across the three Qing tube sequences. Tube sizes equal
// job counts: |wa1| = |J^A|, |wb1| = |J^B|, |wa2| + |wb2| = |J^AB|.
struct QingPartition {
    std::vector<std::string> wa1;
    std::vector<std::string> wa2;
    std::vector<std::string> wb1;
    std::vector<std::string> wb2;
};

// Throws Validation naming the first failing size equality or coverage fault.
void validate_qing_partition(const Market& market, const QingPartition& partition);

// Exam-grade split: best-ranked A-workers fill the A sequence, best-ranked
// B-workers the B sequence, the remainders go to the AB sequence. Requires the
// exact-fill configuration |W^A| >= |J^A|, |W^B| >= |J^B|, |W| = |J|.
QingPartition default_qing_partition(const Market& market);

// Priority split for a Second-Qing worker tube: workers whose own region
// appears among the tube's jobs draw first. Callers guarantee category
// eligibility of every worker for every job in the tube.
std::pair<std::vector<std::string>, std::vector<std::string>>
split_priority(const Market& market, const std::vector<std::string>& workers,
               const std::vector<std::string>& job_tube);

// A-workers by exam rank, then B-workers by exam rank.
std::vector<std::string> exam_rank_worker_order(const Market& market);

struct Procedure {
    AssignmentArrangement arrangement;
    AssignmentPlan plan;
};

// One sequence (W^A, W^B | J); workers by exam rank; job orders are the
// candidates' stated preferences (full permutations, one per worker).
Procedure build_song(const Market& market,
                     const std::map<std::string, std::vector<std::string>>& song_preferences);

// One sequence (W^A, W^B | J^A, J^AB, J^B); workers by exam rank; the
// ministry's job orders are immaterial to sizes and level counts under C-.
Procedure build_ming_one(const Market& market,
                         const std::map<std::string, std::vector<std::string>>& ministry_orders);

// Song arrangement; job orders drawn uniformly per worker from the seed.
Procedure build_ming_two(const Market& market, std::uint64_t seed);

// Three independent sequences (wa1|J^A), (wa2+wb2|J^AB), (wb1|J^B); worker
// order and job orders all drawn from the seed.
Procedure build_qing_one(const Market& market, const QingPartition& partition, std::uint64_t seed);

// Same sequences as Qing One with each worker tube split into
// (priority, non-priority); identical seed derivation, so a shared seed gives
// the identical plan as Qing One.
Procedure build_qing_two(const Market& market, const QingPartition& partition, std::uint64_t seed);

// Single-category two-tube draw: workers of the most-worker region holding
// both workers and jobs draw first from the other regions' jobs; that
// region's own jobs wait in the second tube. Workers from jobless regions
// join the second worker tube, jobs from workerless regions the first job
// tube. Throws Usage on mixed-category markets.
Procedure build_two_tube(const Market& market, std::uint64_t seed);

// Arrangement of `kind` for fixed-plan comparisons (the same plan fed through
// different arrangements). Qing kinds require a partition.
AssignmentArrangement arrangement_for(ProcedureKind kind, const Market& market,
                                      const QingPartition* partition = nullptr);

// Shared plan derivation for the lottery procedures (Ming Two and both Qing):
// worker order from (seed, "worker-order"), job orders from (seed, worker id).
AssignmentPlan sample_plan(const Market& market, std::uint64_t seed);

} // namespace lots
