#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lots/arrangement.hpp"
#include "lots/market.hpp"
#include "lots/procedures.hpp"

namespace lots {

struct ExpectedOutcome {
    std::size_t size = 0;
    LevelVector level;
};

// A counterexample market with the fixed plan used in its construction.
// `expected` holds the exact engine outcome per arrangement when replayed
// with that plan; these are fixtures, not estimates.
struct GeneratedCase {
    std::string name;
    std::size_t scale = 1;
    Market market;
    CompatibilityRegime regime = CompatibilityRegime::EligibilityOnly;
    AssignmentPlan plan;
    QingPartition partition;
    std::map<ProcedureKind, ExpectedOutcome> expected;
    std::size_t maximum_size = 0;
    std::map<ProcedureKind, bool> expected_maximal;
    // Asserted only when the market fits the oracle enumeration bound.
    std::map<ProcedureKind, bool> expected_hl_optimal;
};

// Two workers, two jobs; the greedy draw strands w_b while size 2 is feasible.
GeneratedCase gen_example1();

// n A-workers, n B-workers, n A-jobs, n AB-jobs; plan sends A-workers to the
// AB-jobs first. Sequential category draw halves the matching under C-.
GeneratedCase gen_prop1(std::size_t n);

// 2n A-workers (n region X, n region Y) and 2n A-jobs (n region Z, n-1
// region X, 1 region Y) under C+: every procedure strands n-1 workers.
GeneratedCase gen_prop2(std::size_t n);

// Same construction as prop1; here the failure tracked is high-level
// prioritization rather than cardinality.
GeneratedCase gen_prop3(std::size_t n);

// 2n A-workers (X and Y), n AB-jobs all in X, n A-jobs all in Z under C+:
// preference-style draws match everyone, partitioned draws strand half.
GeneratedCase gen_thm1(std::size_t n);

// n workers each in X and Y, n jobs each in X and Z under C+: the priority
// split doubles the matching.
GeneratedCase gen_thm2(std::size_t n);

// Dispatch by case name: example1, prop1, prop2, prop3, prop4 (the prop2
// market re-checked for high-level optimality), thm1, thm2.
// Throws Usage on unknown names or n < 1.
GeneratedCase generate_case(std::string_view name, std::size_t n);

// Case names usable with generate_case, in presentation order.
const std::vector<std::string>& generated_case_names();

struct TwoTubeSweepStats {
    std::size_t markets = 0;
    std::size_t maximality_failures = 0; // some plan misses the oracle maximum
    std::size_t fill_failures = 0;       // |J1| <= |W-1| yet a job stays open
    std::string first_maximality_failure;
    std::string first_fill_failure;
};

// Exhaustive check of the two-tube guarantee: every single-category
// regionally-sufficient market with at most max_workers workers and max_jobs
// jobs over regions X, Y, Z (enumerated by per-region counts), and every
// assignment plan per market via the decision-branch sweep. With
// only_worker_backed_jobs, markets holding jobs in worker-less regions are
// excluded; the guarantee provably holds there, while the full catalog
// contains counterexamples (jobs of a worker-less region sit in the first
// job tube and can starve a region-locked job).
TwoTubeSweepStats two_tube_catalog_sweep(std::size_t max_workers, std::size_t max_jobs,
                                         bool only_worker_backed_jobs = false);

} // namespace lots
