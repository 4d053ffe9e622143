#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lots/arrangement.hpp"
#include "lots/market.hpp"

namespace lots {

// One draw step: a worker was taken from his tube and either matched to a job
// from some job tube or left unmatched.
struct TraceEvent {
    std::size_t sequence = 0;
    std::size_t worker_tube = 0;
    std::string worker;
    bool matched = false;
    std::string job;            // empty when unmatched
    std::size_t job_tube = 0;   // meaningful only when matched
};

// Runs the sequential tube-draw over every sequence of the arrangement.
//
// Per sequence: the live job pool starts as the union of that sequence's job
// tubes. Worker tubes are consumed in order; within a tube workers go in
// worker_order. Each worker draws from the lowest-indexed job tube that still
// holds a compatible job for him, taking the top remaining compatible job of
// that tube under his own job order; with no compatible job anywhere in the
// pool he stays unmatched. The result is feasible under `regime` by
// construction.
//
// Throws Validation if the arrangement does not partition the market or the
// plan does not cover it.
Matching execute(const Market& market, CompatibilityRegime regime,
                 const AssignmentArrangement& arrangement, const AssignmentPlan& plan);

// Same, recording one event per processed worker.
Matching execute_traced(const Market& market, CompatibilityRegime regime,
                        const AssignmentArrangement& arrangement, const AssignmentPlan& plan,
                        std::vector<TraceEvent>& trace);

} // namespace lots
