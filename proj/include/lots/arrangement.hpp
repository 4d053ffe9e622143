#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lots/market.hpp"

namespace lots {

// A strict total order over all workers plus one strict total order over all
// jobs per worker. Plans always rank the full job set; tube restriction
// happens inside the engine, so a single plan can drive every procedure.
struct AssignmentPlan {
    std::vector<std::string> worker_order;
    std::map<std::string, std::vector<std::string>> job_orders;
};

// Ordered worker tubes and ordered job tubes of one independent sub-market.
struct TubeSequence {
    std::vector<std::vector<std::string>> worker_tubes;
    std::vector<std::vector<std::string>> job_tubes;
};

// Ordered list of tube sequences; together the tubes partition the market.
struct AssignmentArrangement {
    std::vector<TubeSequence> sequences;
};

// nullopt when the arrangement partitions the market; otherwise a report
// naming the first violated condition and the offending id.
std::optional<std::string> validate_arrangement(const Market& market,
                                                const AssignmentArrangement& arrangement);

// nullopt when worker_order is a permutation of the market's workers and
// every worker's job order is a permutation of the market's jobs.
std::optional<std::string> validate_plan(const Market& market, const AssignmentPlan& plan);

} // namespace lots
