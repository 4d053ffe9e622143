#include "lots/arrangement.hpp"

#include <set>

namespace lots {

namespace {

std::optional<std::string> check_partition(const std::vector<std::string>& universe,
                                           const std::vector<const std::vector<std::string>*>& tubes,
                                           const char* side) {
    std::set<std::string> seen;
    std::set<std::string, std::less<>> valid(universe.begin(), universe.end());
    for (const auto* tube : tubes) {
        for (const auto& id : *tube) {
            if (!valid.contains(id))
                return std::string("unknown ") + side + " id '" + id + "' in arrangement";
            if (!seen.insert(id).second)
                return std::string("disjointness violation: ") + side + " '" + id +
                       "' appears in more than one tube";
        }
    }
    for (const auto& id : universe)
        if (!seen.contains(id))
            return std::string("coverage violation: ") + side + " '" + id +
                   "' missing from every tube";
    return std::nullopt;
}

} // namespace

std::optional<std::string> validate_arrangement(const Market& market,
                                                const AssignmentArrangement& arrangement) {
    std::vector<const std::vector<std::string>*> worker_tubes;
    std::vector<const std::vector<std::string>*> job_tubes;
    for (const auto& seq : arrangement.sequences) {
        for (const auto& tube : seq.worker_tubes) worker_tubes.push_back(&tube);
        for (const auto& tube : seq.job_tubes) job_tubes.push_back(&tube);
    }
    if (auto err = check_partition(market.worker_ids(), worker_tubes, "worker"))
        return err;
    if (auto err = check_partition(market.job_ids(), job_tubes, "job"))
        return err;
    return std::nullopt;
}

std::optional<std::string> validate_plan(const Market& market, const AssignmentPlan& plan) {
    auto check_perm = [](const std::vector<std::string>& order,
                         const std::vector<std::string>& universe,
                         const std::string& what) -> std::optional<std::string> {
        std::set<std::string> seen;
        std::set<std::string, std::less<>> valid(universe.begin(), universe.end());
        for (const auto& id : order) {
            if (!valid.contains(id))
                return what + " contains unknown id '" + id + "'";
            if (!seen.insert(id).second)
                return what + " repeats id '" + id + "'";
        }
        if (seen.size() != valid.size())
            return what + " does not cover the market";
        return std::nullopt;
    };

    if (auto err = check_perm(plan.worker_order, market.worker_ids(), "worker_order"))
        return err;
    auto jobs = market.job_ids();
    for (const auto& w : market.workers()) {
        auto it = plan.job_orders.find(w.id);
        if (it == plan.job_orders.end())
            return "worker '" + w.id + "' has no job order";
        if (auto err = check_perm(it->second, jobs, "job order of '" + w.id + "'"))
            return err;
    }
    return std::nullopt;
}

} // namespace lots
