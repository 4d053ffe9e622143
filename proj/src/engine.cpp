#include "lots/engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace lots {

namespace {

using RankMap = std::map<std::string, std::size_t, std::less<>>;

RankMap rank_of(const std::vector<std::string>& order) {
    RankMap ranks;
    for (std::size_t i = 0; i < order.size(); ++i)
        ranks.emplace(order[i], i);
    return ranks;
}

} // namespace

Matching execute_traced(const Market& market, CompatibilityRegime regime,
                        const AssignmentArrangement& arrangement, const AssignmentPlan& plan,
                        std::vector<TraceEvent>& trace) {
    if (auto err = validate_arrangement(market, arrangement))
        throw validation_error("invalid arrangement: " + *err);
    if (auto err = validate_plan(market, plan))
        throw validation_error("invalid plan: " + *err);

    const RankMap worker_rank = rank_of(plan.worker_order);
    Matching mu;

    for (std::size_t s = 0; s < arrangement.sequences.size(); ++s) {
        const TubeSequence& seq = arrangement.sequences[s];

        // Live pool: union of this sequence's job tubes.
        std::set<std::string, std::less<>> pool;
        for (const auto& tube : seq.job_tubes)
            pool.insert(tube.begin(), tube.end());

        for (std::size_t t = 0; t < seq.worker_tubes.size(); ++t) {
            std::vector<std::string> waiting = seq.worker_tubes[t];
            std::sort(waiting.begin(), waiting.end(),
                      [&](const std::string& a, const std::string& b) {
                          return worker_rank.at(a) < worker_rank.at(b);
                      });

            for (const auto& wid : waiting) {
                // Lowest-indexed job tube with a remaining compatible job.
                const std::vector<std::string>* chosen_tube = nullptr;
                std::size_t chosen_index = 0;
                for (std::size_t a = 0; a < seq.job_tubes.size() && !chosen_tube; ++a) {
                    for (const auto& jid : seq.job_tubes[a]) {
                        if (pool.contains(jid) && is_compatible(market, regime, wid, jid)) {
                            chosen_tube = &seq.job_tubes[a];
                            chosen_index = a;
                            break;
                        }
                    }
                }

                TraceEvent ev;
                ev.sequence = s;
                ev.worker_tube = t;
                ev.worker = wid;

                if (!chosen_tube) {
                    trace.push_back(ev);
                    continue;
                }

                const RankMap job_rank = rank_of(plan.job_orders.at(wid));
                std::string best;
                std::size_t best_rank = std::numeric_limits<std::size_t>::max();
                for (const auto& jid : *chosen_tube) {
                    if (!pool.contains(jid) || !is_compatible(market, regime, wid, jid))
                        continue;
                    std::size_t r = job_rank.at(jid);
                    if (r < best_rank) {
                        best_rank = r;
                        best = jid;
                    }
                }

                mu.add(wid, best);
                pool.erase(best);
                ev.matched = true;
                ev.job = best;
                ev.job_tube = chosen_index;
                trace.push_back(ev);
            }
        }
    }
    return mu;
}

Matching execute(const Market& market, CompatibilityRegime regime,
                 const AssignmentArrangement& arrangement, const AssignmentPlan& plan) {
    std::vector<TraceEvent> trace;
    return execute_traced(market, regime, arrangement, plan, trace);
}

} // namespace lots
