#include "lots/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace lots {

std::optional<AugmentingPath> find_augmenting_path(const Market& market,
                                                   CompatibilityRegime regime,
                                                   const Matching& mu) {
    if (!is_feasible(market, regime, mu))
        throw validation_error("matching is not feasible under the given regime");

    const auto workers = market.worker_ids();
    const auto jobs = market.job_ids();

    for (const auto& root : workers) {
        if (mu.has_worker(root))
            continue;

        // Alternating BFS: workers reached via non-matching edges, jobs left
        // via their matching edge. parent[job] = worker we came from.
        std::map<std::string, std::string, std::less<>> parent_job;
        std::set<std::string, std::less<>> visited_workers{root};
        std::deque<std::string> frontier{root};

        while (!frontier.empty()) {
            std::string w = frontier.front();
            frontier.pop_front();
            for (const auto& j : jobs) {
                if (parent_job.contains(j) || !is_compatible(market, regime, w, j))
                    continue;
                if (mu.job_of(w) && *mu.job_of(w) == j)
                    continue; // matching edges are traversed job -> worker only
                parent_job.emplace(j, w);
                auto partner = mu.worker_of(j);
                if (!partner) {
                    // Free job: unwind to the root.
                    AugmentingPath path;
                    std::string job = j;
                    for (;;) {
                        path.vertices.push_back(job);
                        const std::string& from = parent_job.at(job);
                        path.vertices.push_back(from);
                        if (from == root) break;
                        job = *mu.job_of(from);
                    }
                    std::reverse(path.vertices.begin(), path.vertices.end());
                    return path;
                }
                if (visited_workers.insert(*partner).second)
                    frontier.push_back(*partner);
            }
        }
    }
    return std::nullopt;
}

Matching augment_along(const Matching& mu, const AugmentingPath& path) {
    const auto& v = path.vertices;
    if (v.empty() || v.size() % 2 != 0)
        throw validation_error("augmenting path must alternate worker, job, ... with odd edge count");
    Matching out = mu;
    // Drop the matched edges (job at position 2k+1 is matched to the worker at
    // 2k+2), then add the outer edges.
    for (std::size_t i = 1; i + 1 < v.size(); i += 2)
        out.erase_worker(v[i + 1]);
    out.erase_worker(v[0]);
    for (std::size_t i = 0; i < v.size(); i += 2)
        out.add(v[i], v[i + 1]);
    return out;
}

Matching maximum_matching(const Market& market, CompatibilityRegime regime) {
    Matching mu;
    while (auto path = find_augmenting_path(market, regime, mu))
        mu = augment_along(mu, *path);
    return mu;
}

bool is_maximum(const Market& market, CompatibilityRegime regime, const Matching& mu) {
    return !find_augmenting_path(market, regime, mu).has_value();
}

namespace {

struct EnumerationContext {
    const Market* market = nullptr;
    std::vector<std::string> workers;
    std::vector<std::string> jobs;
    std::vector<std::vector<std::size_t>> compatible; // worker index -> job indices
    std::vector<bool> job_used;
    std::vector<int> assignment; // worker index -> job index or -1
};

EnumerationContext make_context(const Market& market, CompatibilityRegime regime,
                                std::size_t bound) {
    if (market.workers().size() + market.jobs().size() > bound)
        throw usage_error("market exceeds the enumeration bound of " + std::to_string(bound) +
                          " total workers + jobs");
    EnumerationContext ctx;
    ctx.market = &market;
    ctx.workers = market.worker_ids();
    ctx.jobs = market.job_ids();
    ctx.compatible.resize(ctx.workers.size());
    for (std::size_t wi = 0; wi < ctx.workers.size(); ++wi)
        for (std::size_t ji = 0; ji < ctx.jobs.size(); ++ji)
            if (is_compatible(market, regime, ctx.workers[wi], ctx.jobs[ji]))
                ctx.compatible[wi].push_back(ji);
    ctx.job_used.assign(ctx.jobs.size(), false);
    ctx.assignment.assign(ctx.workers.size(), -1);
    return ctx;
}

// Recurse worker by worker; each is either unmatched or takes one unused
// compatible job. Visits each feasible matching exactly once.
bool enumerate(EnumerationContext& ctx, std::size_t wi,
               const std::function<bool(const EnumerationContext&)>& visit) {
    if (wi == ctx.workers.size())
        return visit(ctx);
    if (!enumerate(ctx, wi + 1, visit))
        return false;
    for (std::size_t ji : ctx.compatible[wi]) {
        if (ctx.job_used[ji]) continue;
        ctx.job_used[ji] = true;
        ctx.assignment[wi] = static_cast<int>(ji);
        bool keep_going = enumerate(ctx, wi + 1, visit);
        ctx.assignment[wi] = -1;
        ctx.job_used[ji] = false;
        if (!keep_going)
            return false;
    }
    return true;
}

Matching materialize(const EnumerationContext& ctx) {
    Matching mu;
    for (std::size_t wi = 0; wi < ctx.workers.size(); ++wi)
        if (ctx.assignment[wi] >= 0)
            mu.add(ctx.workers[wi], ctx.jobs[static_cast<std::size_t>(ctx.assignment[wi])]);
    return mu;
}

LevelVector vector_of(const EnumerationContext& ctx) {
    LevelVector v;
    for (std::size_t wi = 0; wi < ctx.workers.size(); ++wi) {
        if (ctx.assignment[wi] < 0) continue;
        ++v.total_matched;
        if (ctx.market->worker(ctx.workers[wi]).category == WorkerCategory::A)
            ++v.a_workers_matched;
        JobCategory jc = ctx.market->job(ctx.jobs[static_cast<std::size_t>(ctx.assignment[wi])]).category;
        if (jc == JobCategory::A) ++v.a_jobs_filled;
        if (jc == JobCategory::AB) ++v.ab_jobs_filled;
    }
    return v;
}

} // namespace

void for_each_feasible_matching(const Market& market, CompatibilityRegime regime,
                                std::size_t bound,
                                const std::function<bool(const Matching&)>& visit) {
    EnumerationContext ctx = make_context(market, regime, bound);
    enumerate(ctx, 0, [&](const EnumerationContext& c) { return visit(materialize(c)); });
}

std::vector<Matching> enumerate_feasible_matchings(const Market& market,
                                                   CompatibilityRegime regime,
                                                   std::size_t bound) {
    std::vector<Matching> out;
    for_each_feasible_matching(market, regime, bound, [&](const Matching& mu) {
        out.push_back(mu);
        return true;
    });
    return out;
}

std::vector<LevelVector> achievable_level_vectors(const Market& market,
                                                  CompatibilityRegime regime,
                                                  std::size_t bound) {
    EnumerationContext ctx = make_context(market, regime, bound);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> seen;
    std::vector<LevelVector> out;
    enumerate(ctx, 0, [&](const EnumerationContext& c) {
        LevelVector v = vector_of(c);
        if (seen.emplace(v.total_matched, v.a_workers_matched, v.a_jobs_filled, v.ab_jobs_filled)
                .second)
            out.push_back(v);
        return true;
    });
    return out;
}

bool is_hl_optimal_vector(const LevelVector& v, const std::vector<LevelVector>& achievable) {
    for (const auto& other : achievable)
        if (hl_dominates(other, v) && !(other == v))
            return false;
    return true;
}

bool is_hl_optimal(const Market& market, CompatibilityRegime regime, const Matching& mu,
                   std::size_t bound) {
    return is_hl_optimal_vector(level_vector(market, mu),
                                achievable_level_vectors(market, regime, bound));
}

bool is_regionally_sufficient(const Market& market) {
    std::map<std::string, std::size_t> worker_count, job_count;
    for (const auto& w : market.workers()) ++worker_count[w.region];
    for (const auto& j : market.jobs()) ++job_count[j.region];
    for (const auto& [region, jc] : job_count) {
        auto it = worker_count.find(region);
        std::size_t wc = it == worker_count.end() ? 0 : it->second;
        if (wc > 0 && jc > 0 && wc < jc)
            return false;
    }
    return true;
}

namespace {

struct PlanSweep {
    const Market* market = nullptr;
    CompatibilityRegime regime = CompatibilityRegime::EligibilityOnly;
    const AssignmentArrangement* arrangement = nullptr;
    const std::function<bool(const Matching&)>* visit = nullptr;
    Matching current;
    std::set<std::string, std::less<>> pool;

    bool run_sequence(std::size_t seq_index) {
        if (seq_index == arrangement->sequences.size())
            return (*visit)(current);
        const TubeSequence& seq = arrangement->sequences[seq_index];
        pool.clear();
        for (const auto& tube : seq.job_tubes)
            pool.insert(tube.begin(), tube.end());
        std::vector<std::vector<std::string>> tubes = seq.worker_tubes;
        return step(seq_index, seq, tubes, 0);
    }

    bool step(std::size_t seq_index, const TubeSequence& seq,
              std::vector<std::vector<std::string>>& tubes, std::size_t tube_index) {
        while (tube_index < tubes.size() && tubes[tube_index].empty())
            ++tube_index;
        if (tube_index == tubes.size()) {
            // Sequence done; the consumed pool does not leak into the next one.
            std::set<std::string, std::less<>> saved = pool;
            bool keep_going = run_sequence(seq_index + 1);
            pool = saved;
            return keep_going;
        }

        // Branch over which tube member draws next.
        std::vector<std::string> members = tubes[tube_index];
        for (std::size_t pick = 0; pick < members.size(); ++pick) {
            const std::string wid = members[pick];
            tubes[tube_index].erase(tubes[tube_index].begin() +
                                    static_cast<std::ptrdiff_t>(pick));

            const std::vector<std::string>* chosen_tube = nullptr;
            for (const auto& jt : seq.job_tubes) {
                for (const auto& jid : jt)
                    if (pool.contains(jid) && is_compatible(*market, regime, wid, jid)) {
                        chosen_tube = &jt;
                        break;
                    }
                if (chosen_tube) break;
            }

            bool keep_going = true;
            if (!chosen_tube) {
                keep_going = step(seq_index, seq, tubes, tube_index);
            } else {
                // Branch over every compatible job of the selected tube.
                for (const auto& jid : *chosen_tube) {
                    if (!pool.contains(jid) || !is_compatible(*market, regime, wid, jid))
                        continue;
                    pool.erase(jid);
                    current.add(wid, jid);
                    keep_going = step(seq_index, seq, tubes, tube_index);
                    current.erase_worker(wid);
                    pool.insert(jid);
                    if (!keep_going) break;
                }
            }

            tubes[tube_index].insert(tubes[tube_index].begin() +
                                         static_cast<std::ptrdiff_t>(pick),
                                     wid);
            if (!keep_going)
                return false;
        }
        return true;
    }
};

} // namespace

bool for_each_plan_outcome(const Market& market, CompatibilityRegime regime,
                           const AssignmentArrangement& arrangement,
                           const std::function<bool(const Matching&)>& visit) {
    if (auto err = validate_arrangement(market, arrangement))
        throw validation_error("invalid arrangement: " + *err);
    PlanSweep sweep;
    sweep.market = &market;
    sweep.regime = regime;
    sweep.arrangement = &arrangement;
    sweep.visit = &visit;
    return sweep.run_sequence(0);
}

} // namespace lots
