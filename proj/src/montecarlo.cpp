#include "lots/montecarlo.hpp"

#include "lots/engine.hpp"
#include "lots/rng.hpp"

namespace lots {

namespace {

Procedure build_for_trial(const Market& market, ProcedureKind kind,
                          const MonteCarloOptions& options, std::uint64_t seed) {
    switch (kind) {
    case ProcedureKind::Song:
        if (!options.song_preferences)
            throw usage_error("song needs explicit preferences");
        return build_song(market, *options.song_preferences);
    case ProcedureKind::MingOne:
        // The ministry's criterion is unmodeled; draw it per trial so the C+
        // variation is visible. Under C- the statistics are order-invariant.
        return build_ming_one(market, sample_uniform_job_orders(market.worker_ids(),
                                                                market.job_ids(), seed));
    case ProcedureKind::MingTwo:
        return build_ming_two(market, seed);
    case ProcedureKind::QingOne:
    case ProcedureKind::QingTwo: {
        if (!options.partition)
            throw usage_error(to_token(kind) + " needs a partition");
        return kind == ProcedureKind::QingOne
                   ? build_qing_one(market, *options.partition, seed)
                   : build_qing_two(market, *options.partition, seed);
    }
    case ProcedureKind::TwoTube:
        return build_two_tube(market, seed);
    }
    throw usage_error("unknown procedure");
}

} // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial) {
    return derive_seed(master_seed, "trial/" + std::to_string(trial));
}

std::vector<TrialStats> compare_procedures(const Market& market,
                                           const std::vector<ProcedureKind>& kinds,
                                           CompatibilityRegime regime,
                                           const MonteCarloOptions& options,
                                           PairedTrials* paired) {
    if (options.trials < 1)
        throw usage_error("trials must be at least 1");
    if (kinds.empty())
        throw usage_error("no procedures to run");

    const std::size_t maximum = maximum_matching(market, regime).size();
    const bool within_bound =
        market.workers().size() + market.jobs().size() <= options.oracle_bound;
    std::vector<LevelVector> achievable;
    if (within_bound)
        achievable = achievable_level_vectors(market, regime, options.oracle_bound);

    std::vector<TrialStats> stats(kinds.size());
    for (std::size_t p = 0; p < kinds.size(); ++p) {
        stats[p].procedure = kinds[p];
        stats[p].trials = options.trials;
        stats[p].seed = options.master_seed;
        if (within_bound)
            stats[p].frac_hl_optimal = 0.0;
    }
    if (paired) {
        paired->procedures = kinds;
        paired->trial_seeds.clear();
        paired->sizes.clear();
    }

    std::vector<std::size_t> max_hits(kinds.size(), 0);
    std::vector<std::size_t> hl_hits(kinds.size(), 0);
    std::vector<std::size_t> size_sums(kinds.size(), 0);

    for (std::size_t t = 0; t < options.trials; ++t) {
        const std::uint64_t seed = trial_seed(options.master_seed, t);
        std::vector<std::size_t> row;
        for (std::size_t p = 0; p < kinds.size(); ++p) {
            Procedure proc = build_for_trial(market, kinds[p], options, seed);
            Matching mu = execute(market, regime, proc.arrangement, proc.plan);
            std::size_t size = mu.size();
            size_sums[p] += size;
            ++stats[p].size_histogram[size];
            if (size == maximum) ++max_hits[p];
            if (within_bound &&
                is_hl_optimal_vector(level_vector(market, mu), achievable))
                ++hl_hits[p];
            row.push_back(size);
        }
        if (paired) {
            paired->trial_seeds.push_back(seed);
            paired->sizes.push_back(std::move(row));
        }
    }

    for (std::size_t p = 0; p < kinds.size(); ++p) {
        double trials = static_cast<double>(options.trials);
        stats[p].mean_size = static_cast<double>(size_sums[p]) / trials;
        stats[p].frac_maximum = static_cast<double>(max_hits[p]) / trials;
        if (within_bound)
            stats[p].frac_hl_optimal = static_cast<double>(hl_hits[p]) / trials;
    }
    return stats;
}

TrialStats run_monte_carlo(const Market& market, ProcedureKind kind,
                           CompatibilityRegime regime, const MonteCarloOptions& options) {
    return compare_procedures(market, {kind}, regime, options).front();
}

} // namespace lots
