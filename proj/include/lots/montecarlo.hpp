#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lots/market.hpp"
#include "lots/oracle.hpp"
#include "lots/procedures.hpp"

namespace lots {

// Empirical lens on a procedure's lottery: outcome sizes, how often the draw
// hits the oracle maximum, and (on small markets) how often it is
// high-level-optimal.
struct TrialStats {
    ProcedureKind procedure = ProcedureKind::Song;
    std::size_t trials = 0;
    double mean_size = 0.0;
    std::map<std::size_t, std::size_t> size_histogram;
    double frac_maximum = 0.0;
    std::optional<double> frac_hl_optimal; // absent when over the oracle bound
    std::uint64_t seed = 0;
};

struct MonteCarloOptions {
    std::size_t trials = 1;
    std::uint64_t master_seed = 0;
    std::optional<QingPartition> partition;                                // qing1/qing2
    std::optional<std::map<std::string, std::vector<std::string>>> song_preferences; // song
    std::size_t oracle_bound = kDefaultEnumerationBound;
};

// Per-trial sizes aligned across procedures: sizes[t][p] used trial_seeds[t].
struct PairedTrials {
    std::vector<ProcedureKind> procedures;
    std::vector<std::uint64_t> trial_seeds;
    std::vector<std::vector<std::size_t>> sizes;
};

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial);

// Deterministic for fixed inputs; trial t draws its plan from
// trial_seed(master_seed, t), so procedures sharing a master seed share plans.
TrialStats run_monte_carlo(const Market& market, ProcedureKind kind,
                           CompatibilityRegime regime, const MonteCarloOptions& options);

// All procedures on the same per-trial seeds, enabling paired comparison.
std::vector<TrialStats> compare_procedures(const Market& market,
                                           const std::vector<ProcedureKind>& kinds,
                                           CompatibilityRegime regime,
                                           const MonteCarloOptions& options,
                                           PairedTrials* paired = nullptr);

} // namespace lots
