#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lots/arrangement.hpp"
#include "lots/market.hpp"

namespace lots {

// Alternating worker-job path with an odd number of edges and both endpoints
// unmatched: vertices = worker, job, worker, ..., job.
struct AugmentingPath {
    std::vector<std::string> vertices;
};

// Breadth-first search from each unmatched worker over the compatibility
// graph. Returns a path iff one exists (Berge certificate). Throws Validation
// when mu is infeasible.
std::optional<AugmentingPath> find_augmenting_path(const Market& market,
                                                   CompatibilityRegime regime,
                                                   const Matching& mu);

// Flips the path's edges: |result| = |mu| + 1, feasibility preserved.
Matching augment_along(const Matching& mu, const AugmentingPath& path);

// Feasible matching of maximum cardinality (repeated augmentation).
Matching maximum_matching(const Market& market, CompatibilityRegime regime);

// True iff no augmenting path exists; agrees with brute-force maximality.
bool is_maximum(const Market& market, CompatibilityRegime regime, const Matching& mu);

// Combinatorial guard for exhaustive enumeration: |W| + |J| must not exceed
// the bound.
inline constexpr std::size_t kDefaultEnumerationBound = 16;

// Visits every feasible matching exactly once (the empty one included).
// Return false from the visitor to stop early. Throws Usage over the bound.
void for_each_feasible_matching(const Market& market, CompatibilityRegime regime,
                                std::size_t bound,
                                const std::function<bool(const Matching&)>& visit);

std::vector<Matching> enumerate_feasible_matchings(const Market& market,
                                                   CompatibilityRegime regime,
                                                   std::size_t bound = kDefaultEnumerationBound);

// Distinct level vectors achievable by feasible matchings (brute force).
std::vector<LevelVector> achievable_level_vectors(const Market& market,
                                                  CompatibilityRegime regime,
                                                  std::size_t bound = kDefaultEnumerationBound);

// True iff no feasible matching weakly dominates mu's level vector while
// differing in it.
bool is_hl_optimal(const Market& market, CompatibilityRegime regime, const Matching& mu,
                   std::size_t bound = kDefaultEnumerationBound);
bool is_hl_optimal_vector(const LevelVector& v, const std::vector<LevelVector>& achievable);

// Every region holding both workers and jobs has at least as many workers.
bool is_regionally_sufficient(const Market& market);

// Visits the outcome of every assignment plan on this arrangement, without
// enumerating plans: branches over each canonical decision (which remaining
// worker of the active tube draws next x which compatible job of the selected
// tube he takes). Every plan realizes one branch and every branch is realized
// by some plan. Return false from the visitor to stop; the function returns
// false iff stopped early.
bool for_each_plan_outcome(const Market& market, CompatibilityRegime regime,
                           const AssignmentArrangement& arrangement,
                           const std::function<bool(const Matching&)>& visit);

} // namespace lots
