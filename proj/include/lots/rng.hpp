#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lots {

// splitmix64. Chosen over <random> engines plus std::shuffle because the
// standard leaves shuffle/distribution algorithms unspecified; lottery draws
// must be byte-identical across platforms for a fixed seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) via rejection sampling. bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

    double next_unit(); // [0,1)

private:
    std::uint64_t state_;
};

// Stable sub-seed for (seed, tag): FNV-1a over the seed bytes and the tag,
// scrambled once. Two callers deriving the same (seed, tag) get the same
// stream regardless of construction order.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);

// Fisher-Yates over the ids sorted lexicographically first, so the result
// depends only on the id set and the seed, not on insertion order.
std::vector<std::string> sample_permutation(std::vector<std::string> ids, std::uint64_t seed);

// Uniform over all |ids|! orders; deterministic per seed.
std::vector<std::string> sample_uniform_worker_order(const std::vector<std::string>& worker_ids,
                                                     std::uint64_t seed);

// One independent uniform job permutation per worker. Per-worker streams are
// derived from (seed, worker id).
std::map<std::string, std::vector<std::string>>
sample_uniform_job_orders(const std::vector<std::string>& worker_ids,
                          const std::vector<std::string>& job_ids,
                          std::uint64_t seed);

} // namespace lots
