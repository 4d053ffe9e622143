#include "lots/rng.hpp"

#include <algorithm>

namespace lots {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    // threshold = 2^64 mod bound; values below it would bias the modulus.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold)
            return r % bound;
    }
}

double SplitMix64::next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 0xCBF29CE484222325ULL; // FNV-1a offset basis
    auto absorb = [&h](unsigned char byte) {
        h ^= byte;
        h *= 0x100000001B3ULL;
    };
    for (int i = 0; i < 8; ++i)
        absorb(static_cast<unsigned char>(seed >> (8 * i)));
    for (char c : tag)
        absorb(static_cast<unsigned char>(c));
    // One scramble round so FNV's weak low bits don't leak into seeding.
    std::uint64_t z = h + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<std::string> sample_permutation(std::vector<std::string> ids, std::uint64_t seed) {
    std::sort(ids.begin(), ids.end());
    SplitMix64 rng(seed);
    for (std::size_t i = ids.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(ids[i - 1], ids[j]);
    }
    return ids;
}

std::vector<std::string> sample_uniform_worker_order(const std::vector<std::string>& worker_ids,
                                                     std::uint64_t seed) {
    return sample_permutation(worker_ids, seed);
}

std::map<std::string, std::vector<std::string>>
sample_uniform_job_orders(const std::vector<std::string>& worker_ids,
                          const std::vector<std::string>& job_ids,
                          std::uint64_t seed) {
    std::map<std::string, std::vector<std::string>> orders;
    for (const auto& w : worker_ids)
        orders[w] = sample_permutation(job_ids, derive_seed(seed, "job-order/" + w));
    return orders;
}

} // namespace lots
