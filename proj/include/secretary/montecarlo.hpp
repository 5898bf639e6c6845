#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secretary/strategy.hpp"

namespace secretary {

/// SplitMix64 (Steele-Lea-Flood 2014; the generator behind Java's
/// SplittableRandom). 64-bit state, full-period, documented constants.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound) by 128-bit multiply-shift; rejection-free,
    /// residual bias < bound/2^64 (invisible at every bound used here).
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

/// Independent substream for one sample index, SplittableRandom-style:
/// (seed, index) fully determine the stream, so any sharding of the sample
/// range reproduces the same draws.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 key(seed + index * 0x9E3779B97F4A7C15ull);
    return SplitMix64(key.next());
}

/// In-place Fisher-Yates shuffle driven by the given stream.
template <typename T>
void shuffle_values(std::vector<T>& values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(values[i - 1], values[j]);
    }
}

struct SimConfig {
    RuleParams params;
    std::optional<RewardHorizon> horizon;
    std::int64_t samples = 1;
    std::uint64_t seed = 0;
};

struct SimResult {
    double mean_rank = 0.0;
    double std_error_rank = 0.0;  // sample std dev (M-1 divisor) / sqrt(M)
    std::optional<double> mean_reward;
    std::optional<double> std_error_reward;
    std::int64_t samples = 0;
};

/// Runs the rule on `samples` seeded random permutations. Identical configs
/// produce bit-identical results (integer accumulators, fixed order).
SimResult simulate(const SimConfig& config);

}  // namespace secretary
