#include "secretary/montecarlo.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace secretary {

namespace {

using Wide = unsigned __int128;

// mean and standard error from exact integer tallies
struct Moments {
    double mean;
    double std_error;
};

Moments reduce(Wide sum, Wide sum_sq, std::int64_t m) {
    const double mean = static_cast<double>(sum) / static_cast<double>(m);
    if (m < 2) return {mean, 0.0};
    // variance = (m*sum_sq - sum^2) / (m*(m-1)), all exact until the cast
    const Wide num = static_cast<Wide>(m) * sum_sq - sum * sum;
    const double variance = static_cast<double>(num) /
                            (static_cast<double>(m) * static_cast<double>(m - 1));
    return {mean, std::sqrt(variance / static_cast<double>(m))};
}

}  // namespace

SimResult simulate(const SimConfig& config) {
    if (config.samples < 1)
        throw std::invalid_argument("simulate: need samples >= 1");
    const int n = config.params.n;
    if (config.horizon && config.horizon->d > n)
        throw std::invalid_argument("simulate: need d <= n");

    Wide rank_sum = 0, rank_sq = 0, reward_sum = 0, reward_sq = 0;
    std::vector<int> ranks(static_cast<size_t>(n));
    for (std::int64_t i = 0; i < config.samples; ++i) {
        SplitMix64 rng = sample_stream(config.seed, static_cast<std::uint64_t>(i));
        std::iota(ranks.begin(), ranks.end(), 1);
        shuffle_values(ranks, rng);
        const SelectionOutcome out = run_rule(config.params, ranks);
        const Wide s = static_cast<Wide>(out.selected);
        rank_sum += s;
        rank_sq += s * s;
        if (config.horizon) {
            const Wide r = static_cast<Wide>(reward_value(*config.horizon, n, out.selected));
            reward_sum += r;
            reward_sq += r * r;
        }
    }

    SimResult result;
    result.samples = config.samples;
    const Moments rank = reduce(rank_sum, rank_sq, config.samples);
    result.mean_rank = rank.mean;
    result.std_error_rank = rank.std_error;
    if (config.horizon) {
        const Moments reward = reduce(reward_sum, reward_sq, config.samples);
        result.mean_reward = reward.mean;
        result.std_error_reward = reward.std_error;
    }
    return result;
}

}  // namespace secretary
