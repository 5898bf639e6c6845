#include "secretary/strategy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace secretary {

RuleParams::RuleParams(int n_, int k_, int l_) : n(n_), k(k_), l(l_) {
    if (!(1 <= l && l <= k && k <= n - 1))
        throw std::invalid_argument("RuleParams: need 1 <= l <= k <= n-1 (got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k) +
                                    " l=" + std::to_string(l) + ")");
}

bool is_rank_permutation(const Permutation& values) {
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : values) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

SelectionOutcome run_rule(const RuleParams& params, const Permutation& perm) {
    if (static_cast<int>(perm.size()) != params.n)
        throw std::invalid_argument("run_rule: permutation length " +
                                    std::to_string(perm.size()) + " != n=" +
                                    std::to_string(params.n));

    std::vector<int> block(perm.begin(), perm.begin() + params.k);
    std::nth_element(block.begin(), block.begin() + (params.l - 1), block.end());
    const int t = block[static_cast<size_t>(params.l - 1)];

    const int tail = params.n - params.k;
    for (int i = 1; i <= tail; ++i) {
        const int v = perm[static_cast<size_t>(params.k + i - 1)];
        if (v < t) return {t, i, v, true};
    }
    return {t, tail, perm[static_cast<size_t>(params.n - 1)], false};
}

RewardHorizon::RewardHorizon(int d_) : d(d_) {
    if (d < 1) throw std::invalid_argument("RewardHorizon: need d >= 1");
}

long reward_value(RewardHorizon horizon, int n, int s) {
    if (horizon.d > n)
        throw std::invalid_argument("reward_value: need d <= n");
    if (s < 1 || s > n)
        throw std::invalid_argument("reward_value: rank s outside [1, n]");
    return s <= horizon.d ? n + 1 - s : 0;
}

}  // namespace secretary
