#include "secretary/optimizer.hpp"

#include <cmath>
#include <stdexcept>

#include "secretary/exact.hpp"

namespace secretary {

namespace {

int default_l_max(int n) {
    return std::max(1, static_cast<int>(std::ceil(4.0 * std::log(static_cast<double>(n)))));
}

// Shared grid walk. k ascending, l ascending, strict improvement only, so
// ties resolve to the smallest k then the smallest l.
template <typename Exact, typename Approx>
OptimizationResult grid_search(int n, bool maximize, const SearchOptions& options,
                               Exact exact_objective, Approx approx_objective) {
    if (n < 2) throw std::invalid_argument("grid search: need n >= 2");
    const int l_cap = options.l_max.value_or(default_l_max(n));
    if (l_cap < 1) throw std::invalid_argument("grid search: need l_max >= 1");
    const bool use_exact = n <= options.exact_limit;

    OptimizationResult best;
    best.k_min = 1;
    best.k_max = n - 1;
    best.l_min = 1;
    best.l_max = l_cap;

    bool first = true;
    Rational best_exact;
    double best_value = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
        for (int l = 1; l <= std::min(k, l_cap); ++l) {
            const RuleParams params(n, k, l);
            bool better;
            Rational exact_value;
            double value;
            if (use_exact) {
                exact_value = exact_objective(params);
                better = first || (maximize ? best_exact < exact_value : exact_value < best_exact);
                value = exact_value.to_double();
            } else {
                value = approx_objective(params);
                better = first || (maximize ? best_value < value : value < best_value);
            }
            if (better) {
                first = false;
                best_value = value;
                if (use_exact) best_exact = exact_value;
                best.k_star = k;
                best.l_star = l;
            }
        }
    }
    best.value = best_value;
    if (use_exact) best.exact = best_exact;
    return best;
}

}  // namespace

OptimizationResult optimize_rank(int n, const SearchOptions& options) {
    OptimizationResult result = grid_search(
        n, /*maximize=*/false, options,
        [](const RuleParams& p) { return expected_rank(p); },
        [](const RuleParams& p) { return expected_rank_float(p); });
    result.objective = Objective::MinRank;
    return result;
}

OptimizationResult optimize_reward(int n, RewardHorizon horizon, const SearchOptions& options) {
    if (horizon.d > n) throw std::invalid_argument("optimize_reward: need d <= n");
    OptimizationResult result = grid_search(
        n, /*maximize=*/true, options,
        [&](const RuleParams& p) { return expected_reward(p, horizon); },
        [&](const RuleParams& p) { return expected_reward_float(p, horizon); });
    result.objective = Objective::MaxReward;
    result.d = horizon.d;
    return result;
}

double closed_k_l1(double n) {
    if (n < 2) throw std::invalid_argument("closed_k_l1: need n >= 2");
    return std::sqrt(n) - 1.0;
}

double closed_k_l2(double n) {
    if (n < 2) throw std::invalid_argument("closed_k_l2: need n >= 2");
    const double q = (2.0 * n - 1.0) * (2.0 * n - 1.0);  // (2n-1)^2
    const double radicand = std::sqrt(q * q - 1.0) + q;
    const double c = std::cbrt(radicand);
    return 0.5 * (c - 1.0 + 1.0 / c);
}

AsymptoticEstimate asymptotics(double n, std::optional<int> l) {
    AsymptoticEstimate est;
    est.n = n;
    est.l = l;
    if (l) {
        if (*l < 1 || n < 2) throw std::invalid_argument("asymptotics: need l >= 1 and n >= 2");
        est.l_approx = static_cast<double>(*l);
    } else {
        if (n < 3) throw std::invalid_argument("asymptotics: need n >= 3 when l is unset");
        est.l_approx = std::log(n) - 1.0;
    }
    est.k_approx = std::pow(n, est.l_approx / (est.l_approx + 1.0));
    est.value_approx = 0.5 * (est.l_approx + 1.0) * std::pow(n, 1.0 / (est.l_approx + 1.0));
    return est;
}

C2Solution solve_c2() {
    // f(x) = 2x - 2*ln(x) - 3: +inf at 0+, -1 at x=1, so the smaller root is
    // bracketed in (0,1).
    const auto f = [](double x) { return 2.0 * x - 2.0 * std::log(x) - 3.0; };
    double lo = 1e-9, hi = 1.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    return {x, x * (2.0 - x)};
}

double estimate_cd(int d, int n, int l_max) {
    SearchOptions options;
    options.l_max = l_max;
    options.exact_limit = 0;  // float path: the large-n proxy, by contract
    return optimize_reward(n, RewardHorizon{d}, options).value / static_cast<double>(n);
}

}  // namespace secretary
