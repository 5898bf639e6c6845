#pragma once

#include <optional>
#include <string>

#include "secretary/rational.hpp"
#include "secretary/strategy.hpp"

namespace secretary {

enum class Objective { MinRank, MaxReward };

struct OptimizationResult {
    int k_star = 0;
    int l_star = 0;
    double value = 0.0;                  // optimum, as a double
    std::optional<Rational> exact;       // set when the exact path evaluated it
    Objective objective = Objective::MinRank;
    int d = 0;                           // reward cutoff; 0 for the rank objective
    int k_min = 0, k_max = 0, l_min = 0, l_max = 0;  // search domain
    std::string tie_break = "smallest k, then smallest l";
};

struct SearchOptions {
    /// Cap on l in the grid; default ceil(4*ln n) (the optimal l grows like
    /// ln n - 1, so a 4x margin keeps the search sound without an O(n^2) grid).
    std::optional<int> l_max;
    /// Largest n evaluated in exact rational arithmetic; 0 forces the
    /// float path everywhere.
    int exact_limit = 500;
};

/// Grid argmin of the expected selected rank over 1 <= l <= min(k, l_max),
/// l <= k <= n-1. Deterministic tie-break: smallest k, then smallest l.
OptimizationResult optimize_rank(int n, const SearchOptions& options = {});

/// Grid argmax of the expected d-cutoff reward over the same domain.
OptimizationResult optimize_reward(int n, RewardHorizon horizon,
                                   const SearchOptions& options = {});

/// Continuous minimizer of the expected rank for l = 1: sqrt(n) - 1. The
/// integer argmin is its floor or ceiling.
double closed_k_l1(double n);

/// Continuous minimizer of the expected rank for l = 2 (root of a cubic,
/// evaluated from a single shared radicand); ~n^(2/3) for large n.
double closed_k_l2(double n);

struct AsymptoticEstimate {
    double n = 0.0;
    std::optional<int> l;     // requested threshold, when fixed
    double k_approx = 0.0;    // n^(l/(l+1)); n/e when l follows ln(n)-1
    double l_approx = 0.0;    // the l actually used
    double value_approx = 0.0;  // (l+1)/2 * n^(1/(l+1))
};

/// Large-n approximations for the rank objective; natural logarithm
/// throughout. Rejects n < 3 when l is unset (needs ln(n) - 1 > 0).
AsymptoticEstimate asymptotics(double n, std::optional<int> l = {});

struct C2Solution {
    double x;   // smaller root of 2x - 2*ln(x) = 3, in (0,1)
    double c2;  // x*(2-x)
};

/// Bracketed bisection on (0,1) to 1e-12 absolute tolerance.
C2Solution solve_c2();

/// Finite-n proxy for the reward-rate limit c_d: the float-path grid
/// optimum of the d-cutoff reward at this n, divided by n. No
/// extrapolation is applied; callers disclose n alongside the value.
double estimate_cd(int d, int n, int l_max);

}  // namespace secretary
