#pragma once

#include <vector>

#include "secretary/rational.hpp"
#include "secretary/strategy.hpp"

namespace secretary {

/// Exact distribution of the selected rank under R_n(k,l).
class RankDistribution {
public:
    RankDistribution(int n, std::vector<Rational> probabilities);

    int n() const { return n_; }
    /// P(selected rank == s), 1 <= s <= n.
    const Rational& prob(int s) const;
    /// Exact sum of all probabilities (1 for a well-formed distribution).
    Rational total_mass() const;
    /// Exact mean of the selected rank.
    Rational mean() const;
    /// Exact expected truncated reward sum_{s<=d} (n+1-s) * prob(s).
    Rational expected_reward(RewardHorizon horizon) const;

private:
    int n_;
    std::vector<Rational> p_;  // index s-1
};

/// Probability that the search succeeds with test value t and selects rank s.
/// Defined for l+1 <= t <= n-k+l and 1 <= s <= t-1; the value does not
/// depend on s inside that range.
Rational p_success(const RuleParams& params, int t, int s);

/// Probability that the search is unsuccessful and the last arrival has
/// rank s. Defined for l+1 <= s <= n; uniform over that range.
Rational p_fail(const RuleParams& params, int s);

/// Full selected-rank distribution (success and failure channels combined).
RankDistribution rank_distribution(const RuleParams& params);

/// Exact expected selected rank:
///   (n+1)/2 * ( l/(k+1) + C(n-l,k-l)/C(n,k) ).
Rational expected_rank(const RuleParams& params);

/// Exact expected truncated reward for cutoff d, evaluated from the
/// per-test-value probabilities with the inner rank sum collapsed to an
/// arithmetic series (O(n) per call).
Rational expected_reward(const RuleParams& params, RewardHorizon horizon);

/// Closed forms for d = 1 and d = 2 (harmonic sums for l = 1, binomial
/// ratios for l >= 2). Rejects other d.
Rational expected_reward_closed(const RuleParams& params, int d);

/// True iff expected_reward(d=n) + expected_rank == n+1 exactly.
bool complement_holds(const RuleParams& params);

// Floating-point evaluation path for n beyond the exact-arithmetic comfort
// zone. Deterministic summation order; agrees with the exact path to
// <= 1e-10 relative error wherever both run.
double expected_rank_float(const RuleParams& params);
double expected_reward_float(const RuleParams& params, RewardHorizon horizon);

}  // namespace secretary
