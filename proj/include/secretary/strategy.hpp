#pragma once

#include <vector>

namespace secretary {

/// Parameters of the stopping rule R_n(k,l): reject the first k of n
/// arrivals, then accept the first one ranked better than the l-th best
/// of the rejected block (the last arrival if none qualifies).
struct RuleParams {
    int n;  // pool size
    int k;  // rejection-phase length
    int l;  // rank threshold within the rejected block

    RuleParams(int n, int k, int l);  // enforces 1 <= l <= k <= n-1
};

/// An arrival order, stored as the sequence of absolute ranks: values[i]
/// is the rank of the (i+1)-th arrival, 1 = best. Must be a bijection
/// onto {1..n}.
using Permutation = std::vector<int>;

/// True iff values is a permutation of {1..values.size()}.
bool is_rank_permutation(const Permutation& values);

struct SelectionOutcome {
    int test_value;  // l-th smallest rank among the first k arrivals
    int offset;      // 1-based position of the accepted arrival after the block
    int selected;    // absolute rank of the accepted arrival
    bool success;    // some post-block arrival beat the test value
};

/// Runs the rule on one arrival order. Rejects a length mismatch; the
/// bijection invariant is the caller's (checked where inputs cross the
/// library boundary, not per call).
SelectionOutcome run_rule(const RuleParams& params, const Permutation& perm);

/// Reward cutoff: only ranks <= d earn a nonzero payoff.
struct RewardHorizon {
    int d;
    explicit RewardHorizon(int d);  // enforces d >= 1
};

/// Payoff for hiring rank s out of n: n+1-s if s <= d, else 0.
long reward_value(RewardHorizon horizon, int n, int s);

}  // namespace secretary
