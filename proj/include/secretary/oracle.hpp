#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secretary/rational.hpp"
#include "secretary/strategy.hpp"

namespace secretary {

inline constexpr int kDefaultOracleCap = 10;

/// Exhaustive-enumeration tallies for one (n,k,l): every one of the n!
/// arrival orders is run through the rule once.
struct OracleReport {
    int n = 0, k = 0, l = 0;
    std::vector<std::int64_t> rank_counts;  // [s-1]: runs that selected rank s
    std::vector<std::int64_t> fail_counts;  // [s-1]: unsuccessful runs ending at rank s
    std::int64_t total = 0;                 // n!
    Rational mean_rank;
    std::vector<Rational> mean_reward;      // [d-1]: exact mean of the d-cutoff reward
};

/// Runs the rule on all n! permutations of {1..n}, in lexicographic order.
/// Rejects n above the cap (factorial blowup).
OracleReport oracle_enumerate(const RuleParams& params, int cap = kDefaultOracleCap);

/// One exact mismatch between an oracle tally and a formula value.
struct Discrepancy {
    int n = 0, k = 0, l = 0;
    int d = 0;             // 0 when the mismatch is in the rank statistic
    std::string quantity;  // "mean_rank" | "mean_reward" | "closed_reward"
    Rational oracle_value;
    Rational formula_value;
};

/// Compares one report against the closed-form layer: mean rank vs the
/// expected-rank formula, every d in 1..n vs the reward sum, d in {1,2}
/// vs the closed forms. Empty result means exact agreement.
std::vector<Discrepancy> compare_with_formulas(const OracleReport& report);

/// Full sweep: every n <= n_max, every valid (k,l). Discrepancies are data,
/// not errors; an empty list is the pass condition.
std::vector<Discrepancy> verify_formulas(int n_max, int cap = kDefaultOracleCap);

}  // namespace secretary
