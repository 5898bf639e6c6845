#include "secretary/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "secretary/exact.hpp"

namespace secretary {

OracleReport oracle_enumerate(const RuleParams& params, int cap) {
    if (params.n > cap)
        throw std::invalid_argument("oracle_enumerate: n=" + std::to_string(params.n) +
                                    " exceeds cap " + std::to_string(cap));

    const int n = params.n;
    OracleReport report;
    report.n = n;
    report.k = params.k;
    report.l = params.l;
    report.rank_counts.assign(static_cast<size_t>(n), 0);
    report.fail_counts.assign(static_cast<size_t>(n), 0);

    Permutation perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::int64_t total = 0;
    do {
        const SelectionOutcome out = run_rule(params, perm);
        ++report.rank_counts[static_cast<size_t>(out.selected - 1)];
        if (!out.success) ++report.fail_counts[static_cast<size_t>(out.selected - 1)];
        ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    report.total = total;

    std::int64_t rank_sum = 0;
    for (int s = 1; s <= n; ++s) rank_sum += s * report.rank_counts[static_cast<size_t>(s - 1)];
    report.mean_rank = Rational(BigInt(rank_sum), BigInt(total));

    report.mean_reward.reserve(static_cast<size_t>(n));
    std::int64_t reward_sum = 0;
    for (int d = 1; d <= n; ++d) {
        reward_sum += static_cast<std::int64_t>(n + 1 - d) * report.rank_counts[static_cast<size_t>(d - 1)];
        report.mean_reward.push_back(Rational(BigInt(reward_sum), BigInt(total)));
    }
    return report;
}

std::vector<Discrepancy> compare_with_formulas(const OracleReport& report) {
    std::vector<Discrepancy> out;
    const RuleParams params(report.n, report.k, report.l);

    const auto mismatch = [&](int d, const char* quantity, const Rational& oracle_value,
                              const Rational& formula_value) {
        if (oracle_value != formula_value)
            out.push_back({report.n, report.k, report.l, d, quantity, oracle_value, formula_value});
    };

    mismatch(0, "mean_rank", report.mean_rank, expected_rank(params));
    for (int d = 1; d <= report.n; ++d) {
        const Rational& oracle_value = report.mean_reward[static_cast<size_t>(d - 1)];
        mismatch(d, "mean_reward", oracle_value, expected_reward(params, RewardHorizon{d}));
        if (d <= 2) mismatch(d, "closed_reward", oracle_value, expected_reward_closed(params, d));
    }
    return out;
}

std::vector<Discrepancy> verify_formulas(int n_max, int cap) {
    std::vector<Discrepancy> out;
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (int l = 1; l <= k; ++l) {
                const auto found = compare_with_formulas(oracle_enumerate(RuleParams(n, k, l), cap));
                out.insert(out.end(), found.begin(), found.end());
            }
    return out;
}

}  // namespace secretary
