#include <doctest.h>

#include <numeric>

#include "secretary/combinatorics.hpp"
#include "secretary/exact.hpp"
#include "secretary/oracle.hpp"

using namespace secretary;

TEST_CASE("oracle tallies for the six permutations of n = 3") {
    const auto report = oracle_enumerate(RuleParams(3, 1, 1));
    CHECK(report.total == 6);
    CHECK(report.rank_counts == std::vector<std::int64_t>{3, 2, 1});
    CHECK(report.fail_counts == std::vector<std::int64_t>{0, 1, 1});
    CHECK(report.mean_rank == Rational(5, 3));
    CHECK(report.mean_reward[0] == Rational(3, 2));
    CHECK(report.mean_reward[1] == Rational(13, 6));
    CHECK(report.mean_reward[2] == Rational(7, 3));
}

TEST_CASE("oracle tallies for n = 2 and the all-reject rule") {
    const auto coin = oracle_enumerate(RuleParams(2, 1, 1));
    CHECK(coin.rank_counts == std::vector<std::int64_t>{1, 1});
    CHECK(coin.mean_rank == Rational(3, 2));

    CHECK(oracle_enumerate(RuleParams(4, 3, 3)).mean_rank == Rational(5, 2));
}

TEST_CASE("oracle covers exactly n! runs") {
    for (int n = 2; n <= 7; ++n) {
        const auto report = oracle_enumerate(RuleParams(n, 1, 1));
        CHECK(Rational(BigInt(report.total)) == Rational(factorial(n)));
        const auto sum = std::accumulate(report.rank_counts.begin(), report.rank_counts.end(),
                                         std::int64_t{0});
        CHECK(sum == report.total);
    }
}

TEST_CASE("unsuccessful tallies are uniform over ranks l+1..n, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (int l = 1; l <= k; ++l) {
                const auto report = oracle_enumerate(RuleParams(n, k, l));
                // count per rank = n! * C(n-l,k-l) / (C(n,k) * (n-l))
                const Rational expected(factorial(n) * binomial(n - l, k - l),
                                        binomial(n, k) * BigInt(n - l));
                REQUIRE(expected.is_integer());
                for (int s = 1; s <= n; ++s) {
                    const auto count = report.fail_counts[static_cast<size_t>(s - 1)];
                    if (s <= l)
                        REQUIRE(count == 0);
                    else
                        REQUIRE(Rational(BigInt(count)) == expected);
                }
            }
}

TEST_CASE("verify_formulas finds no discrepancy up to n = 6") {
    CHECK(verify_formulas(2).empty());
    CHECK(verify_formulas(6).empty());
}

TEST_CASE("a corrupted tally is reported, with coordinates") {
    auto report = oracle_enumerate(RuleParams(4, 2, 1));
    REQUIRE(compare_with_formulas(report).empty());

    // shift one selection from rank 1 to rank 4
    report.rank_counts[0] -= 1;
    report.rank_counts[3] += 1;
    const std::int64_t rank_sum = 1 * report.rank_counts[0] + 2 * report.rank_counts[1] +
                                  3 * report.rank_counts[2] + 4 * report.rank_counts[3];
    report.mean_rank = Rational(BigInt(rank_sum), BigInt(report.total));

    const auto diffs = compare_with_formulas(report);
    REQUIRE(!diffs.empty());
    CHECK(diffs.front().n == 4);
    CHECK(diffs.front().k == 2);
    CHECK(diffs.front().l == 1);
    CHECK(diffs.front().quantity == "mean_rank");
    CHECK(diffs.front().oracle_value != diffs.front().formula_value);
}

TEST_CASE("the enumeration cap rejects factorial blowups") {
    CHECK_THROWS_AS(oracle_enumerate(RuleParams(11, 1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(oracle_enumerate(RuleParams(5, 1, 1), 4), std::invalid_argument);
    CHECK_NOTHROW(oracle_enumerate(RuleParams(5, 1, 1), 5));
}
