#include "secretary/exact.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "secretary/combinatorics.hpp"

namespace secretary {

namespace {

// Common-denominator scale for accumulating sums of x/m, m in [1, n-1]:
// L = lcm(1..n-1) and cofactor[m] = L/m. Lets the t-loop run on plain
// bigint adds with a single canonicalization at the end.
struct DenScale {
    BigInt lcm_all;
    std::vector<BigInt> cofactor;  // index m, 1 <= m <= n-1
};

const DenScale& den_scale(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<DenScale>> cache;
    std::scoped_lock lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        auto scale = std::make_unique<DenScale>();
        scale->lcm_all = 1;
        for (long m = 1; m <= n - 1; ++m)
            mpz_lcm_ui(scale->lcm_all.get_mpz_t(), scale->lcm_all.get_mpz_t(),
                       static_cast<unsigned long>(m));
        scale->cofactor.resize(static_cast<size_t>(n));
        for (long m = 1; m <= n - 1; ++m)
            mpz_divexact_ui(scale->cofactor[static_cast<size_t>(m)].get_mpz_t(),
                            scale->lcm_all.get_mpz_t(), static_cast<unsigned long>(m));
        slot = std::move(scale);
    }
    return *slot;
}

// sum_{s=1}^{m} (n+1-s) = m*(2n+1-m)/2.
std::int64_t top_reward_sum(std::int64_t n, std::int64_t m) {
    return m * (2 * n + 1 - m) / 2;
}

double log_binomial(long n, long r) {
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(r) + 1.0) -
           std::lgamma(static_cast<double>(n - r) + 1.0);
}

void require_horizon(const RuleParams& params, RewardHorizon horizon) {
    if (horizon.d > params.n)
        throw std::invalid_argument("reward horizon: need d <= n (got d=" +
                                    std::to_string(horizon.d) + " n=" +
                                    std::to_string(params.n) + ")");
}

}  // namespace

RankDistribution::RankDistribution(int n, std::vector<Rational> probabilities)
    : n_(n), p_(std::move(probabilities)) {
    if (static_cast<int>(p_.size()) != n)
        throw std::invalid_argument("RankDistribution: need one probability per rank");
}

const Rational& RankDistribution::prob(int s) const {
    if (s < 1 || s > n_) throw std::domain_error("RankDistribution::prob: rank outside [1, n]");
    return p_[static_cast<size_t>(s - 1)];
}

Rational RankDistribution::total_mass() const {
    Rational sum;
    for (const auto& p : p_) sum += p;
    return sum;
}

Rational RankDistribution::mean() const {
    Rational sum;
    for (int s = 1; s <= n_; ++s) sum += Rational(s) * p_[static_cast<size_t>(s - 1)];
    return sum;
}

Rational RankDistribution::expected_reward(RewardHorizon horizon) const {
    if (horizon.d > n_) throw std::invalid_argument("RankDistribution: need d <= n");
    Rational sum;
    for (int s = 1; s <= horizon.d; ++s)
        sum += Rational(n_ + 1 - s) * p_[static_cast<size_t>(s - 1)];
    return sum;
}

Rational p_success(const RuleParams& params, int t, int s) {
    const long n = params.n, k = params.k, l = params.l;
    if (t < l + 1 || t > n - k + l)
        throw std::domain_error("p_success: test value t outside [l+1, n-k+l]");
    if (s < 1 || s > t - 1)
        throw std::domain_error("p_success: rank s outside [1, t-1]");
    return Rational(binomial(t - 1, l - 1) * binomial(n - t, k - l),
                    BigInt(t - 1) * binomial(n, k));
}

Rational p_fail(const RuleParams& params, int s) {
    const long n = params.n, k = params.k, l = params.l;
    if (s < l + 1 || s > n)
        throw std::domain_error("p_fail: rank s outside [l+1, n]");
    return Rational(binomial(n - l, k - l), BigInt(n - l) * binomial(n, k));
}

RankDistribution rank_distribution(const RuleParams& params) {
    const int n = params.n, k = params.k, l = params.l;
    const int t_max = n - k + l;

    // Success weight per rank for each test value t (s-independent).
    std::vector<Rational> weight(static_cast<size_t>(t_max + 2));
    for (int t = l + 1; t <= t_max; ++t) weight[static_cast<size_t>(t)] = p_success(params, t, 1);
    // suffix[t] = sum of weights for test values >= t.
    std::vector<Rational> suffix(static_cast<size_t>(t_max + 2));
    for (int t = t_max; t >= l + 1; --t)
        suffix[static_cast<size_t>(t)] = suffix[static_cast<size_t>(t + 1)] + weight[static_cast<size_t>(t)];

    const Rational fail = p_fail(params, l + 1);
    std::vector<Rational> probs(static_cast<size_t>(n));
    for (int s = 1; s <= n; ++s) {
        const int t_lo = std::max(l + 1, s + 1);
        Rational p = t_lo <= t_max ? suffix[static_cast<size_t>(t_lo)] : Rational();
        if (s >= l + 1) p += fail;
        probs[static_cast<size_t>(s - 1)] = p;
    }
    return RankDistribution(n, std::move(probs));
}

Rational expected_rank(const RuleParams& params) {
    const long n = params.n, k = params.k, l = params.l;
    const Rational ratio(binomial(n - l, k - l), binomial(n, k));
    return Rational(n + 1, 2) * (Rational(l, k + 1) + ratio);
}

Rational expected_reward(const RuleParams& params, RewardHorizon horizon) {
    require_horizon(params, horizon);
    const long n = params.n, k = params.k, l = params.l, d = horizon.d;
    const DenScale& scale = den_scale(params.n);
    const BigInt choose_nk = binomial(n, k);

    // Success channel: sum_t C(t-1,l-1) * C(n-t,k-l) / (t-1) * T(t,d), with
    // T the collapsed inner rank sum. Both binomials advance by exact-division
    // recurrences; terms accumulate over the lcm(1..n-1) common denominator.
    BigInt a = l;                                  // C(t-1, l-1) at t = l+1
    BigInt b = binomial(n - l - 1, k - l);         // C(n-t, k-l) at t = l+1
    BigInt sum = 0;
    BigInt term;
    const long t_max = n - k + l;
    for (long t = l + 1; t <= t_max; ++t) {
        const std::int64_t top = top_reward_sum(n, std::min<long>(t - 1, d));
        term = a * b;
        term *= top;
        sum += term * scale.cofactor[static_cast<size_t>(t - 1)];
        if (t < t_max) {
            a *= t;
            mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(t - l + 1));
            b *= (n - t - k + l);
            mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n - t));
        }
    }
    Rational value(sum, scale.lcm_all * choose_nk);

    // Failure channel: uniform over ranks l+1..n; only ranks <= d pay.
    if (d >= l + 1) {
        const std::int64_t tail = (d - l) * (2 * n + 1 - l - d) / 2;
        value += Rational(binomial(n - l, k - l) * tail, BigInt(n - l) * choose_nk);
    }
    return value;
}

Rational expected_reward_closed(const RuleParams& params, int d) {
    const long n = params.n, k = params.k, l = params.l;
    if (d != 1 && d != 2)
        throw std::invalid_argument("expected_reward_closed: only d = 1 or 2 has a closed form");

    if (l == 1) {
        const Rational kh = Rational(k) * harmonic_diff(n, k);
        if (d == 1) return kh;
        return Rational(2 * n - 1, n) * kh - Rational(k, n) * Rational(n - k - 1);
    }
    const Rational core = Rational(k, n) - Rational(binomial(n - l, k - l), binomial(n, k));
    return Rational(d == 1 ? n : 2 * n - 1, l - 1) * core;
}

bool complement_holds(const RuleParams& params) {
    const Rational lhs = expected_reward(params, RewardHorizon{params.n}) + expected_rank(params);
    return lhs == Rational(params.n + 1);
}

double expected_rank_float(const RuleParams& params) {
    const double n = params.n, k = params.k;
    // C(n-l,k-l)/C(n,k) = prod_{i=0}^{l-1} (k-i)/(n-i), exact to ~l ulps.
    double ratio = 1.0;
    for (int i = 0; i < params.l; ++i) ratio *= (k - i) / (n - i);
    return 0.5 * (n + 1.0) * (params.l / (k + 1.0) + ratio);
}

double expected_reward_float(const RuleParams& params, RewardHorizon horizon) {
    require_horizon(params, horizon);
    const long n = params.n, k = params.k, l = params.l, d = horizon.d;

    // w(t) = C(t-1,l-1)*C(n-t,k-l)/C(n,k), advanced by ratio recurrences from
    // a single log-space starting value; bounded above by (n+1)/(k+1).
    const double log_choose_nk = log_binomial(n, k);
    double w = std::exp(std::log(static_cast<double>(l)) +
                        log_binomial(n - l - 1, k - l) - log_choose_nk);
    double sum = 0.0;
    const long t_max = n - k + l;
    for (long t = l + 1; t <= t_max; ++t) {
        const double m = static_cast<double>(std::min<long>(t - 1, d));
        const double top = 0.5 * m * (2.0 * static_cast<double>(n) + 1.0 - m);
        sum += w / static_cast<double>(t - 1) * top;
        if (t < t_max) {
            w *= static_cast<double>(t) / static_cast<double>(t - l + 1);
            w *= static_cast<double>(n - t - k + l) / static_cast<double>(n - t);
        }
    }
    if (d >= l + 1) {
        const double tail = 0.5 * static_cast<double>(d - l) *
                            static_cast<double>(2 * n + 1 - l - d);
        sum += std::exp(log_binomial(n - l, k - l) - log_choose_nk) /
               static_cast<double>(n - l) * tail;
    }
    return sum;
}

}  // namespace secretary
