#include "secretary/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace secretary {

BigInt binomial(long n, long r) {
    if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
    if (r < 0 || r > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be non-negative");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational harmonic_diff(long n, long k) {
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("harmonic_diff: need 1 <= k <= n-1 (got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k) + ")");
    // Accumulate num/den without intermediate reduction; one canonicalization
    // at the end. den stays (n-1)!/(k-1)!, small enough at every n used here.
    BigInt num = 0;
    BigInt den = 1;
    for (long j = k; j <= n - 1; ++j) {
        num = num * j + den;
        den *= j;
    }
    return Rational(num, den);
}

BigInt stirling_cycle2(long n) {
    if (n < 2) throw std::invalid_argument("stirling_cycle2: need n >= 2");
    // (n-1)! * sum_{t=1}^{n-1} 1/t, an integer: each (n-1)!/t divides exactly.
    const BigInt fac = factorial(n - 1);
    BigInt sum = 0;
    BigInt term;
    for (long t = 1; t <= n - 1; ++t) {
        mpz_divexact_ui(term.get_mpz_t(), fac.get_mpz_t(), static_cast<unsigned long>(t));
        sum += term;
    }
    return sum;
}

bool check_subset_identity(long n, long k, long l) {
    BigInt lhs = 0;
    for (long t = l; t <= n - k + l; ++t) lhs += binomial(n - t, k - l) * binomial(t, l);
    return lhs == binomial(n + 1, k + 1);
}

bool check_harmonic_identity(long n, long k) {
    Rational lhs;
    for (long t = 2; t <= n - k + 1; ++t) lhs += Rational(binomial(n - t, k - 1), BigInt(t - 1));
    return lhs == Rational(binomial(n - 1, k - 1)) * harmonic_diff(n, k);
}

bool check_l2_identity(long n, long k, long l) {
    Rational lhs;
    for (long t = l + 1; t <= n - k + l; ++t)
        lhs += Rational(binomial(t - 1, l - 1) * binomial(n - t, k - l), BigInt(t - 1));
    const Rational rhs = Rational(binomial(n - 1, k - 1) - binomial(n - l, k - l), BigInt(l - 1));
    return lhs == rhs;
}

}  // namespace secretary
