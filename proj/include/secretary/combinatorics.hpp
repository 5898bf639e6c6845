#pragma once

#include "secretary/rational.hpp"

namespace secretary {

/// C(n, r), exact. Out-of-range r (r < 0 or r > n) yields 0 so summation
/// bounds can be applied without edge-case branching.
BigInt binomial(long n, long r);

/// Exact factorial n!.
BigInt factorial(long n);

/// Sum 1/k + 1/(k+1) + ... + 1/(n-1), exact. Requires 1 <= k <= n-1.
Rational harmonic_diff(long n, long k);

/// Number of arrangements of {1..n} into two disjoint nonempty cycles,
/// i.e. (n-1)! * (1 + 1/2 + ... + 1/(n-1)). Requires n >= 2.
BigInt stirling_cycle2(long n);

// Identity checks used by the test suites. Each evaluates both sides
// independently in exact arithmetic; any deviation is a bug, not noise.

/// sum_{t=l}^{n-k+l} C(n-t,k-l)*C(t,l) == C(n+1,k+1), for 1 <= l <= k <= n-1.
bool check_subset_identity(long n, long k, long l);

/// sum_{t=2}^{n-k+1} C(n-t,k-1)/(t-1) == C(n-1,k-1) * harmonic_diff(n,k),
/// for 1 <= k <= n-1.
bool check_harmonic_identity(long n, long k);

/// sum_{t=l+1}^{n-k+l} C(t-1,l-1)*C(n-t,k-l)/(t-1)
///   == (C(n-1,k-1) - C(n-l,k-l)) / (l-1), for 2 <= l <= k <= n-1.
bool check_l2_identity(long n, long k, long l);

}  // namespace secretary
