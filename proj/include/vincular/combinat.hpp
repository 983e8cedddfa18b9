#pragma once

#include <gmpxx.h>

namespace vincular {

// All permutation counts in this library are arbitrary-precision integers:
// the sequences involved (Bell numbers, table rows) pass 2^63 well inside the
// ranges the recurrences are exercised over.
using BigCount = mpz_class;

// C(n, k); 0 whenever (n, k) lies outside 0 <= k <= n (negative n included).
BigCount binomial(long n, long k);

// n-th Bell number via B_{n+1} = sum_k C(n,k) B_k, memoized per process.
// Throws std::invalid_argument for n < 0.
BigCount bell(int n);

// n-th Catalan number C(2n, n) / (n+1). Throws std::invalid_argument for n < 0.
BigCount catalan(int n);

// n! for n >= 0. Throws std::invalid_argument for n < 0.
BigCount factorial(int n);

}  // namespace vincular
