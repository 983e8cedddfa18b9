#pragma once

#include <array>
#include <map>
#include <vector>

#include "vincular/combinat.hpp"
#include "vincular/perm.hpp"

namespace vincular {

// Occurrence-count distribution over S_n for a fixed pattern: counts[r] is the
// number of permutations of length n with exactly r occurrences. Trailing
// zeros are trimmed; the largest r is discovered, not precomputed.
struct DistributionRow {
  GeneralizedPattern pattern;
  int n = 0;
  std::vector<BigCount> counts;

  // counts[r], with zeros implied past the stored range
  BigCount at(int r) const;
};

// Streams S_n in lexicographic order (no materialized list) and folds the
// per-permutation occurrence count into a histogram. n above n_limit raises a
// std::domain_error resource guard; pass a larger n_limit to run deliberately.
DistributionRow distribution(const GeneralizedPattern& pattern, int n,
                             int n_limit = 10);

// Joint distribution of (1 + ascents, descents, 2-31 occurrences, 31-2
// occurrences) over S_n, as a sparse polynomial: exponent quadruple
// (e_x, e_y, e_p, e_q) -> number of permutations realizing it. n = 0
// contributes the constant term {(0,0,0,0): 1}.
struct JointStatPolynomial {
  int n = 0;
  std::map<std::array<int, 4>, BigCount> terms;

  BigCount coefficient_sum() const;
};

JointStatPolynomial joint_stats(int n, int n_limit = 8);

// true iff every member produces an identical occurrence-count distribution
// over S_n.
bool equidistribution_check(const std::vector<GeneralizedPattern>& members,
                            int n, int n_limit = 10);

}  // namespace vincular
