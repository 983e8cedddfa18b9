#include "vincular/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vincular {

namespace {

void check_budget(const char* op, int n, int n_limit) {
  if (n < 0) throw std::domain_error(std::string(op) + ": n must be nonnegative");
  if (n > n_limit)
    throw std::domain_error(std::string(op) + ": n = " + std::to_string(n) +
                            " exceeds the budget " + std::to_string(n_limit) +
                            "; raise the limit to run this deliberately");
}

}  // namespace

BigCount DistributionRow::at(int r) const {
  if (r < 0 || r >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<size_t>(r)];
}

DistributionRow distribution(const GeneralizedPattern& pattern, int n,
                             int n_limit) {
  check_budget("distribution", n, n_limit);
  DistributionRow row{pattern, n, {}};
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    const Permutation perm{std::vector<int>(word)};
    const auto r = static_cast<size_t>(count_occurrences(pattern, perm));
    if (row.counts.size() <= r) row.counts.resize(r + 1, 0);
    ++row.counts[r];
  } while (std::next_permutation(word.begin(), word.end()));
  while (!row.counts.empty() && row.counts.back() == 0) row.counts.pop_back();
  return row;
}

BigCount JointStatPolynomial::coefficient_sum() const {
  BigCount total = 0;
  for (const auto& [exponents, coeff] : terms) total += coeff;
  return total;
}

JointStatPolynomial joint_stats(int n, int n_limit) {
  check_budget("joint_stats", n, n_limit);
  JointStatPolynomial poly{n, {}};
  if (n == 0) {
    poly.terms[{0, 0, 0, 0}] = 1;
    return poly;
  }
  const auto pat_2d31 = GeneralizedPattern::parse("2-31");
  const auto pat_31d2 = GeneralizedPattern::parse("31-2");
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    int ascents = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (word[static_cast<size_t>(i)] < word[static_cast<size_t>(i + 1)])
        ++ascents;
    const Permutation perm{std::vector<int>(word)};
    const std::array<int, 4> exponents{
        1 + ascents, (n - 1) - ascents,
        static_cast<int>(count_occurrences(pat_2d31, perm)),
        static_cast<int>(count_occurrences(pat_31d2, perm))};
    ++poly.terms[exponents];
  } while (std::next_permutation(word.begin(), word.end()));
  return poly;
}

bool equidistribution_check(const std::vector<GeneralizedPattern>& members,
                            int n, int n_limit) {
  if (members.empty()) return true;
  const auto reference = distribution(members.front(), n, n_limit);
  for (size_t m = 1; m < members.size(); ++m)
    if (distribution(members[m], n, n_limit).counts != reference.counts)
      return false;
  return true;
}

}  // namespace vincular
