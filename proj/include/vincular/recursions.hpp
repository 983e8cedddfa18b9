#pragma once

#include <string>
#include <vector>

#include "vincular/combinat.hpp"

namespace vincular {

// The two one-dash pattern families with a first-letter dynamic program:
// Class1 is the 12-3 family, Class2 the 23-1 family.
enum class PatternClass { Class1, Class2 };

// Prefix-conditioned occurrence counts s^r(n; i): permutations of length n
// with exactly r occurrences whose first letter is i. Filled by increasing n
// for all r at once; row totals s^r(n) = sum_i s^r(n; i) are always kept,
// cell planes optionally (they back the boundary-formula checks).
class PrefixCountTable {
 public:
  PatternClass pattern_class() const { return pattern_class_; }
  int r_max() const { return r_max_; }
  int n_max() const { return n_max_; }
  bool has_cells() const { return !cells_.empty(); }

  // s^r(n), 0 <= r <= r_max, 0 <= n <= n_max (n = 0 counts the empty
  // permutation: 1 at r = 0)
  const BigCount& total(int r, int n) const;
  // s^r(n; i), 1 <= i <= n; requires the table to have kept cells
  const BigCount& cell(int r, int n, int i) const;
  // totals for fixed r, indexed by n = 0..n_max
  std::vector<BigCount> row_totals(int r) const;

 private:
  friend PrefixCountTable dp_u(int, int, bool);
  friend PrefixCountTable dp_v(int, int, bool);

  PatternClass pattern_class_ = PatternClass::Class1;
  int r_max_ = 0;
  int n_max_ = 0;
  // totals_[r][n]
  std::vector<std::vector<BigCount>> totals_;
  // cells_[n][r][i], i = 1..n (index 0 unused); empty when cells not kept
  std::vector<std::vector<std::vector<BigCount>>> cells_;
};

// 12-3 family table. Recurrence on first letters:
//   s^r(n; n-1) = s^r(n; n) = s^r(n-1)
//   s^r(n; i)   = sum_{j=1}^{i-1} s^r(n-1; j)
//               + sum_{j=0}^{n-i-1} s^{r-j}(n-1; n-1-j)     (1 <= i <= n-2)
// with s^0(1; 1) = 1 and negative-r terms reading 0. The second sum is
// maintained incrementally over decreasing i, keeping the fill at
// O(r_max * n^2) big-integer additions.
PrefixCountTable dp_u(int r_max, int n_max, bool keep_cells = true);

// 23-1 family table. Recurrence on first letters:
//   s^r(n; 1) = s^r(n; n) = s^r(n-1)
//   s^r(n; i) = sum_{j=1}^{i-1} s^r(n-1; j)
//             + sum_{j=i}^{n-1} s^{r-i+1}(n-1; j)           (2 <= i <= n-1)
// evaluated with prefix and suffix sums over the previous row.
PrefixCountTable dp_v(int r_max, int n_max, bool keep_cells = true);

// A named integer sequence indexed by n = 0..n_max.
struct SequenceRow {
  std::string label;
  std::vector<BigCount> values;

  const BigCount& at(int n) const { return values.at(static_cast<size_t>(n)); }
};

// First-occurrence count for the 12-3 family by its closed recurrence
//   s1(n+2) = 2 s1(n+1) + sum_{k=0}^{n-1} C(n,k) [s1(k+1) + B_{k+1}],  n >= -1
// with s1(0) = 0; the n = -1 and n = 0 instances (empty sums) force
// s1(1) = s1(2) = 0.
SequenceRow recurrence_u1(int n_max);

// First-occurrence count for the 23-1 family:
//   s1(n+1) = s1(n) + sum_{k=1}^{n-1} [C(n,k) s1(k) + C(n-1,k-1) B_k],  n >= 0
// with s1(0) = 0.
SequenceRow recurrence_v1(int n_max);

// Second-occurrence count for the 12-3 family, taking the r = 0 and r = 1
// rows as inputs:
//   s2(n) = 3 s2(n-1) - s2(n-2) + s1(n-2)
//         + sum_{i=1}^{n-3} C(n-3,i) [s2(n-1-i) + s1(n-1-i)
//                                     + s0(n-1-i) - s0(n-2-i)],       n >= 3
// with s2(0) = s2(1) = s2(2) = 0.
SequenceRow recurrence_u2(int n_max, const SequenceRow& u0,
                          const SequenceRow& u1);

// Second-occurrence count for the 23-1 family:
//   s2(n) = s2(n-1) + sum_{j=0}^{n-2} C(n-2,j) s2(n-1-j)
//         + sum_{j=0}^{n-3} C(n-3,j) [s1(n-1-j) - s1(n-2-j)]
//         + sum_{j=0}^{n-4} C(n-4,j) [s0(n-1-j) - s0(n-2-j) - s0(n-3-j)],
// for n >= 3, with s2(0) = s2(1) = s2(2) = 0.
SequenceRow recurrence_v2(int n_max, const SequenceRow& v0,
                          const SequenceRow& v1);

// Boundary formulas for low-r prefix cells, each returning the closed-form
// value for comparison against the DP cell. Index preconditions are enforced;
// the table must be of the matching class, carry cells, and reach the needed
// r and n.

// 12-3 family: s^0(n; i) = sum_{j=0}^{i-1} C(i-1,j) s^0(n-2-j), 1 <= i <= n-2
BigCount boundary_u0(int n, int i, const PrefixCountTable& table);

// 12-3 family: s^1(n; i) = sum_{j=0}^{i-1} C(i-1,j) s^1(n-2-j) + s^0(n; i)
BigCount boundary_u1(int n, int i, const PrefixCountTable& table);

// 23-1 family: s^0(n; i) = sum_{j=0}^{i-2} C(i-2,j) s^0(n-2-j), 2 <= i <= n-1
BigCount boundary_v0(int n, int i, const PrefixCountTable& table);

// 23-1 family: s^1(n; i) = sum_{j=0}^{i-2} C(i-2,j) s^1(n-2-j)
//                          + s^0(n; i-1) - s^0(n-1; i-1),    2 <= i <= n-1.
// The s^0(*; i-1) references are read from the DP cells (at i = 2 the formula
// reaches the i = 1 column, which only the DP defines).
BigCount boundary_v1(int n, int i, const PrefixCountTable& table);

}  // namespace vincular
