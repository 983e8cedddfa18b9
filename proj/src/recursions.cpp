#include "vincular/recursions.hpp"

#include <stdexcept>
#include <utility>

namespace vincular {

namespace {

using Plane = std::vector<std::vector<BigCount>>;  // [r][i], i index 0 unused

Plane make_plane(int r_max, int n) {
  return Plane(static_cast<size_t>(r_max) + 1,
               std::vector<BigCount>(static_cast<size_t>(n) + 1, 0));
}

void validate_args(const char* op, int r_max, int n_max) {
  if (r_max < 0)
    throw std::invalid_argument(std::string(op) + ": r_max must be >= 0");
  if (n_max < 1)
    throw std::invalid_argument(std::string(op) + ": n_max must be >= 1");
}

void require_class(const char* op, const PrefixCountTable& table,
                   PatternClass cls) {
  if (table.pattern_class() != cls)
    throw std::invalid_argument(std::string(op) +
                                ": table is for the other pattern family");
}

}  // namespace

const BigCount& PrefixCountTable::total(int r, int n) const {
  if (r < 0 || r > r_max_ || n < 0 || n > n_max_)
    throw std::out_of_range("PrefixCountTable::total: (r, n) out of range");
  return totals_[static_cast<size_t>(r)][static_cast<size_t>(n)];
}

const BigCount& PrefixCountTable::cell(int r, int n, int i) const {
  if (!has_cells())
    throw std::logic_error(
        "PrefixCountTable::cell: table was built without cell planes");
  if (r < 0 || r > r_max_ || n < 1 || n > n_max_ || i < 1 || i > n)
    throw std::out_of_range("PrefixCountTable::cell: (r, n, i) out of range");
  return cells_[static_cast<size_t>(n)][static_cast<size_t>(r)]
               [static_cast<size_t>(i)];
}

std::vector<BigCount> PrefixCountTable::row_totals(int r) const {
  if (r < 0 || r > r_max_)
    throw std::out_of_range("PrefixCountTable::row_totals: r out of range");
  return totals_[static_cast<size_t>(r)];
}

PrefixCountTable dp_u(int r_max, int n_max, bool keep_cells) {
  validate_args("dp_u", r_max, n_max);
  const size_t R = static_cast<size_t>(r_max);

  std::vector<std::vector<BigCount>> totals(
      R + 1, std::vector<BigCount>(static_cast<size_t>(n_max) + 1, 0));
  totals[0][0] = 1;  // the empty permutation has zero occurrences

  std::vector<Plane> kept;
  if (keep_cells) kept.resize(static_cast<size_t>(n_max) + 1);

  Plane prev = make_plane(r_max, 1);
  prev[0][1] = 1;  // n = 1: the single permutation, zero occurrences
  for (size_t r = 0; r <= R; ++r) totals[r][1] = prev[r][1];
  if (keep_cells) kept[1] = prev;

  for (int n = 2; n <= n_max; ++n) {
    Plane cur = make_plane(r_max, n);
    for (size_t r = 0; r <= R; ++r) {
      cur[r][static_cast<size_t>(n)] = totals[r][static_cast<size_t>(n) - 1];
      cur[r][static_cast<size_t>(n) - 1] = totals[r][static_cast<size_t>(n) - 1];
    }
    // first sums: prefix over the previous row, ascending i
    for (size_t r = 0; r <= R; ++r) {
      BigCount prefix = 0;  // sum_{j<i} prev[r][j]
      for (int i = 1; i <= n - 2; ++i) {
        cur[r][static_cast<size_t>(i)] = prefix;
        prefix += prev[r][static_cast<size_t>(i)];
      }
    }
    // second sums: B_r(i) = sum_{j=0}^{n-i-1} prev[r-j][n-1-j], maintained
    // incrementally for decreasing i via B_r(i) = B_r(i+1) + prev[r-(n-i-1)][i]
    for (size_t r = 0; r <= R; ++r) {
      BigCount tail = prev[r][static_cast<size_t>(n) - 1];  // B_r(n-1)
      for (int i = n - 2; i >= 1; --i) {
        const int rj = static_cast<int>(r) - (n - i - 1);  // r - j at j = n-i-1
        if (rj >= 0)
          tail += prev[static_cast<size_t>(rj)][static_cast<size_t>(i)];
        cur[r][static_cast<size_t>(i)] += tail;
      }
    }
    for (size_t r = 0; r <= R; ++r) {
      BigCount sum = 0;
      for (int i = 1; i <= n; ++i) sum += cur[r][static_cast<size_t>(i)];
      totals[r][static_cast<size_t>(n)] = std::move(sum);
    }
    if (keep_cells) kept[static_cast<size_t>(n)] = cur;
    prev = std::move(cur);
  }
  PrefixCountTable table;
  table.pattern_class_ = PatternClass::Class1;
  table.r_max_ = r_max;
  table.n_max_ = n_max;
  table.totals_ = std::move(totals);
  table.cells_ = std::move(kept);
  return table;
}

PrefixCountTable dp_v(int r_max, int n_max, bool keep_cells) {
  validate_args("dp_v", r_max, n_max);
  const size_t R = static_cast<size_t>(r_max);

  std::vector<std::vector<BigCount>> totals(
      R + 1, std::vector<BigCount>(static_cast<size_t>(n_max) + 1, 0));
  totals[0][0] = 1;

  std::vector<Plane> kept;
  if (keep_cells) kept.resize(static_cast<size_t>(n_max) + 1);

  Plane prev = make_plane(r_max, 1);
  prev[0][1] = 1;
  for (size_t r = 0; r <= R; ++r) totals[r][1] = prev[r][1];
  if (keep_cells) kept[1] = prev;

  for (int n = 2; n <= n_max; ++n) {
    Plane cur = make_plane(r_max, n);
    // suffix[q][i] = sum_{j=i}^{n-1} prev[q][j]
    Plane suffix = make_plane(r_max, n);
    for (size_t q = 0; q <= R; ++q)
      for (int i = n - 1; i >= 1; --i)
        suffix[q][static_cast<size_t>(i)] =
            suffix[q][static_cast<size_t>(i) + 1] +
            prev[q][static_cast<size_t>(i)];

    for (size_t r = 0; r <= R; ++r) {
      cur[r][1] = totals[r][static_cast<size_t>(n) - 1];
      cur[r][static_cast<size_t>(n)] = totals[r][static_cast<size_t>(n) - 1];
      BigCount prefix = prev[r][1];  // sum_{j<i} prev[r][j], starting at i = 2
      for (int i = 2; i <= n - 1; ++i) {
        cur[r][static_cast<size_t>(i)] = prefix;
        const int rp = static_cast<int>(r) - i + 1;
        if (rp >= 0)
          cur[r][static_cast<size_t>(i)] +=
              suffix[static_cast<size_t>(rp)][static_cast<size_t>(i)];
        prefix += prev[r][static_cast<size_t>(i)];
      }
    }
    for (size_t r = 0; r <= R; ++r) {
      BigCount sum = 0;
      for (int i = 1; i <= n; ++i) sum += cur[r][static_cast<size_t>(i)];
      totals[r][static_cast<size_t>(n)] = std::move(sum);
    }
    if (keep_cells) kept[static_cast<size_t>(n)] = cur;
    prev = std::move(cur);
  }
  PrefixCountTable table;
  table.pattern_class_ = PatternClass::Class2;
  table.r_max_ = r_max;
  table.n_max_ = n_max;
  table.totals_ = std::move(totals);
  table.cells_ = std::move(kept);
  return table;
}

SequenceRow recurrence_u1(int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("recurrence_u1: n_max must be >= 0");
  SequenceRow row{"u1", std::vector<BigCount>(static_cast<size_t>(n_max) + 1, 0)};
  // m = n + 2 runs the recurrence instances n = -1, 0, 1, ...
  for (int m = 1; m <= n_max; ++m) {
    const int n = m - 2;
    BigCount value = 2 * row.values[static_cast<size_t>(m) - 1];
    for (int k = 0; k <= n - 1; ++k)
      value += binomial(n, k) *
               (row.values[static_cast<size_t>(k) + 1] + bell(k + 1));
    row.values[static_cast<size_t>(m)] = std::move(value);
  }
  return row;
}

SequenceRow recurrence_v1(int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("recurrence_v1: n_max must be >= 0");
  SequenceRow row{"v1", std::vector<BigCount>(static_cast<size_t>(n_max) + 1, 0)};
  // m = n + 1 runs the recurrence instances n = 0, 1, ...
  for (int m = 1; m <= n_max; ++m) {
    const int n = m - 1;
    BigCount value = row.values[static_cast<size_t>(n)];
    for (int k = 1; k <= n - 1; ++k)
      value += binomial(n, k) * row.values[static_cast<size_t>(k)] +
               binomial(n - 1, k - 1) * bell(k);
    row.values[static_cast<size_t>(m)] = std::move(value);
  }
  return row;
}

namespace {

void require_inputs(const char* op, int n_max, const SequenceRow& a,
                    const SequenceRow& b) {
  if (static_cast<int>(a.values.size()) <= n_max ||
      static_cast<int>(b.values.size()) <= n_max)
    throw std::invalid_argument(std::string(op) +
                                ": input rows must cover indices up to n_max");
}

}  // namespace

SequenceRow recurrence_u2(int n_max, const SequenceRow& u0,
                          const SequenceRow& u1) {
  if (n_max < 0)
    throw std::invalid_argument("recurrence_u2: n_max must be >= 0");
  require_inputs("recurrence_u2", n_max, u0, u1);
  SequenceRow row{"u2", std::vector<BigCount>(static_cast<size_t>(n_max) + 1, 0)};
  for (int n = 3; n <= n_max; ++n) {
    BigCount value = 3 * row.values[static_cast<size_t>(n) - 1] -
                     row.values[static_cast<size_t>(n) - 2] +
                     u1.at(n - 2);
    for (int i = 1; i <= n - 3; ++i)
      value += binomial(n - 3, i) *
               (row.values[static_cast<size_t>(n - 1 - i)] + u1.at(n - 1 - i) +
                u0.at(n - 1 - i) - u0.at(n - 2 - i));
    row.values[static_cast<size_t>(n)] = std::move(value);
  }
  return row;
}

SequenceRow recurrence_v2(int n_max, const SequenceRow& v0,
                          const SequenceRow& v1) {
  if (n_max < 0)
    throw std::invalid_argument("recurrence_v2: n_max must be >= 0");
  require_inputs("recurrence_v2", n_max, v0, v1);
  SequenceRow row{"v2", std::vector<BigCount>(static_cast<size_t>(n_max) + 1, 0)};
  for (int n = 3; n <= n_max; ++n) {
    BigCount value = row.values[static_cast<size_t>(n) - 1];
    for (int j = 0; j <= n - 2; ++j)
      value += binomial(n - 2, j) * row.values[static_cast<size_t>(n - 1 - j)];
    for (int j = 0; j <= n - 3; ++j)
      value += binomial(n - 3, j) * (v1.at(n - 1 - j) - v1.at(n - 2 - j));
    for (int j = 0; j <= n - 4; ++j)
      value += binomial(n - 4, j) *
               (v0.at(n - 1 - j) - v0.at(n - 2 - j) - v0.at(n - 3 - j));
    row.values[static_cast<size_t>(n)] = std::move(value);
  }
  return row;
}

BigCount boundary_u0(int n, int i, const PrefixCountTable& table) {
  require_class("boundary_u0", table, PatternClass::Class1);
  if (i < 1 || i > n - 2)
    throw std::out_of_range("boundary_u0: requires 1 <= i <= n-2");
  BigCount value = 0;
  for (int j = 0; j <= i - 1; ++j)
    value += binomial(i - 1, j) * table.total(0, n - 2 - j);
  return value;
}

BigCount boundary_u1(int n, int i, const PrefixCountTable& table) {
  require_class("boundary_u1", table, PatternClass::Class1);
  if (i < 1 || i > n - 2)
    throw std::out_of_range("boundary_u1: requires 1 <= i <= n-2");
  BigCount value = 0;
  for (int j = 0; j <= i - 1; ++j)
    value += binomial(i - 1, j) * table.total(1, n - 2 - j);
  return value + table.cell(0, n, i);
}

BigCount boundary_v0(int n, int i, const PrefixCountTable& table) {
  require_class("boundary_v0", table, PatternClass::Class2);
  if (i < 2 || i > n - 1)
    throw std::out_of_range("boundary_v0: requires 2 <= i <= n-1");
  BigCount value = 0;
  for (int j = 0; j <= i - 2; ++j)
    value += binomial(i - 2, j) * table.total(0, n - 2 - j);
  return value;
}

BigCount boundary_v1(int n, int i, const PrefixCountTable& table) {
  require_class("boundary_v1", table, PatternClass::Class2);
  if (i < 2 || i > n - 1)
    throw std::out_of_range("boundary_v1: requires 2 <= i <= n-1");
  BigCount value = 0;
  for (int j = 0; j <= i - 2; ++j)
    value += binomial(i - 2, j) * table.total(1, n - 2 - j);
  return value + table.cell(0, n, i - 1) - table.cell(0, n - 1, i - 1);
}

}  // namespace vincular
