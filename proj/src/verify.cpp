#include "vincular/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "vincular/enumerate.hpp"
#include "vincular/recursions.hpp"
#include "vincular/series.hpp"

namespace vincular {

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name),
                    ok ? CheckStatus::pass : CheckStatus::fail,
                    std::move(detail)});
}

void VerificationReport::add_skip(std::string name, std::string reason) {
  checks.push_back({std::move(name), CheckStatus::skip, std::move(reason)});
}

void VerificationReport::merge(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckResult& c) { return c.status == CheckStatus::pass; }));
}

int VerificationReport::failed() const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckResult& c) { return c.status == CheckStatus::fail; }));
}

int VerificationReport::skipped() const {
  return static_cast<int>(std::count_if(
      checks.begin(), checks.end(),
      [](const CheckResult& c) { return c.status == CheckStatus::skip; }));
}

namespace {

std::vector<std::vector<BigCount>> make_grid(
    const std::vector<std::vector<long>>& values) {
  std::vector<std::vector<BigCount>> grid;
  for (const auto& row : values) {
    std::vector<BigCount> out(7, 0);
    for (size_t r = 0; r < row.size(); ++r) out[r] = row[r];
    grid.push_back(std::move(out));
  }
  return grid;
}

}  // namespace

const std::vector<std::vector<BigCount>>& reference_grid_12d3() {
  static const auto grid = make_grid({
      {1},
      {1},
      {2},
      {5, 1},
      {15, 7, 1, 1},
      {52, 39, 13, 12, 2, 1, 1},
      {203, 211, 112, 103, 41, 24, 17},
      {877, 1168, 843, 811, 492, 337, 238},
      {4140, 6728, 6089, 6273, 4851, 3798, 2956},
      {21147, 40561, 43887, 48806, 44291, 38795, 33343},
      {115975, 256297, 321357, 386041, 394154, 379611, 355182},
  });
  return grid;
}

const std::vector<std::vector<BigCount>>& reference_grid_23d1() {
  static const auto grid = make_grid({
      {1},
      {1},
      {2},
      {5, 1},
      {15, 6, 3},
      {52, 32, 23, 10, 3},
      {203, 171, 152, 98, 62, 22, 11},
      {877, 944, 984, 791, 624, 392, 240},
      {4140, 5444, 6460, 6082, 5513, 4302, 3328},
      {21147, 32919, 43626, 46508, 46880, 41979, 36774},
      {115975, 208816, 304939, 360376, 396545, 393476, 377610},
  });
  return grid;
}

const std::vector<std::vector<BigCount>>& reference_grid_2d13() {
  static const auto grid = make_grid({
      {1},
      {1},
      {2},
      {5, 1},
      {14, 8, 2},
      {42, 45, 25, 7, 1},
      {132, 220, 198, 112, 44, 12, 2},
      {429, 1001, 1274, 1092, 700, 352, 140},
      {1430, 4368, 7280, 8400, 7460, 5392, 3262},
      {4862, 18564, 38556, 56100, 63648, 59670, 47802},
      {16796, 77520, 193800, 341088, 470934, 541044, 535990},
  });
  return grid;
}

const std::vector<std::string>& class1_patterns() {
  static const std::vector<std::string> patterns{"1-23", "3-21", "12-3", "32-1"};
  return patterns;
}

const std::vector<std::string>& class2_patterns() {
  static const std::vector<std::string> patterns{"1-32", "3-12", "21-3", "23-1"};
  return patterns;
}

const std::vector<std::string>& class3_patterns() {
  static const std::vector<std::string> patterns{"2-13", "2-31", "13-2", "31-2"};
  return patterns;
}

namespace {

std::string grid_mismatch(int n, int r, const BigCount& got,
                          const BigCount& want) {
  std::ostringstream out;
  out << "first mismatch at n=" << n << ", r=" << r << ": got " << got.get_str()
      << ", expected " << want.get_str();
  return out.str();
}

// compare a produced (r, n) accessor against a reference grid
template <typename Lookup>
bool matches_grid(const std::vector<std::vector<BigCount>>& grid, int n_max,
                  int r_max, Lookup&& lookup, std::string* detail) {
  for (int n = 0; n <= n_max; ++n)
    for (int r = 0; r <= r_max; ++r) {
      const BigCount got = lookup(r, n);
      const BigCount& want = grid[static_cast<size_t>(n)][static_cast<size_t>(r)];
      if (got != want) {
        *detail = grid_mismatch(n, r, got, want);
        return false;
      }
    }
  return true;
}

// brute-force distributions for all n <= n_max, padded to r_max+1 columns
std::vector<std::vector<BigCount>> brute_grid(const std::string& pattern_text,
                                              int n_max, int r_max) {
  const auto pattern = GeneralizedPattern::parse(pattern_text);
  std::vector<std::vector<BigCount>> grid;
  for (int n = 0; n <= n_max; ++n) {
    const auto row = distribution(pattern, n, n_max);
    std::vector<BigCount> padded(static_cast<size_t>(r_max) + 1, 0);
    for (size_t r = 0; r < row.counts.size() && r <= static_cast<size_t>(r_max);
         ++r)
      padded[r] = row.counts[r];
    grid.push_back(std::move(padded));
  }
  return grid;
}

}  // namespace

VerificationReport verify_tables(const VerifyBudget& budget) {
  VerificationReport report;
  std::string detail;

  {
    const auto table = dp_u(6, 10, /*keep_cells=*/false);
    const bool ok = matches_grid(
        reference_grid_12d3(), 10, 6,
        [&](int r, int n) { return table.total(r, n); }, &detail);
    report.add("dp route reproduces the 12-3 grid (n<=10, r<=6)", ok, detail);
  }
  {
    const auto table = dp_v(6, 10, /*keep_cells=*/false);
    const bool ok = matches_grid(
        reference_grid_23d1(), 10, 6,
        [&](int r, int n) { return table.total(r, n); }, &detail);
    report.add("dp route reproduces the 23-1 grid (n<=10, r<=6)", ok, detail);
  }
  {
    const auto cf = eval_stieltjes(cf_2d13_spec(10), 10);
    const bool ok = matches_grid(
        reference_grid_2d13(), 10, 6,
        [&](int r, int n) { return cf.p_coefficient(n, r); }, &detail);
    report.add("continued-fraction route reproduces the 2-13 grid (n<=10, r<=6)",
               ok, detail);
  }

  const int n_brute = std::min(budget.max_n_brute, 10);
  const struct {
    const char* pattern;
    const std::vector<std::vector<BigCount>>& grid;
  } families[] = {{"12-3", reference_grid_12d3()},
                  {"23-1", reference_grid_23d1()},
                  {"2-13", reference_grid_2d13()}};
  for (const auto& family : families) {
    const auto grid = brute_grid(family.pattern, n_brute, 6);
    const bool ok = matches_grid(
        family.grid, n_brute, 6,
        [&](int r, int n) {
          return grid[static_cast<size_t>(n)][static_cast<size_t>(r)];
        },
        &detail);
    report.add(std::string("brute force matches the ") + family.pattern +
                   " grid (n<=" + std::to_string(n_brute) + ")",
               ok, detail);
  }

  for (const auto& family : families) {
    const auto pattern = GeneralizedPattern::parse(family.pattern);
    bool ok = true;
    for (int n = 0; n <= n_brute && ok; ++n) {
      const auto row = distribution(pattern, n, n_brute);
      BigCount sum = 0;
      for (const auto& count : row.counts) sum += count;
      if (sum != factorial(n)) {
        detail = "row n=" + std::to_string(n) + " sums to " + sum.get_str();
        ok = false;
      }
    }
    report.add(std::string("distribution rows for ") + family.pattern +
                   " sum to n! (n<=" + std::to_string(n_brute) + ")",
               ok, ok ? "" : detail);
  }

  {
    const auto table_u = dp_u(0, 25, false);
    const auto table_v = dp_v(0, 25, false);
    bool ok = true;
    for (int n = 0; n <= 25 && ok; ++n)
      if (table_u.total(0, n) != bell(n) || table_v.total(0, n) != bell(n)) {
        detail = "avoidance count differs from the Bell number at n=" +
                 std::to_string(n);
        ok = false;
      }
    report.add("dp avoidance columns equal Bell numbers (n<=25)", ok,
               ok ? "" : detail);
  }
  {
    const auto cf = eval_stieltjes(cf_2d13_spec(12), 12);
    bool ok = true;
    for (int n = 0; n <= 12 && ok; ++n)
      if (cf.p_coefficient(n, 0) != catalan(n)) {
        detail = "2-13 avoidance differs from the Catalan number at n=" +
                 std::to_string(n);
        ok = false;
      }
    report.add("continued-fraction avoidance column equals Catalan numbers "
               "(n<=12)",
               ok, ok ? "" : detail);
  }
  return report;
}

VerificationReport verify_lemmas(const VerifyBudget& budget) {
  VerificationReport report;
  std::string detail;
  const int n_cells = 12;
  const auto table_u = dp_u(6, 25);
  const auto table_v = dp_v(6, 25);

  {
    bool ok = true;
    for (int n = 3; n <= n_cells && ok; ++n)
      for (int i = 1; i <= n - 2 && ok; ++i)
        if (boundary_u0(n, i, table_u) != table_u.cell(0, n, i)) {
          detail = "n=" + std::to_string(n) + ", i=" + std::to_string(i);
          ok = false;
        }
    report.add("12-3 avoidance boundary formula matches dp cells (n<=12)", ok,
               ok ? "" : detail);
  }
  {
    bool ok = true;
    for (int n = 3; n <= n_cells && ok; ++n)
      for (int i = 1; i <= n - 2 && ok; ++i)
        if (boundary_u1(n, i, table_u) != table_u.cell(1, n, i)) {
          detail = "n=" + std::to_string(n) + ", i=" + std::to_string(i);
          ok = false;
        }
    report.add("12-3 single-occurrence boundary formula matches dp cells "
               "(n<=12)",
               ok, ok ? "" : detail);
  }
  {
    bool ok = true;
    for (int n = 3; n <= n_cells && ok; ++n)
      for (int i = 2; i <= n - 1 && ok; ++i)
        if (boundary_v0(n, i, table_v) != table_v.cell(0, n, i)) {
          detail = "n=" + std::to_string(n) + ", i=" + std::to_string(i);
          ok = false;
        }
    report.add("23-1 avoidance boundary formula matches dp cells (n<=12)", ok,
               ok ? "" : detail);
  }
  {
    bool ok = true;
    for (int n = 3; n <= n_cells && ok; ++n)
      for (int i = 2; i <= n - 1 && ok; ++i)
        if (boundary_v1(n, i, table_v) != table_v.cell(1, n, i)) {
          detail = "n=" + std::to_string(n) + ", i=" + std::to_string(i);
          ok = false;
        }
    report.add("23-1 single-occurrence boundary formula matches dp cells "
               "(n<=12)",
               ok, ok ? "" : detail);
  }

  {
    const auto u1 = recurrence_u1(25);
    bool ok = true;
    for (int n = 0; n <= 25 && ok; ++n)
      if (u1.at(n) != table_u.total(1, n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add("12-3 first-occurrence recurrence matches dp (n<=25)", ok,
               ok ? "" : detail);
  }
  {
    const auto v1 = recurrence_v1(25);
    bool ok = true;
    for (int n = 0; n <= 25 && ok; ++n)
      if (v1.at(n) != table_v.total(1, n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add("23-1 first-occurrence recurrence matches dp (n<=25)", ok,
               ok ? "" : detail);
  }
  {
    const SequenceRow u0{"u0", table_u.row_totals(0)};
    const SequenceRow u1{"u1", table_u.row_totals(1)};
    const auto u2 = recurrence_u2(20, u0, u1);
    bool ok = true;
    for (int n = 0; n <= 20 && ok; ++n)
      if (u2.at(n) != table_u.total(2, n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add("12-3 second-occurrence recurrence matches dp (n<=20)", ok,
               ok ? "" : detail);
  }
  {
    const SequenceRow v0{"v0", table_v.row_totals(0)};
    const SequenceRow v1{"v1", table_v.row_totals(1)};
    const auto v2 = recurrence_v2(20, v0, v1);
    bool ok = true;
    for (int n = 0; n <= 20 && ok; ++n)
      if (v2.at(n) != table_v.total(2, n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add("23-1 second-occurrence recurrence matches dp (n<=20)", ok,
               ok ? "" : detail);
  }

  // dp row totals against brute force, and the row-total identity over cells
  for (const auto& [pattern_text, table] :
       {std::pair<const char*, const PrefixCountTable&>{"12-3", table_u},
        std::pair<const char*, const PrefixCountTable&>{"23-1", table_v}}) {
    const auto pattern = GeneralizedPattern::parse(pattern_text);
    bool ok = true;
    for (int n = 0; n <= budget.max_n_brute && ok; ++n) {
      const auto row = distribution(pattern, n, budget.max_n_brute);
      for (int r = 0; r <= 6 && ok; ++r)
        if (table.total(r, n) != row.at(r)) {
          detail = "n=" + std::to_string(n) + ", r=" + std::to_string(r);
          ok = false;
        }
    }
    report.add(std::string("dp row totals for ") + pattern_text +
                   " match brute force (n<=" +
                   std::to_string(budget.max_n_brute) + ", r<=6)",
               ok, ok ? "" : detail);
  }
  for (const auto& [label, table] :
       {std::pair<const char*, const PrefixCountTable&>{"12-3", table_u},
        std::pair<const char*, const PrefixCountTable&>{"23-1", table_v}}) {
    bool ok = true;
    for (int r = 0; r <= table.r_max() && ok; ++r)
      for (int n = 1; n <= n_cells && ok; ++n) {
        BigCount sum = 0;
        for (int i = 1; i <= n; ++i) sum += table.cell(r, n, i);
        if (sum != table.total(r, n)) {
          detail = "r=" + std::to_string(r) + ", n=" + std::to_string(n);
          ok = false;
        }
      }
    report.add(std::string("prefix cells for ") + label +
                   " sum to row totals (n<=12)",
               ok, ok ? "" : detail);
  }
  return report;
}

namespace {

std::string residual_detail(const TruncatedSeries& residual) {
  const int k = residual.first_nonzero();
  if (k < 0) return "";
  return "first nonzero residual at order " + std::to_string(k) +
         " (coefficient " + residual.coeff(k).get_str() + ")";
}

}  // namespace

VerificationReport verify_functional_eqs(const VerifyBudget& budget) {
  VerificationReport report;
  const int order = budget.order;
  const auto table_u = dp_u(2, order, /*keep_cells=*/false);
  const auto table_v = dp_v(2, order, /*keep_cells=*/false);
  const std::map<std::string, TruncatedSeries> inputs_u{
      {"U0", TruncatedSeries(order, table_u.row_totals(0))},
      {"U1", TruncatedSeries(order, table_u.row_totals(1))},
      {"U2", TruncatedSeries(order, table_u.row_totals(2))}};
  const std::map<std::string, TruncatedSeries> inputs_v{
      {"V0", TruncatedSeries(order, table_v.row_totals(0))},
      {"V1", TruncatedSeries(order, table_v.row_totals(1))},
      {"V2", TruncatedSeries(order, table_v.row_totals(2))}};

  const struct {
    FunctionalEq which;
    const char* name;
    const std::map<std::string, TruncatedSeries>& inputs;
  } equations[] = {
      {FunctionalEq::U1, "12-3 first-occurrence functional equation", inputs_u},
      {FunctionalEq::U2, "12-3 second-occurrence functional equation", inputs_u},
      {FunctionalEq::V1, "23-1 first-occurrence functional equation", inputs_v},
      {FunctionalEq::V2, "23-1 second-occurrence functional equation", inputs_v},
  };
  for (const auto& eq : equations) {
    const auto residual = functional_eq_residual(eq.which, eq.inputs, order);
    report.add(std::string(eq.name) + " has zero residual (order " +
                   std::to_string(order) + ")",
               residual.is_zero(), residual_detail(residual));
  }

  {
    // fixed point of the Bell series: U_0 = 1 + x/(1-x) U_0(x/(1-x))
    const int fp_order = std::max(order, 20);
    const auto u0 = bell_ogf(fp_order);
    const auto rhs = TruncatedSeries::monomial(fp_order, 0) +
                     TruncatedSeries::monomial(fp_order, 1) *
                         (TruncatedSeries::monomial(fp_order, 0) -
                          TruncatedSeries::monomial(fp_order, 1))
                             .invert_unit() *
                         u0.compose_x_over_1mx();
    const auto residual = u0 - rhs;
    report.add("Bell series satisfies its substitution fixed point (order " +
                   std::to_string(fp_order) + ")",
               residual.is_zero(), residual_detail(residual));
  }

  {
    // formula route against the defining double sum, randomized
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coefficient(-9, 9);
    const int property_order = 15;
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      std::vector<BigCount> coeffs;
      for (int k = 0; k <= property_order; ++k)
        coeffs.emplace_back(coefficient(rng));
      const TruncatedSeries a(property_order, coeffs);
      for (int d = 0; d <= 3 && ok; ++d) {
        const auto transformed = binomial_transform(a, d);
        for (int n = 0; n <= transformed.order() && ok; ++n) {
          BigCount want = 0;
          for (int j = 0; j + d <= property_order && j <= n; ++j)
            want += binomial(n, j) * a.coeff(j + d);
          if (transformed.coeff(n) != want) {
            detail = "trial " + std::to_string(trial) + ", d=" +
                     std::to_string(d) + ", n=" + std::to_string(n);
            ok = false;
          }
        }
      }
    }
    report.add(
        "binomial transform equals the double-sum definition "
        "(20 random series, order 15, d<=3)",
        ok, detail);
  }
  return report;
}

VerificationReport verify_closed_forms(const VerifyBudget& budget) {
  VerificationReport report;
  std::string detail;

  {
    const auto series = bell_ogf(20);
    bool ok = true;
    for (int n = 0; n <= 20 && ok; ++n)
      if (series.coeff(n) != bell(n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add("Bell series coefficients equal Bell numbers (order 20)", ok,
               ok ? "" : detail);
  }
  {
    const auto table_u = dp_u(1, 15, false);
    const auto series = u1_closed_form(15);
    bool ok = true;
    for (int n = 0; n <= 15 && ok; ++n)
      if (series.coeff(n) != table_u.total(1, n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add("12-3 first-occurrence series matches dp (n<=15)", ok,
               ok ? "" : detail);
  }
  {
    const auto table_v = dp_v(1, 15, false);
    const auto series = v1_closed_form(15);
    bool ok = true;
    for (int n = 0; n <= 15 && ok; ++n)
      if (series.coeff(n) != table_v.total(1, n)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add("23-1 first-occurrence series matches dp (n<=15)", ok,
               ok ? "" : detail);
  }
  {
    const auto cf = eval_stieltjes(cf_2d13_spec(12), 12);
    bool ok = true;
    for (int r = 0; r <= 3 && ok; ++r)
      for (int n = 0; n <= 12 && ok; ++n)
        if (w_closed_form(r, n) != cf.p_coefficient(n, r)) {
          detail = "r=" + std::to_string(r) + ", n=" + std::to_string(n);
          ok = false;
        }
    report.add("2-13 closed forms r<=3 match the continued fraction (n<=12)",
               ok, ok ? "" : detail);
  }
  {
    const int order = budget.order;
    const auto shallow = eval_stieltjes(cf_2d13_levels(order + 1), order);
    const auto deep = eval_stieltjes(cf_2d13_levels(order + 3), order);
    report.add("continued-fraction evaluation is depth-stable (order " +
                   std::to_string(order) + ")",
               shallow == deep, "");
  }
  {
    bool ok = true;
    for (int n = 0; n <= budget.max_n_joint && ok; ++n) {
      const auto cf = eval_stieltjes(cf_csz_spec(n), n);
      const auto brute = joint_stats(n, budget.max_n_joint);
      if (cf.coeff(n) != brute.terms) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    }
    report.add("joint-statistic continued fraction matches enumeration (n<=" +
                   std::to_string(budget.max_n_joint) + ")",
               ok, ok ? "" : detail);
  }
  return report;
}

VerificationReport verify_identities(const VerifyBudget& budget) {
  VerificationReport report;
  std::string detail;
  const int n_max = std::min(8, budget.max_n_brute);
  const auto pat_123 = GeneralizedPattern::parse("1-2-3");
  const auto pat_213 = GeneralizedPattern::parse("2-1-3");
  const auto pat_132 = GeneralizedPattern::parse("1-3-2");
  const auto pat_2d13 = GeneralizedPattern::parse("2-13");

  std::vector<BigCount> s1_123, s1_213, s1_132, s1_2d13;
  for (int n = 0; n <= n_max; ++n) {
    s1_123.push_back(distribution(pat_123, n, n_max).at(1));
    s1_213.push_back(distribution(pat_213, n, n_max).at(1));
    s1_132.push_back(distribution(pat_132, n, n_max).at(1));
    s1_2d13.push_back(distribution(pat_2d13, n, n_max).at(1));
  }

  {
    bool ok = true;
    for (int n = 3; n <= n_max && ok; ++n)
      if (n * s1_123[static_cast<size_t>(n)] !=
          3 * s1_2d13[static_cast<size_t>(n)]) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add("n * s1(1-2-3) = 3 * s1(2-13) for 3<=n<=" + std::to_string(n_max),
               ok, ok ? "" : detail);
  }
  {
    bool ok = true;
    for (int n = 3; n <= n_max && ok; ++n) {
      const BigCount lhs = BigCount(n + 3) * (n + 2) * (n + 1) *
                           s1_2d13[static_cast<size_t>(n)];
      const BigCount rhs = BigCount(2) * n * (2 * n - 1) * (2 * n - 2) *
                           s1_213[static_cast<size_t>(n)];
      if (lhs != rhs) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    }
    report.add("(n+3)(n+2)(n+1) s1(2-13) = 2n(2n-1)(2n-2) s1(2-1-3) for 3<=n<=" +
                   std::to_string(n_max),
               ok, ok ? "" : detail);
  }
  {
    // closed form for one occurrence of 1-2-3: (3/n) C(2n, n-3)
    bool ok = true;
    for (int n = 1; n <= n_max && ok; ++n) {
      const BigCount numerator = 3 * binomial(2L * n, n - 3L);
      if (BigCount(n) * s1_123[static_cast<size_t>(n)] != numerator) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    }
    report.add("single-occurrence closed form for 1-2-3 matches brute force "
               "(n<=" + std::to_string(n_max) + ")",
               ok, ok ? "" : detail);
  }
  {
    // closed form for one occurrence of 1-3-2: C(2n-3, n-3)
    bool ok = true;
    for (int n = 0; n <= n_max && ok; ++n)
      if (s1_132[static_cast<size_t>(n)] != binomial(2L * n - 3, n - 3L)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add("single-occurrence closed form for 1-3-2 matches brute force "
               "(n<=" + std::to_string(n_max) + ")",
               ok, ok ? "" : detail);
  }
  {
    const bool spot = s1_123[5] == 27 && s1_2d13[5] == 45 && s1_213[5] == 21 &&
                      5 * s1_123[5] == 3 * s1_2d13[5] &&
                      BigCount(8 * 7 * 6) * s1_2d13[5] ==
                          BigCount(2 * 5 * 9 * 8) * s1_213[5];
    report.add("n=5 spot values: 5*27 = 3*45 and 336*45 = 720*21", spot, "");
  }
  return report;
}

VerificationReport verify_equidistribution(const VerifyBudget& budget) {
  VerificationReport report;
  std::string detail;
  const int n_max = std::min(7, budget.max_n_brute);

  const struct {
    const char* label;
    const std::vector<std::string>& members;
  } classes[] = {{"12-3 class", class1_patterns()},
                 {"23-1 class", class2_patterns()},
                 {"2-13 class", class3_patterns()}};
  for (const auto& cls : classes) {
    std::vector<GeneralizedPattern> patterns;
    for (const auto& text : cls.members)
      patterns.push_back(GeneralizedPattern::parse(text));
    bool ok = true;
    for (int n = 0; n <= n_max && ok; ++n)
      if (!equidistribution_check(patterns, n, n_max)) {
        detail = "n=" + std::to_string(n);
        ok = false;
      }
    report.add(std::string("all members of the ") + cls.label +
                   " share one distribution (n<=" + std::to_string(n_max) + ")",
               ok, ok ? "" : detail);
  }

  {
    bool ok = true;
    for (const auto* patterns : {&class1_patterns(), &class2_patterns()})
      for (const auto& text : *patterns) {
        const auto pattern = GeneralizedPattern::parse(text);
        for (int n = 0; n <= n_max && ok; ++n)
          if (distribution(pattern, n, n_max).at(0) != bell(n)) {
            detail = text + " at n=" + std::to_string(n);
            ok = false;
          }
      }
    report.add("all eight 12-3/23-1 class members have Bell-number avoiders "
               "(n<=" + std::to_string(n_max) + ")",
               ok, ok ? "" : detail);
  }
  {
    bool ok = true;
    for (const auto& text : class3_patterns()) {
      const auto pattern = GeneralizedPattern::parse(text);
      for (int n = 0; n <= n_max && ok; ++n)
        if (distribution(pattern, n, n_max).at(0) != catalan(n)) {
          detail = text + " at n=" + std::to_string(n);
          ok = false;
        }
    }
    report.add("all four 2-13 class members have Catalan-number avoiders "
               "(n<=" + std::to_string(n_max) + ")",
               ok, ok ? "" : detail);
  }
  return report;
}

VerificationReport verify_all(const VerifyBudget& budget) {
  VerificationReport report;
  report.merge(verify_tables(budget));
  report.merge(verify_lemmas(budget));
  report.merge(verify_functional_eqs(budget));
  report.merge(verify_closed_forms(budget));
  report.merge(verify_identities(budget));
  report.merge(verify_equidistribution(budget));
  return report;
}

}  // namespace vincular
