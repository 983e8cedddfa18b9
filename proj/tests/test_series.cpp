#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "vincular/combinat.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/recursions.hpp"
#include "vincular/series.hpp"

using namespace vincular;

namespace {

std::vector<BigCount> big(std::vector<long> values) {
  return {values.begin(), values.end()};
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("arithmetic and the minimum-order rule") {
  const TruncatedSeries one = TruncatedSeries::monomial(5, 0);
  const TruncatedSeries x = TruncatedSeries::monomial(5, 1);
  CHECK((one + x) * (one - x) == TruncatedSeries(5, big({1, 0, -1})));
  CHECK((x * TruncatedSeries::monomial(3, 2)).order() == 3);
  CHECK(TruncatedSeries(4).is_zero());
  CHECK(TruncatedSeries(4).first_nonzero() == -1);
  CHECK(x.first_nonzero() == 1);
  CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
  CHECK_THROWS_AS(x.truncated(9), std::invalid_argument);
  CHECK(x.truncated(1) == TruncatedSeries(1, big({0, 1})));
}

TEST_CASE("unit inversion") {
  const TruncatedSeries geom =
      TruncatedSeries(6, big({1, -1})).invert_unit();  // 1/(1-x)
  CHECK(geom == TruncatedSeries(6, big({1, 1, 1, 1, 1, 1, 1})));
  const TruncatedSeries neg = TruncatedSeries(4, big({-1, 1})).invert_unit();
  CHECK(neg * TruncatedSeries(4, big({-1, 1})) ==
        TruncatedSeries::monomial(4, 0));
  CHECK_THROWS_AS(TruncatedSeries::monomial(5, 0, 2).invert_unit(),
                  std::domain_error);
}

TEST_CASE("substitution of x/(1-x)") {
  CHECK(TruncatedSeries::monomial(5, 1).compose_x_over_1mx() ==
        TruncatedSeries(5, big({0, 1, 1, 1, 1, 1})));
  // x^2/(1-x)^2 = x^2 + 2x^3 + 3x^4 + ...
  CHECK(TruncatedSeries::monomial(5, 2).compose_x_over_1mx() ==
        TruncatedSeries(5, big({0, 0, 1, 2, 3, 4})));
  // constants pass through
  CHECK(TruncatedSeries::monomial(3, 0, 7).compose_x_over_1mx() ==
        TruncatedSeries::monomial(3, 0, 7));
}

TEST_CASE("binomial transform against small closed forms") {
  const TruncatedSeries ones(6, big({1, 1, 1, 1, 1, 1, 1}));
  CHECK(binomial_transform(ones, 0) ==
        TruncatedSeries(6, big({1, 2, 4, 8, 16, 32, 64})));
  CHECK(binomial_transform(ones, 1) ==
        TruncatedSeries(5, big({1, 2, 4, 8, 16, 32})));

  std::vector<BigCount> bells;
  for (int n = 0; n <= 8; ++n) bells.push_back(bell(n));
  const TruncatedSeries bell_series(8, bells);
  const auto shifted = binomial_transform(bell_series, 0);
  for (int n = 0; n <= 8; ++n) CHECK(shifted.coeff(n) == bell(n + 1));

  CHECK_THROWS_AS(binomial_transform(ones, -1), std::invalid_argument);
  CHECK_THROWS_AS(binomial_transform(ones, 7), std::invalid_argument);
}

TEST_CASE("binomial transform matches its defining double sum") {
  const TruncatedSeries a(10, big({3, -1, 4, 1, -5, 9, 2, -6, 5, 3, 5}));
  for (int d = 0; d <= 3; ++d) {
    const auto b = binomial_transform(a, d);
    CHECK(b.order() == 10 - d);
    for (int n = 0; n <= b.order(); ++n) {
      BigCount want = 0;
      for (int j = 0; j <= n && j + d <= 10; ++j)
        want += binomial(n, j) * a.coeff(j + d);
      CHECK(b.coeff(n) == want);
    }
  }
}

TEST_CASE("Bell generating function") {
  const auto series = bell_ogf(12);
  for (int n = 0; n <= 12; ++n) CHECK(series.coeff(n) == bell(n));
}

TEST_CASE("first-occurrence closed forms") {
  CHECK(u1_closed_form(8).coeffs() ==
        big({0, 0, 0, 1, 7, 39, 211, 1168, 6728}));
  CHECK(v1_closed_form(8).coeffs() ==
        big({0, 0, 0, 1, 6, 32, 171, 944, 5444}));
}

TEST_CASE("2-13 closed forms") {
  for (int n = 0; n <= 10; ++n) CHECK(w_closed_form(0, n) == catalan(n));
  CHECK(w_closed_form(1, 4) == 8);
  CHECK(w_closed_form(1, 10) == 77520);
  CHECK(w_closed_form(2, 5) == 25);
  CHECK(w_closed_form(2, 10) == 193800);
  CHECK(w_closed_form(3, 6) == 112);
  CHECK(w_closed_form(3, 10) == 341088);
  CHECK(w_closed_form(2, 2) == 0);
  CHECK_THROWS_AS(w_closed_form(4, 5), std::invalid_argument);
  CHECK_THROWS_AS(w_closed_form(1, -1), std::invalid_argument);
}

TEST_CASE("multivariate arithmetic") {
  MultiSeries a = MultiSeries::one(4);
  a.coeff_mut(1)[{1, 0, 0, 0}] = 2;  // 1 + 2x t
  MultiSeries b = MultiSeries::one(4);
  b.coeff_mut(2)[{0, 1, 0, 0}] = 1;  // 1 + y t^2
  const auto product = a * b;
  CHECK(product.coeff(0) == AuxPoly{{{0, 0, 0, 0}, 1}});
  CHECK(product.coeff(1) == AuxPoly{{{1, 0, 0, 0}, 2}});
  CHECK(product.coeff(2) == AuxPoly{{{0, 1, 0, 0}, 1}});
  CHECK(product.coeff(3) == AuxPoly{{{1, 1, 0, 0}, 2}});
  CHECK((product - product).coeff(3).empty());

  const auto inverse = a.invert_unit();
  CHECK((a * inverse) == MultiSeries::one(4));

  MultiSeries bad(3);
  bad.coeff_mut(0)[{0, 0, 0, 0}] = 2;
  CHECK_THROWS_AS(bad.invert_unit(), std::domain_error);
}

TEST_CASE("occurrence continued fraction reproduces enumeration") {
  const auto series = eval_stieltjes(cf_2d13_spec(7), 7);
  const auto pattern = GeneralizedPattern::parse("2-13");
  for (int n = 0; n <= 7; ++n) {
    const auto row = distribution(pattern, n);
    const int top = series.max_p_exponent(n);
    for (int r = 0; r <= top; ++r)
      CHECK(series.p_coefficient(n, r) == row.at(r));
    CHECK(static_cast<size_t>(top) + 1 == row.counts.size());
  }
  CHECK(series.max_p_exponent(5) == 4);
  CHECK(series.max_p_exponent(6) == 6);
}

TEST_CASE("continued fraction at p = 1 counts all permutations") {
  const auto plain = eval_stieltjes(cf_2d13_spec(8), 8).at_ones();
  const auto joint = eval_stieltjes(cf_csz_spec(7), 7).at_ones();
  for (int n = 0; n <= 8; ++n) CHECK(plain.coeff(n) == factorial(n));
  for (int n = 0; n <= 7; ++n) CHECK(joint.coeff(n) == factorial(n));
}

TEST_CASE("joint-statistic continued fraction matches enumeration") {
  const auto series = eval_stieltjes(cf_csz_spec(6), 6);
  for (int n = 0; n <= 6; ++n)
    CHECK(series.coeff(n) == joint_stats(n).terms);
}

TEST_CASE("continued fraction depth requirements") {
  CHECK_THROWS_AS(eval_stieltjes(cf_2d13_levels(5), 6), std::invalid_argument);
  ContinuedFractionSpec inconsistent = cf_2d13_levels(6);
  inconsistent.depth = 7;
  CHECK_THROWS_AS(eval_stieltjes(inconsistent, 4), std::invalid_argument);
  // deeper tails do not change the truncation
  const auto shallow = eval_stieltjes(cf_2d13_levels(9), 8);
  const auto deep = eval_stieltjes(cf_2d13_levels(12), 8);
  CHECK(shallow == deep);
}

TEST_CASE("functional equations with verified inputs") {
  const int order = 10;
  const auto table_u = dp_u(2, order, false);
  const auto table_v = dp_v(2, order, false);
  const std::map<std::string, TruncatedSeries> inputs_u{
      {"U0", TruncatedSeries(order, table_u.row_totals(0))},
      {"U1", TruncatedSeries(order, table_u.row_totals(1))},
      {"U2", TruncatedSeries(order, table_u.row_totals(2))}};
  const std::map<std::string, TruncatedSeries> inputs_v{
      {"V0", TruncatedSeries(order, table_v.row_totals(0))},
      {"V1", TruncatedSeries(order, table_v.row_totals(1))},
      {"V2", TruncatedSeries(order, table_v.row_totals(2))}};

  CHECK(functional_eq_residual(FunctionalEq::U1, inputs_u, order).is_zero());
  CHECK(functional_eq_residual(FunctionalEq::V1, inputs_v, order).is_zero());
  CHECK(functional_eq_residual(FunctionalEq::V2, inputs_v, order).is_zero());

  // The second-occurrence equation for the 12-3 family, as stated, is
  // inconsistent with the table data its own recurrence reproduces. Pin the
  // residual so the transcription cannot drift toward a silent "fix".
  const auto residual =
      functional_eq_residual(FunctionalEq::U2, inputs_u, 8);
  CHECK(residual.coeffs() ==
        big({0, 0, -2, -10, -37, -128, -458, -1802, -8051}));
}

TEST_CASE("functional equations validate their inputs") {
  const std::map<std::string, TruncatedSeries> empty;
  CHECK_THROWS_AS(functional_eq_residual(FunctionalEq::U1, empty, 4),
                  std::invalid_argument);
  const std::map<std::string, TruncatedSeries> shorter{
      {"V0", TruncatedSeries(3)}, {"V1", TruncatedSeries(3)}};
  CHECK_THROWS_AS(functional_eq_residual(FunctionalEq::V1, shorter, 5),
                  std::invalid_argument);
}

}  // TEST_SUITE
