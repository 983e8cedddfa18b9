#include <stdexcept>

#include "doctest.h"
#include "vincular/combinat.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/recursions.hpp"

using namespace vincular;

TEST_SUITE("recursions") {

TEST_CASE("dp_u pinned totals") {
  const auto table = dp_u(6, 10);
  CHECK(table.total(0, 5) == 52);
  CHECK(table.total(1, 6) == 211);
  CHECK(table.total(2, 6) == 112);
  CHECK(table.total(4, 10) == 394154);
  CHECK(table.total(6, 10) == 355182);
  CHECK(table.total(0, 0) == 1);
  CHECK(table.total(3, 0) == 0);
}

TEST_CASE("dp_v pinned totals") {
  const auto table = dp_v(6, 10);
  CHECK(table.total(0, 5) == 52);
  CHECK(table.total(1, 6) == 171);
  CHECK(table.total(2, 6) == 152);
  CHECK(table.total(5, 10) == 393476);
  CHECK(table.total(6, 10) == 377610);
}

TEST_CASE("dp pinned cells") {
  const auto table_u = dp_u(2, 8);
  CHECK(table_u.cell(0, 5, 2) == 7);
  CHECK(table_u.cell(1, 6, 4) == 47);
  const auto table_v = dp_v(2, 8);
  CHECK(table_v.cell(1, 5, 4) == 5);
}

TEST_CASE("dp cells sum to totals") {
  for (const auto& table : {dp_u(3, 9), dp_v(3, 9)})
    for (int r = 0; r <= 3; ++r)
      for (int n = 1; n <= 9; ++n) {
        BigCount sum = 0;
        for (int i = 1; i <= n; ++i) sum += table.cell(r, n, i);
        CHECK(sum == table.total(r, n));
      }
}

TEST_CASE("dp totals match brute force") {
  const auto table_u = dp_u(10, 7);
  const auto pat_u = GeneralizedPattern::parse("12-3");
  for (int n = 0; n <= 7; ++n) {
    const auto row = distribution(pat_u, n);
    for (int r = 0; r <= 10; ++r) CHECK(table_u.total(r, n) == row.at(r));
  }
  const auto table_v = dp_v(10, 7);
  const auto pat_v = GeneralizedPattern::parse("23-1");
  for (int n = 0; n <= 7; ++n) {
    const auto row = distribution(pat_v, n);
    for (int r = 0; r <= 10; ++r) CHECK(table_v.total(r, n) == row.at(r));
  }
}

TEST_CASE("avoidance rows are Bell numbers") {
  const auto table_u = dp_u(0, 12, false);
  const auto table_v = dp_v(0, 12, false);
  for (int n = 0; n <= 12; ++n) {
    CHECK(table_u.total(0, n) == bell(n));
    CHECK(table_v.total(0, n) == bell(n));
  }
}

TEST_CASE("first-occurrence recurrences match dp") {
  const auto u1 = recurrence_u1(20);
  const auto v1 = recurrence_v1(20);
  const auto table_u = dp_u(1, 20, false);
  const auto table_v = dp_v(1, 20, false);
  for (int n = 0; n <= 20; ++n) {
    CHECK(u1.at(n) == table_u.total(1, n));
    CHECK(v1.at(n) == table_v.total(1, n));
  }
  CHECK(u1.at(10) == 256297);
  CHECK(v1.at(10) == 208816);
}

TEST_CASE("second-occurrence recurrences match dp") {
  const auto table_u = dp_u(2, 16, false);
  const auto table_v = dp_v(2, 16, false);
  const auto u2 = recurrence_u2(16, SequenceRow{"u0", table_u.row_totals(0)},
                                SequenceRow{"u1", table_u.row_totals(1)});
  const auto v2 = recurrence_v2(16, SequenceRow{"v0", table_v.row_totals(0)},
                                SequenceRow{"v1", table_v.row_totals(1)});
  for (int n = 0; n <= 16; ++n) {
    CHECK(u2.at(n) == table_u.total(2, n));
    CHECK(v2.at(n) == table_v.total(2, n));
  }
  CHECK(u2.at(10) == 321357);
  CHECK(v2.at(10) == 304939);
}

TEST_CASE("boundary formulas: pinned values") {
  const auto table_u = dp_u(1, 8);
  const auto table_v = dp_v(1, 8);
  CHECK(boundary_u0(5, 2, table_u) == 7);
  CHECK(boundary_u1(5, 2, table_u) == 8);
  CHECK(boundary_v0(6, 5, table_v) == 37);
  CHECK(boundary_v1(3, 2, table_v) == 1);
}

TEST_CASE("boundary formulas match dp cells") {
  const auto table_u = dp_u(1, 10);
  const auto table_v = dp_v(1, 10);
  for (int n = 3; n <= 10; ++n) {
    for (int i = 1; i <= n - 2; ++i) {
      CHECK(boundary_u0(n, i, table_u) == table_u.cell(0, n, i));
      CHECK(boundary_u1(n, i, table_u) == table_u.cell(1, n, i));
    }
    for (int i = 2; i <= n - 1; ++i) {
      CHECK(boundary_v0(n, i, table_v) == table_v.cell(0, n, i));
      CHECK(boundary_v1(n, i, table_v) == table_v.cell(1, n, i));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(dp_u(-1, 5), std::invalid_argument);
  CHECK_THROWS_AS(dp_u(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(dp_v(2, -3), std::invalid_argument);

  const auto table = dp_u(1, 5, /*keep_cells=*/false);
  CHECK_THROWS_AS(table.cell(0, 3, 1), std::logic_error);
  CHECK_THROWS_AS(table.total(2, 3), std::out_of_range);
  CHECK_THROWS_AS(table.total(0, 6), std::out_of_range);

  const auto table_u = dp_u(1, 6);
  const auto table_v = dp_v(1, 6);
  CHECK_THROWS_AS(boundary_u0(5, 4, table_u), std::out_of_range);
  CHECK_THROWS_AS(boundary_v0(5, 1, table_v), std::out_of_range);
  CHECK_THROWS_AS(boundary_u0(5, 2, table_v), std::invalid_argument);
  CHECK_THROWS_AS(boundary_v0(5, 2, table_u), std::invalid_argument);

  const SequenceRow shorty{"s", {0, 0}};
  CHECK_THROWS_AS(recurrence_u2(5, shorty, shorty), std::invalid_argument);
}

}  // TEST_SUITE
