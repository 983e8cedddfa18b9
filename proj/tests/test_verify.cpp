#include <string>

#include "doctest.h"
#include "vincular/verify.hpp"

using namespace vincular;

TEST_SUITE("verify") {

TEST_CASE("report bookkeeping") {
  VerificationReport report;
  report.add("alpha", true);
  report.add("beta", false, "first mismatch at n=2");
  report.add_skip("gamma", "out of budget");
  CHECK(report.passed() == 1);
  CHECK(report.failed() == 1);
  CHECK(report.skipped() == 1);
  CHECK_FALSE(report.ok());

  VerificationReport other;
  other.add("delta", true);
  report.merge(other);
  CHECK(report.passed() == 2);
  CHECK(report.checks.size() == 4);

  VerificationReport clean;
  clean.add("epsilon", true);
  CHECK(clean.ok());
}

TEST_CASE("reference grids are 11 by 7") {
  for (const auto* grid : {&reference_grid_12d3(), &reference_grid_23d1(),
                           &reference_grid_2d13()}) {
    REQUIRE(grid->size() == 11);
    for (const auto& row : *grid) CHECK(row.size() == 7);
    CHECK((*grid)[0][0] == 1);
    CHECK((*grid)[2][1] == 0);  // blank table entries read as zero
  }
  CHECK(reference_grid_12d3()[10][4] == 394154);
  CHECK(reference_grid_23d1()[10][5] == 393476);
  CHECK(reference_grid_2d13()[10][6] == 535990);
}

TEST_CASE("pattern classes") {
  CHECK(class1_patterns().size() == 4);
  CHECK(class2_patterns().size() == 4);
  CHECK(class3_patterns().size() == 4);
  CHECK(class1_patterns()[2] == "12-3");
  CHECK(class2_patterns()[3] == "23-1");
  CHECK(class3_patterns()[0] == "2-13");
}

TEST_CASE("table suite passes under a small budget") {
  VerifyBudget budget;
  budget.max_n_brute = 5;
  const auto report = verify_tables(budget);
  CHECK(report.ok());
  CHECK(report.failed() == 0);
  CHECK(static_cast<size_t>(report.passed()) == report.checks.size());
}

TEST_CASE("lemma suite passes") {
  VerifyBudget budget;
  budget.max_n_brute = 6;
  CHECK(verify_lemmas(budget).ok());
}

TEST_CASE("functional-equation suite isolates the known bad equation") {
  const auto report = verify_functional_eqs({});
  CHECK_FALSE(report.ok());
  CHECK(report.failed() == 1);
  std::string failing_name, failing_detail;
  for (const auto& check : report.checks)
    if (check.status == CheckStatus::fail) {
      failing_name = check.name;
      failing_detail = check.detail;
    }
  CHECK(failing_name.find("12-3 second-occurrence") != std::string::npos);
  CHECK(failing_detail.find("order 2") != std::string::npos);
  CHECK(failing_detail.find("-2") != std::string::npos);
}

TEST_CASE("closed-form suite passes") {
  VerifyBudget budget;
  budget.max_n_joint = 5;
  CHECK(verify_closed_forms(budget).ok());
}

TEST_CASE("identity suite passes") {
  VerifyBudget budget;
  budget.max_n_brute = 7;
  const auto report = verify_identities(budget);
  CHECK(report.ok());
}

TEST_CASE("equidistribution suite passes") {
  VerifyBudget budget;
  budget.max_n_brute = 6;
  CHECK(verify_equidistribution(budget).ok());
}

}  // TEST_SUITE
