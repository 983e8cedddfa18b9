#pragma once

#include <string>
#include <vector>

#include "vincular/combinat.hpp"

namespace vincular {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // empty, or the first discrepancy / skip reason
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, bool ok, std::string detail = "");
  void add_skip(std::string name, std::string reason);
  void merge(const VerificationReport& other);
  int passed() const;
  int failed() const;
  int skipped() const;
  bool ok() const { return failed() == 0; }
};

// Work bounds for the exhaustive parts of the suites.
struct VerifyBudget {
  int max_n_brute = 8;  // largest S_n enumerated per pattern
  int max_n_joint = 7;  // largest S_n enumerated for the joint statistics
  int order = 12;       // truncation order for series checks
};

// Frozen reference grids, rows n = 0..10, columns r = 0..6 (absent table
// entries read as zero). Cross-checked against independent enumeration before
// being frozen here.
const std::vector<std::vector<BigCount>>& reference_grid_12d3();
const std::vector<std::vector<BigCount>>& reference_grid_23d1();
const std::vector<std::vector<BigCount>>& reference_grid_2d13();

// The three equidistribution classes of one-dash length-3 patterns.
const std::vector<std::string>& class1_patterns();  // 1-23, 3-21, 12-3, 32-1
const std::vector<std::string>& class2_patterns();  // 1-32, 3-12, 21-3, 23-1
const std::vector<std::string>& class3_patterns();  // 2-13, 2-31, 13-2, 31-2

// Each suite re-derives a body of related facts and compares routes:
//   tables          — DP and continued-fraction routes against the reference
//                     grids and brute force; row sums; avoidance columns
//   lemmas          — boundary formulas against DP cells; the four closed
//                     recurrences against DP rows; DP against brute force
//   functional_eqs  — zero-residual checks for the four functional equations;
//                     the Bell fixed point; the binomial-transform property
//   closed_forms    — Bell series, first-occurrence series, 2-13 closed
//                     forms, continued-fraction stability, joint-statistic
//                     concordance
//   identities      — the two cross-family occurrence identities and the
//                     single-occurrence closed forms for 1-2-3 / 1-3-2
//   equidistribution— identical distributions within each class; avoidance
//                     baselines for all twelve patterns
VerificationReport verify_tables(const VerifyBudget& budget = {});
VerificationReport verify_lemmas(const VerifyBudget& budget = {});
VerificationReport verify_functional_eqs(const VerifyBudget& budget = {});
VerificationReport verify_closed_forms(const VerifyBudget& budget = {});
VerificationReport verify_identities(const VerifyBudget& budget = {});
VerificationReport verify_equidistribution(const VerifyBudget& budget = {});
VerificationReport verify_all(const VerifyBudget& budget = {});

}  // namespace vincular
