// Command-line surface: count occurrences, emit distribution tables by any
// route, dump series coefficients, and run the cross-validation suites.
#include <algorithm>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/perm.hpp"
#include "vincular/recursions.hpp"
#include "vincular/series.hpp"
#include "vincular/tableio.hpp"
#include "vincular/verify.hpp"

namespace {

using namespace vincular;

bool member_of(const std::vector<std::string>& patterns,
               const std::string& text) {
  return std::find(patterns.begin(), patterns.end(), text) != patterns.end();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

// dp is defined for the 12-3 and 23-1 classes, cf for the 2-13 class, brute
// for everything
std::string default_method(const std::string& pattern) {
  if (member_of(class1_patterns(), pattern) ||
      member_of(class2_patterns(), pattern))
    return "dp";
  if (member_of(class3_patterns(), pattern)) return "cf";
  return "brute";
}

std::string valid_methods(const std::string& pattern) {
  const std::string best = default_method(pattern);
  return best == "brute" ? best : best + ", brute";
}

TableDoc dp_table(const std::string& pattern, int n_max, int r_max) {
  const bool in_class1 = member_of(class1_patterns(), pattern);
  const bool in_class2 = member_of(class2_patterns(), pattern);
  if (!in_class1 && !in_class2)
    throw std::invalid_argument(
        "the dp method covers only the patterns " + join(class1_patterns()) +
        " and " + join(class2_patterns()) + "; valid methods for " + pattern +
        ": " + valid_methods(pattern));
  const std::string representative = in_class1 ? "12-3" : "23-1";
  const auto table = in_class1 ? dp_u(r_max, std::max(n_max, 1), false)
                               : dp_v(r_max, std::max(n_max, 1), false);
  TableDoc doc;
  doc.pattern = pattern;
  doc.method = "dp";
  if (pattern != representative) doc.computed_as = representative;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<BigCount> row;
    for (int r = 0; r <= r_max; ++r) row.push_back(table.total(r, n));
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

TableDoc cf_table(const std::string& pattern, int n_max, int r_max) {
  if (!member_of(class3_patterns(), pattern))
    throw std::invalid_argument(
        "the cf method covers only the patterns " + join(class3_patterns()) +
        "; valid methods for " + pattern + ": " + valid_methods(pattern));
  const auto series = eval_stieltjes(cf_2d13_spec(n_max), n_max);
  TableDoc doc;
  doc.pattern = pattern;
  doc.method = "cf";
  if (pattern != "2-13") doc.computed_as = "2-13";
  for (int n = 0; n <= n_max; ++n) {
    std::vector<BigCount> row;
    for (int r = 0; r <= r_max; ++r) row.push_back(series.p_coefficient(n, r));
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

TableDoc brute_table(const std::string& pattern_text, int n_max, int r_max,
                     int max_n_brute) {
  const auto pattern = GeneralizedPattern::parse(pattern_text);
  TableDoc doc;
  doc.pattern = pattern_text;
  doc.method = "brute";
  for (int n = 0; n <= n_max; ++n) {
    const auto row = distribution(pattern, n, max_n_brute);
    std::vector<BigCount> padded;
    for (int r = 0; r <= r_max; ++r) padded.push_back(row.at(r));
    doc.rows.push_back(std::move(padded));
  }
  return doc;
}

void emit_table(const TableDoc& doc, const std::string& format) {
  std::cout << (format == "json" ? to_json(doc) : to_csv(doc));
}

int run_verify(const std::string& suite, const VerifyBudget& budget) {
  VerificationReport report;
  if (suite == "tables")
    report = verify_tables(budget);
  else if (suite == "lemmas")
    report = verify_lemmas(budget);
  else if (suite == "functional_eqs")
    report = verify_functional_eqs(budget);
  else if (suite == "closed_forms")
    report = verify_closed_forms(budget);
  else if (suite == "identities")
    report = verify_identities(budget);
  else if (suite == "equidistribution")
    report = verify_equidistribution(budget);
  else
    report = verify_all(budget);

  for (const auto& check : report.checks) {
    const char* tag = check.status == CheckStatus::pass   ? "[PASS]"
                      : check.status == CheckStatus::fail ? "[FAIL]"
                                                          : "[SKIP]";
    std::cout << tag << " " << check.name;
    if (!check.detail.empty()) std::cout << " -- " << check.detail;
    std::cout << "\n";
  }
  std::cout << report.passed() << " passed, " << report.failed() << " failed, "
            << report.skipped() << " skipped\n";
  return report.ok() ? 0 : 1;
}

TruncatedSeries named_series(const std::string& which, int order) {
  if (which == "U0" || which == "V0") return bell_ogf(order);
  if (which == "U1") return u1_closed_form(order);
  return v1_closed_form(order);  // V1
}

void emit_series(const std::string& which, int order,
                 const std::string& format) {
  if (which == "cf_p_poly") {
    // per-t-degree polynomials in p, rendered as an n-by-r grid
    const auto series = eval_stieltjes(cf_2d13_spec(order), order);
    int r_max = 0;
    for (int n = 0; n <= order; ++n)
      r_max = std::max(r_max, series.max_p_exponent(n));
    TableDoc doc;
    doc.pattern = "2-13";
    doc.method = "cf";
    for (int n = 0; n <= order; ++n) {
      std::vector<BigCount> row;
      for (int r = 0; r <= r_max; ++r) row.push_back(series.p_coefficient(n, r));
      doc.rows.push_back(std::move(row));
    }
    emit_table(doc, format);
    return;
  }
  const auto series = named_series(which, order);
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["which"] = which;
    doc["order"] = order;
    auto& coefficients = doc["coefficients"] = nlohmann::json::array();
    for (int k = 0; k <= order; ++k)
      coefficients.push_back(series.coeff(k).get_str());
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (int k = 0; k <= order; ++k)
    std::cout << (k ? "," : "") << series.coeff(k).get_str();
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Occurrence statistics of generalized length-3 permutation patterns"};
  app.require_subcommand(1);

  std::string pattern_text, permutation_text, method, format = "csv";
  std::string suite, which;
  int n_max = 10, r_max = 6, order = 12;
  VerifyBudget budget;

  auto* cmd_count = app.add_subcommand(
      "count", "Count occurrences of a pattern in one permutation");
  cmd_count->add_option("pattern", pattern_text, "Pattern, e.g. 12-3 or 1-2-3")
      ->required();
  cmd_count
      ->add_option("permutation", permutation_text,
                   "Permutation word, e.g. 491273865 or '4 9 1'")
      ->required();

  auto* cmd_table = app.add_subcommand(
      "table", "Distribution table: rows n = 0..n_max, columns r = 0..r_max");
  cmd_table->add_option("pattern", pattern_text, "Pattern")->required();
  cmd_table->add_option("n_max,--n-max", n_max, "Largest permutation length")
      ->check(CLI::NonNegativeNumber);
  cmd_table->add_option("r_max,--r-max", r_max, "Largest occurrence count")
      ->check(CLI::NonNegativeNumber);
  cmd_table
      ->add_option("method,--method", method,
                   "Route: brute (any pattern), dp (12-3/23-1 classes), cf "
                   "(2-13 class); default picks the best available")
      ->check(CLI::IsMember({"brute", "dp", "cf"}));
  cmd_table->add_option("format,--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_table->add_option("--max-n-brute", budget.max_n_brute,
                        "Enumeration budget for the brute method");

  auto* cmd_dp = app.add_subcommand(
      "dp", "Dynamic-programming route only (12-3 and 23-1 classes)");
  cmd_dp->add_option("pattern", pattern_text, "Pattern")->required();
  cmd_dp->add_option("n_max,--n-max", n_max, "Largest permutation length")
      ->check(CLI::NonNegativeNumber);
  cmd_dp->add_option("r_max,--r-max", r_max, "Largest occurrence count")
      ->check(CLI::NonNegativeNumber);
  cmd_dp->add_option("format,--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* cmd_series = app.add_subcommand(
      "series", "Generating-function coefficients through a given order");
  cmd_series
      ->add_option("which", which,
                   "U0/V0: avoidance series (Bell); U1, V1: first-occurrence "
                   "series; cf_p_poly: occurrence polynomials from the "
                   "continued fraction")
      ->required()
      ->check(CLI::IsMember({"U0", "U1", "V0", "V1", "cf_p_poly"}));
  cmd_series->add_option("order,--order-requested", order, "Truncation order")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_series->add_option("format,--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_series->add_option("--order", budget.order,
                         "Largest order served without raising this limit");

  auto* cmd_verify =
      app.add_subcommand("verify", "Cross-validation suites; exit 1 on any "
                                   "failed check");
  cmd_verify->add_option("suite", suite, "Which suite to run")
      ->required()
      ->check(CLI::IsMember({"tables", "lemmas", "functional_eqs",
                             "closed_forms", "identities", "equidistribution",
                             "all"}));
  cmd_verify->add_option("--max-n-brute", budget.max_n_brute,
                         "Largest S_n enumerated per pattern");
  cmd_verify->add_option("--max-n-joint", budget.max_n_joint,
                         "Largest S_n enumerated for joint statistics");
  cmd_verify->add_option("--order", budget.order,
                         "Truncation order for series checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_count) {
      const auto pattern = GeneralizedPattern::parse(pattern_text);
      const auto permutation = Permutation::parse(permutation_text);
      std::cout << count_occurrences(pattern, permutation) << "\n";
      return 0;
    }
    if (*cmd_table) {
      GeneralizedPattern::parse(pattern_text);  // surfaces bad syntax early
      const std::string chosen =
          method.empty() ? default_method(pattern_text) : method;
      TableDoc doc;
      if (chosen == "dp")
        doc = dp_table(pattern_text, n_max, r_max);
      else if (chosen == "cf")
        doc = cf_table(pattern_text, n_max, r_max);
      else
        doc = brute_table(pattern_text, n_max, r_max, budget.max_n_brute);
      emit_table(doc, format);
      return 0;
    }
    if (*cmd_dp) {
      emit_table(dp_table(pattern_text, n_max, r_max), format);
      return 0;
    }
    if (*cmd_series) {
      if (order > budget.order)
        throw std::invalid_argument(
            "requested order " + std::to_string(order) +
            " exceeds the configured limit " + std::to_string(budget.order) +
            "; raise --order to allow it");
      emit_series(which, order, format);
      return 0;
    }
    return run_verify(suite, budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
