#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "vincular/combinat.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/verify.hpp"

using namespace vincular;

namespace {

std::vector<GeneralizedPattern> parse_all(const std::vector<std::string>& v) {
  std::vector<GeneralizedPattern> out;
  for (const auto& text : v) out.push_back(GeneralizedPattern::parse(text));
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("pinned distributions") {
  const auto d213 = distribution(GeneralizedPattern::parse("2-13"), 4);
  CHECK(d213.counts == std::vector<BigCount>{14, 8, 2});
  CHECK(d213.at(0) == 14);
  CHECK(d213.at(2) == 2);
  CHECK(d213.at(7) == 0);  // past the stored range

  // no length-2 permutation contains a length-3 pattern
  const auto d123 = distribution(GeneralizedPattern::parse("12-3"), 2);
  CHECK(d123.counts == std::vector<BigCount>{2});

  const auto d0 = distribution(GeneralizedPattern::parse("12-3"), 0);
  CHECK(d0.counts == std::vector<BigCount>{1});
}

TEST_CASE("distribution rows sum to n!") {
  for (const char* text : {"12-3", "23-1", "2-13", "1-2-3"}) {
    const auto pattern = GeneralizedPattern::parse(text);
    for (int n = 0; n <= 6; ++n) {
      const auto row = distribution(pattern, n);
      BigCount sum = 0;
      for (const auto& c : row.counts) sum += c;
      CHECK(sum == factorial(n));
    }
  }
}

TEST_CASE("trailing zeros are trimmed") {
  const auto row = distribution(GeneralizedPattern::parse("12-3"), 5);
  CHECK(row.counts.size() == 7);  // max occurrence count at n=5 is 6
  CHECK(row.counts.back() != 0);
}

TEST_CASE("enumeration budget guard") {
  const auto pattern = GeneralizedPattern::parse("12-3");
  CHECK_THROWS_AS(distribution(pattern, 9, 8), std::domain_error);
  CHECK_NOTHROW(distribution(pattern, 5, 5));
}

TEST_CASE("joint statistics base case and totals") {
  const auto empty = joint_stats(0);
  REQUIRE(empty.terms.size() == 1);
  CHECK(empty.terms.at({0, 0, 0, 0}) == 1);

  const auto j5 = joint_stats(5);
  CHECK(j5.coefficient_sum() == factorial(5));

  BigCount p0q0 = 0;
  for (const auto& [e, c] : j5.terms)
    if (e[2] == 0 && e[3] == 0) p0q0 += c;
  CHECK(p0q0 == 16);
}

TEST_CASE("joint statistics exponents stay in range") {
  const auto j4 = joint_stats(4);
  for (const auto& [e, c] : j4.terms) {
    CHECK(e[0] >= 1);          // 1 + ascents
    CHECK(e[0] + e[1] == 4);   // ascents + descents = n - 1
    CHECK(e[2] >= 0);
    CHECK(e[3] >= 0);
    CHECK(c > 0);
  }
}

TEST_CASE("equidistribution holds within classes") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(equidistribution_check(parse_all(class1_patterns()), n));
    CHECK(equidistribution_check(parse_all(class2_patterns()), n));
    CHECK(equidistribution_check(parse_all(class3_patterns()), n));
  }
}

TEST_CASE("equidistribution fails across classes") {
  CHECK_FALSE(equidistribution_check(parse_all({"12-3", "23-1"}), 4));
  CHECK_FALSE(equidistribution_check(parse_all({"12-3", "2-13"}), 4));
}

}  // TEST_SUITE
