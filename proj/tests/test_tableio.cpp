#include <stdexcept>

#include "doctest.h"
#include "vincular/tableio.hpp"

using namespace vincular;

namespace {

TableDoc sample() {
  TableDoc doc;
  doc.pattern = "2-13";
  doc.method = "cf";
  doc.rows = {{1, 0, 0}, {1, 0, 0}, {2, 0, 0}, {5, 1, 0}, {14, 8, 2}};
  return doc;
}

}  // namespace

TEST_SUITE("tableio") {

TEST_CASE("csv layout") {
  const std::string text = to_csv(sample());
  CHECK(text ==
        "# pattern 2-13\n"
        "# method cf\n"
        "n,r0,r1,r2\n"
        "0,1,0,0\n"
        "1,1,0,0\n"
        "2,2,0,0\n"
        "3,5,1,0\n"
        "4,14,8,2\n");
}

TEST_CASE("csv round-trip") {
  const auto doc = sample();
  CHECK(from_csv(to_csv(doc)) == doc);

  TableDoc routed = doc;
  routed.pattern = "31-2";
  routed.computed_as = "2-13";
  const std::string text = to_csv(routed);
  CHECK(text.find("# computed-as 2-13\n") != std::string::npos);
  CHECK(from_csv(text) == routed);
}

TEST_CASE("csv rejects malformed input") {
  CHECK_THROWS_AS(from_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(from_csv("r0,r1\n0,1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_csv("n,r0,r2\n0,1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_csv("n,r0\n1,5\n"), std::invalid_argument);  // skips n=0
  CHECK_THROWS_AS(from_csv("n,r0\n0,5,6\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_csv("n,r0\n0,-5\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_csv("# flavor x\nn,r0\n0,5\n"), std::invalid_argument);
}

TEST_CASE("json round-trip keeps counts exact") {
  TableDoc doc = sample();
  // a value past 2^64, exercising the string rendering
  doc.rows[4][2] = BigCount("123456789012345678901234567890");
  const std::string text = to_json(doc);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(from_json(text) == doc);
}

TEST_CASE("json omits computed_as unless routed") {
  CHECK(to_json(sample()).find("computed_as") == std::string::npos);
  TableDoc routed = sample();
  routed.computed_as = "2-13";
  CHECK(from_json(to_json(routed)).computed_as == "2-13");
}

TEST_CASE("json rejects malformed input") {
  CHECK_THROWS_AS(from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("{\"pattern\": \"x\"}"), std::invalid_argument);
  CHECK_THROWS_AS(
      from_json("{\"pattern\":\"x\",\"method\":\"dp\",\"rows\":[[\"1\"],"
                "[\"2\",\"3\"]]}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      from_json("{\"pattern\":\"x\",\"method\":\"dp\",\"rows\":[[\"-1\"]]}"),
      std::invalid_argument);
}

TEST_CASE("ragged tables are rejected on output") {
  TableDoc doc = sample();
  doc.rows[1].push_back(9);
  CHECK_THROWS_AS(to_csv(doc), std::invalid_argument);
  CHECK_THROWS_AS(to_json(doc), std::invalid_argument);
}

}  // TEST_SUITE
