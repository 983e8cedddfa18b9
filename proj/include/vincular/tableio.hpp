#pragma once

#include <string>
#include <vector>

#include "vincular/combinat.hpp"

namespace vincular {

// A rendered distribution table: rows[n][r] for n = 0.., r = 0.. All rows
// carry the same number of columns. computed_as records the representative
// pattern actually evaluated when an equidistributed stand-in answered the
// request; empty otherwise.
struct TableDoc {
  std::string pattern;
  std::string method;      // brute | dp | cf
  std::string computed_as;
  std::vector<std::vector<BigCount>> rows;

  bool operator==(const TableDoc&) const = default;
};

// CSV layout: optional "# key value" metadata lines (pattern, method,
// computed-as), then a "n,r0,r1,..." header, then one line per n. Counts are
// plain decimal integers.
std::string to_csv(const TableDoc& doc);
TableDoc from_csv(const std::string& text);

// JSON layout: {"pattern": ..., "method": ..., "rows": [[...], ...]} with
// counts as decimal strings so arbitrary precision survives parsers without
// big integers; "computed_as" appears only when routing happened.
std::string to_json(const TableDoc& doc);
TableDoc from_json(const std::string& text);

}  // namespace vincular
