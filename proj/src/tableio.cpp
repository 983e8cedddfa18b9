#include "vincular/tableio.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vincular {

namespace {

void check_rectangular(const TableDoc& doc, const char* op) {
  for (const auto& row : doc.rows)
    if (row.size() != doc.rows.front().size())
      throw std::invalid_argument(std::string(op) + ": ragged rows");
}

BigCount parse_count(const std::string& text, const char* op) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string(op) + ": bad count '" + text + "'");
  return BigCount(text);
}

}  // namespace

std::string to_csv(const TableDoc& doc) {
  if (!doc.rows.empty()) check_rectangular(doc, "to_csv");
  std::ostringstream out;
  if (!doc.pattern.empty()) out << "# pattern " << doc.pattern << "\n";
  if (!doc.method.empty()) out << "# method " << doc.method << "\n";
  if (!doc.computed_as.empty()) out << "# computed-as " << doc.computed_as << "\n";
  out << "n";
  const size_t columns = doc.rows.empty() ? 0 : doc.rows.front().size();
  for (size_t r = 0; r < columns; ++r) out << ",r" << r;
  out << "\n";
  for (size_t n = 0; n < doc.rows.size(); ++n) {
    out << n;
    for (const auto& count : doc.rows[n]) out << "," << count.get_str();
    out << "\n";
  }
  return out.str();
}

TableDoc from_csv(const std::string& text) {
  TableDoc doc;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  size_t columns = 0;
  size_t expected_n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string key, value;
      meta >> key >> value;
      if (key == "pattern") doc.pattern = value;
      else if (key == "method") doc.method = value;
      else if (key == "computed-as") doc.computed_as = value;
      else throw std::invalid_argument("from_csv: unknown metadata '" + key + "'");
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream fields_in(line);
    std::string field;
    while (std::getline(fields_in, field, ',')) fields.push_back(field);
    if (!header_seen) {
      if (fields.empty() || fields[0] != "n")
        throw std::invalid_argument("from_csv: missing 'n,r0,...' header");
      for (size_t c = 1; c < fields.size(); ++c)
        if (fields[c] != "r" + std::to_string(c - 1))
          throw std::invalid_argument("from_csv: bad header column '" +
                                      fields[c] + "'");
      columns = fields.size() - 1;
      header_seen = true;
      continue;
    }
    if (fields.size() != columns + 1)
      throw std::invalid_argument("from_csv: row width mismatch");
    if (fields[0] != std::to_string(expected_n))
      throw std::invalid_argument("from_csv: expected row n=" +
                                  std::to_string(expected_n));
    ++expected_n;
    std::vector<BigCount> row;
    for (size_t c = 1; c < fields.size(); ++c)
      row.push_back(parse_count(fields[c], "from_csv"));
    doc.rows.push_back(std::move(row));
  }
  if (!header_seen)
    throw std::invalid_argument("from_csv: missing 'n,r0,...' header");
  return doc;
}

std::string to_json(const TableDoc& doc) {
  if (!doc.rows.empty()) check_rectangular(doc, "to_json");
  nlohmann::ordered_json out;
  out["pattern"] = doc.pattern;
  out["method"] = doc.method;
  if (!doc.computed_as.empty()) out["computed_as"] = doc.computed_as;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& count : row) cells.push_back(count.get_str());
    rows.push_back(std::move(cells));
  }
  out["rows"] = std::move(rows);
  return out.dump(2) + "\n";
}

TableDoc from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("from_json: ") + err.what());
  }
  if (!parsed.is_object() || !parsed.contains("pattern") ||
      !parsed.contains("method") || !parsed.contains("rows"))
    throw std::invalid_argument(
        "from_json: expected an object with pattern, method, rows");
  TableDoc doc;
  doc.pattern = parsed.at("pattern").get<std::string>();
  doc.method = parsed.at("method").get<std::string>();
  if (parsed.contains("computed_as"))
    doc.computed_as = parsed.at("computed_as").get<std::string>();
  for (const auto& row : parsed.at("rows")) {
    std::vector<BigCount> cells;
    for (const auto& cell : row)
      cells.push_back(parse_count(cell.get<std::string>(), "from_json"));
    doc.rows.push_back(std::move(cells));
  }
  if (!doc.rows.empty()) check_rectangular(doc, "from_json");
  return doc;
}

}  // namespace vincular
