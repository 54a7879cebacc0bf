#include <json.hpp>

#include <sstream>

#include "kahlercalc/errors.hpp"
#include "kahlercalc/inequalities.hpp"

namespace kahlercalc {

namespace {

using nlohmann::json;

BigRational field_rational(const json& obj, const std::string& field,
                           std::size_t record_index) {
  const std::string where =
      "record " + std::to_string(record_index) + ", field '" + field + "'";
  if (!obj.contains(field)) {
    throw ParseError("missing field '" + field + "' in record " +
                         std::to_string(record_index),
                     ParseError::npos, field);
  }
  const json& v = obj.at(field);
  try {
    if (v.is_string()) return BigRational::parse(v.get<std::string>());
    if (v.is_number_integer()) return BigRational(v.get<long long>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what(), ParseError::npos, field);
  }
  throw ParseError(where + ": expected a \"p/q\" string", ParseError::npos, field);
}

KahlerClassData record_from_json(const json& obj, std::size_t record_index) {
  if (!obj.is_object()) {
    throw ParseError("record " + std::to_string(record_index) +
                     " is not an object");
  }
  KahlerClassData d;
  const BigRational n = field_rational(obj, "n", record_index);
  if (!n.is_integer() || n.num() < 0 || n.num() > 1000000) {
    throw ParseError("record " + std::to_string(record_index) +
                         ", field 'n': expected a small integer dimension",
                     ParseError::npos, "n");
  }
  d.n = n.num().convert_to<int>();
  d.vol = field_rational(obj, "vol", record_index);
  d.deg1 = field_rational(obj, "c1_w_nm1", record_index);
  d.chern11 = field_rational(obj, "c1sq_w_nm2", record_index);
  d.chern2 = field_rational(obj, "c2_w_nm2", record_index);
  d.validate();
  return d;
}

}  // namespace

std::vector<KahlerClassData> parse_kahler_records(const std::string& text) {
  std::vector<KahlerClassData> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return out;

  if (text[first] == '[') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    for (std::size_t i = 0; i < doc.size(); ++i) {
      out.push_back(record_from_json(doc[i], i));
    }
    return out;
  }

  // One JSON object per non-empty line.
  std::istringstream lines(text);
  std::string line;
  std::size_t index = 0;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": invalid JSON: " + e.what());
    }
    out.push_back(record_from_json(obj, index++));
  }
  return out;
}

}  // namespace kahlercalc
