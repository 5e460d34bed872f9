#include "qmon/quandle_json.hpp"

#include <fstream>

#include <json.hpp>

#include "qmon/errors.hpp"

namespace qmon {

using nlohmann::json;

static FiniteQuandle from_parsed(const json& j) {
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  if (j.contains("format") && j["format"] != 1) throw StructuralError("unknown format version");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw StructuralError("missing integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 0) throw StructuralError("'n' must be non-negative");
  if (!j.contains("rhd") || !j["rhd"].is_array())
    throw StructuralError("missing array field 'rhd'");
  std::vector<std::vector<int>> table;
  for (const auto& row : j["rhd"]) {
    if (!row.is_array()) throw StructuralError("'rhd' rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw StructuralError("'rhd' entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  if (static_cast<int>(table.size()) != n) throw StructuralError("'rhd' has wrong row count");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw StructuralError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return FiniteQuandle::from_rhd(table, std::move(labels));
}

FiniteQuandle quandle_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw StructuralError("invalid JSON");
  return from_parsed(j);
}

FiniteQuandle quandle_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return quandle_from_json(text);
}

std::string quandle_to_json(const FiniteQuandle& q) {
  json j;
  j["format"] = 1;
  j["n"] = q.size();
  j["rhd"] = q.rhd_rows();
  if (!q.labels().empty()) j["labels"] = q.labels();
  return j.dump();
}

}  // namespace qmon
