#include "nilharm/algebra_json.hpp"

#include "nilharm/error.hpp"

namespace nilharm {

nlohmann::json algebra_to_json(const LieAlgebraData& alg) {
  nlohmann::json doc;
  doc["dim"] = alg.dim();
  doc["labels"] = alg.labels();
  doc["center"] = alg.center_indices();
  nlohmann::json brackets = nlohmann::json::array();
  for (const auto& [key, coeffs] : alg.brackets()) {
    nlohmann::json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    nlohmann::json c = nlohmann::json::array();
    for (const auto& q : coeffs) c.push_back(to_fraction_string(q));
    entry["coeffs"] = std::move(c);
    brackets.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(brackets);
  if (!alg.metadata().empty()) doc["metadata"] = alg.metadata();
  if (!alg.orderings().empty()) doc["orderings"] = alg.orderings();
  return doc;
}

LieAlgebraData algebra_from_json(const nlohmann::json& doc) {
  try {
    const std::size_t dim = doc.at("dim").get<std::size_t>();
    auto labels = doc.at("labels").get<std::vector<std::string>>();
    if (labels.size() != dim) throw InvalidInput("labels length does not match dim");
    auto center_idx = doc.at("center").get<std::vector<std::size_t>>();
    LieAlgebraData::BracketTable table;
    for (const auto& entry : doc.at("brackets")) {
      RationalVector coeffs;
      for (const auto& s : entry.at("coeffs")) coeffs.push_back(parse_rational(s.get<std::string>()));
      auto key = std::make_pair(entry.at("i").get<std::size_t>(), entry.at("j").get<std::size_t>());
      if (table.count(key)) throw InvalidInput("bracket given twice");
      table[key] = std::move(coeffs);
    }
    LieAlgebraData alg(std::move(labels), std::move(center_idx), std::move(table));
    if (doc.contains("metadata"))
      for (const auto& [k, v] : doc.at("metadata").items()) alg.set_metadata(k, v.get<std::string>());
    if (doc.contains("orderings"))
      for (const auto& [k, v] : doc.at("orderings").items())
        alg.add_ordering(k, v.get<std::vector<std::size_t>>());
    return alg;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed algebra JSON: ") + e.what());
  }
}

}  // namespace nilharm
