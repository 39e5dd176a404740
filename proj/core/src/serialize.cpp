#include "multigrade/serialize.hpp"

namespace multigrade {

namespace {

nlohmann::json terms_to_json(const std::vector<Integer>& terms) {
  auto out = nlohmann::json::array();
  for (const auto& t : terms) out.push_back(term_to_json(t));
  return out;
}

std::vector<Integer> terms_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw PreconditionError("expected a JSON array of terms");
  std::vector<Integer> out;
  for (const auto& v : arr) out.push_back(term_from_json(v));
  return out;
}

}  // namespace

nlohmann::json term_to_json(const Integer& value) {
  if (value.fits_slong_p()) {
    long small = value.get_si();
    if (small <= kJsonSafeInteger && small >= -kJsonSafeInteger) return static_cast<long long>(small);
  }
  return value.get_str(10);
}

Integer term_from_json(const nlohmann::json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<unsigned long long>()), 10);
    return Integer(std::to_string(value.get<long long>()), 10);
  }
  if (value.is_string()) return parse_integer(value.get<std::string>());
  throw PreconditionError("term must be an integer or a decimal string");
}

nlohmann::json to_json(const Solution& sol) {
  return {{"k", sol.k()}, {"lhs", terms_to_json(sol.lhs())}, {"rhs", terms_to_json(sol.rhs())}};
}

Solution solution_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("lhs") || !doc.contains("rhs")) {
    throw PreconditionError("solution JSON needs k, lhs and rhs");
  }
  if (!doc["k"].is_number_unsigned() && !(doc["k"].is_number_integer() && doc["k"].get<long long>() > 0)) {
    throw PreconditionError("k must be a positive integer");
  }
  return Solution(doc["k"].get<unsigned>(), terms_from_json(doc["lhs"]), terms_from_json(doc["rhs"]));
}

nlohmann::json to_json_annotated(const Solution& sol) {
  auto doc = to_json(sol);
  doc["verified_r"] = holding_exponents(sol.k(), sol.lhs(), sol.rhs());
  doc["trivial"] = is_trivial(sol);
  return doc;
}

nlohmann::json to_json(const TEPair& te) {
  return {{"k", te.k}, {"a", terms_to_json(te.a)}, {"b", terms_to_json(te.b)}};
}

}  // namespace multigrade
