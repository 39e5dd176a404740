#pragma once

#include <json.hpp>

#include "multigrade/core.hpp"

namespace multigrade {

/// Largest magnitude written as a JSON number; beyond it terms become decimal strings.
inline constexpr long long kJsonSafeInteger = (1LL << 53) - 1;

nlohmann::json term_to_json(const Integer& value);
/// Accepts a JSON integer or a decimal string.
Integer term_from_json(const nlohmann::json& value);

/// {"k": int, "lhs": [...], "rhs": [...]}
nlohmann::json to_json(const Solution& sol);
/// Reads the fields above; extra fields are ignored.
Solution solution_from_json(const nlohmann::json& doc);

/// Solution object plus "verified_r" (exponents that hold) and "trivial".
nlohmann::json to_json_annotated(const Solution& sol);

nlohmann::json to_json(const TEPair& te);

}  // namespace multigrade
