#pragma once
// Deterministic JSON text: 2-space indentation, keys in insertion order,
// reals with 12 significant digits, non-finite reals as the strings
// "Infinity", "-Infinity" and "NaN".

#include <string>

#include <json.hpp>

namespace techevo {

using Json = nlohmann::ordered_json;

std::string dump_json(const Json& value);

// Finite or non-finite real stored as produced by real_to_json.
Json real_to_json(double v);
double real_from_json(const Json& v);

// 12 significant digits, shortest form ("0.35", "1e-05").
std::string format_real(double v);

}  // namespace techevo
