#pragma once

// Validator for the subset of JSON Schema used by schemas/: type, enum,
// required, properties, additionalProperties, items, minimum.

#include <string>
#include <vector>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

inline bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "null") return v.is_null();
  return false;
}

/// Appends one message per violation to `errors`.
inline void validate(const json& v, const json& schema, const std::string& where, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) ok = has_type(v, t.get<std::string>());
    else
      for (const auto& alt : t) ok = ok || has_type(v, alt.get<std::string>());
    if (!ok) {
      errors.push_back(where + ": expected type " + t.dump() + ", got " + v.dump());
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& e : schema["enum"]) ok = ok || e == v;
    if (!ok) errors.push_back(where + ": " + v.dump() + " not in " + schema["enum"].dump());
  }
  if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema["minimum"].get<double>())
    errors.push_back(where + ": below minimum");
  if (v.is_object()) {
    if (schema.contains("required"))
      for (const auto& r : schema["required"])
        if (!v.contains(r.get<std::string>())) errors.push_back(where + ": missing " + r.get<std::string>());
    const json props = schema.value("properties", json::object());
    for (const auto& [key, value] : v.items()) {
      if (props.contains(key)) {
        validate(value, props[key], where + "." + key, errors);
      } else if (schema.contains("additionalProperties")) {
        const json& extra = schema["additionalProperties"];
        if (extra.is_boolean()) {
          if (!extra.get<bool>()) errors.push_back(where + ": unexpected field " + key);
        } else {
          validate(value, extra, where + "." + key, errors);
        }
      }
    }
  }
  if (v.is_array() && schema.contains("items"))
    for (std::size_t i = 0; i < v.size(); ++i)
      validate(v[i], schema["items"], where + "[" + std::to_string(i) + "]", errors);
}

inline std::vector<std::string> validate(const json& v, const json& schema) {
  std::vector<std::string> errors;
  validate(v, schema, "$", errors);
  return errors;
}

}  // namespace schema_check
