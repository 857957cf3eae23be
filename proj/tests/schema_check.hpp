#pragma once
// Just enough of JSON Schema to check the published report schema: type,
// enum, required, properties, items, additionalProperties, and "$ref": "#".

#include <json.hpp>
#include <string>

namespace schema {

inline bool type_matches(const std::string& type, const nlohmann::json& v) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (type == "number") return v.is_number();
  if (type == "null") return v.is_null();
  return false;
}

inline bool validate(const nlohmann::json& sch, const nlohmann::json& value,
                     const nlohmann::json& root, std::string* why, std::string path) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = path + ": " + msg;
    return false;
  };
  if (sch.contains("$ref")) {
    if (sch["$ref"] != "#") return fail("unsupported $ref");
    return validate(root, value, root, why, path);
  }
  if (sch.contains("type") && !type_matches(sch["type"], value))
    return fail("expected type " + sch["type"].get<std::string>());
  if (sch.contains("enum")) {
    bool hit = false;
    for (const auto& e : sch["enum"]) hit = hit || e == value;
    if (!hit) return fail("value not in enum");
  }
  if (value.is_object()) {
    if (sch.contains("required"))
      for (const auto& key : sch["required"])
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key " + key.get<std::string>());
    const auto* props = sch.contains("properties") ? &sch["properties"] : nullptr;
    for (const auto& [key, member] : value.items()) {
      if (props && props->contains(key)) {
        if (!validate((*props)[key], member, root, why, path + "/" + key)) return false;
      } else if (sch.contains("additionalProperties")) {
        const auto& ap = sch["additionalProperties"];
        if (ap.is_boolean()) {
          if (!ap.get<bool>()) return fail("unexpected key " + key);
        } else if (!validate(ap, member, root, why, path + "/" + key)) {
          return false;
        }
      }
    }
  }
  if (value.is_array() && sch.contains("items")) {
    std::size_t i = 0;
    for (const auto& item : value) {
      if (!validate(sch["items"], item, root, why, path + "/" + std::to_string(i)))
        return false;
      ++i;
    }
  }
  return true;
}

inline bool validate(const nlohmann::json& sch, const nlohmann::json& value,
                     std::string* why = nullptr) {
  return validate(sch, value, sch, why, "$");
}

}  // namespace schema
