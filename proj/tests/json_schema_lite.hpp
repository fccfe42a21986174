// Small structural validator covering the subset of JSON Schema the shipped
// payload schema uses: type, properties, required, additionalProperties,
// items, enum and local $ref.  Returns an error description or "" on
// success.
#pragma once

#include <string>

#include <json.hpp>

namespace schema_lite {

using nlohmann::json;

inline const json& resolve_ref(const json& root, const std::string& ref) {
  // Only "#/$defs/<name>" pointers occur.
  const std::string prefix = "#/$defs/";
  if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
  return root.at("$defs").at(ref.substr(prefix.size()));
}

inline std::string validate(const json& root, const json& schema, const json& value,
                            const std::string& where = "$") {
  if (schema.contains("$ref"))
    return validate(root, resolve_ref(root, schema.at("$ref").get<std::string>()), value, where);
  if (schema.contains("enum")) {
    for (const json& option : schema.at("enum"))
      if (option == value) return "";
    return where + ": value not in enum";
  }
  if (schema.contains("type")) {
    const std::string type = schema.at("type").get<std::string>();
    const bool ok = (type == "object" && value.is_object()) ||
                    (type == "array" && value.is_array()) ||
                    (type == "string" && value.is_string()) ||
                    (type == "integer" && value.is_number_integer()) ||
                    (type == "number" && value.is_number()) ||
                    (type == "boolean" && value.is_boolean());
    if (!ok) return where + ": expected " + type;
  }
  if (value.is_object()) {
    const json props = schema.value("properties", json::object());
    if (schema.contains("required"))
      for (const json& key : schema.at("required"))
        if (!value.contains(key.get<std::string>()))
          return where + ": missing required key " + key.get<std::string>();
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        const std::string err = validate(root, props.at(key), sub, where + "." + key);
        if (!err.empty()) return err;
      } else if (schema.value("additionalProperties", json(true)) == json(false)) {
        return where + ": unexpected key " + key;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    std::size_t n = 0;
    for (const json& sub : value) {
      const std::string err =
          validate(root, schema.at("items"), sub, where + "[" + std::to_string(n) + "]");
      if (!err.empty()) return err;
      ++n;
    }
  }
  return "";
}

// Validate against one named definition.
inline std::string validate_def(const json& root, const std::string& def, const json& value) {
  return validate(root, root.at("$defs").at(def), value, "$");
}

}  // namespace schema_lite
