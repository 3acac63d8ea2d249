#pragma once

// Minimal structural validator for the JSON-schema subset used by the
// published schemas: type / type lists, required, properties, items, enum.

#include <json.hpp>

#include <string>

namespace ddt::testutil {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "boolean") return value.is_boolean();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "null") return value.is_null();
    return false;
}

inline bool validate_schema(const json& value, const json& schema, std::string& error, const std::string& path = "$") {
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_string())
            ok = type_matches(value, t.get<std::string>());
        else
            for (const auto& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
        if (!ok) {
            error = path + ": type mismatch, expected " + t.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"]) ok = ok || (value == alt);
        if (!ok) {
            error = path + ": value not in enum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    error = path + ": missing required key " + key.get<std::string>();
                    return false;
                }
        if (schema.contains("properties"))
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
                if (value.contains(it.key()))
                    if (!validate_schema(value.at(it.key()), it.value(), error, path + "." + it.key())) return false;
    }
    if (value.is_array() && schema.contains("items")) {
        std::size_t i = 0;
        for (const auto& item : value) {
            if (!validate_schema(item, schema["items"], error, path + "[" + std::to_string(i) + "]")) return false;
            ++i;
        }
    }
    return true;
}

} // namespace ddt::testutil
