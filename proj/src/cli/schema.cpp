// SPDX-License-Identifier: Apache-2.0
#include "cnp/cli/schema.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cnp::cli {

// Defined in the generated schema_data.cpp.
extern const char* const kInstanceSchemaText;
extern const char* const kReportSchemaText;

const Json& instance_schema() {
  static const Json schema = Json::parse(kInstanceSchemaText);
  return schema;
}

const Json& report_schema() {
  static const Json schema = Json::parse(kReportSchemaText);
  return schema;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw SchemaError("input: " + path + ": " + why);
}

const Json& resolve_ref(const Json& root, const std::string& ref,
                        const std::string& path) {
  if (ref.rfind("#/", 0) != 0) fail(path, "unsupported $ref " + ref);
  const Json* node = &root;
  std::istringstream parts(ref.substr(2));
  std::string key;
  while (std::getline(parts, key, '/')) {
    if (!node->is_object() || !node->contains(key)) {
      fail(path, "dangling $ref " + ref);
    }
    node = &(*node)[key];
  }
  return *node;
}

bool type_matches(const std::string& type, const Json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "number") return value.is_number();
  if (type == "integer") {
    if (value.is_number_integer() || value.is_number_unsigned()) return true;
    if (value.is_number_float()) {
      const double d = value.get<double>();
      return std::floor(d) == d;
    }
    return false;
  }
  return false;
}

}  // namespace

void validate(const Json& root, const Json& schema, const Json& value,
              const std::string& path) {
  if (schema.contains("$ref")) {
    validate(root, resolve_ref(root, schema["$ref"].get<std::string>(), path),
             value, path);
    return;
  }

  if (schema.contains("const") && value != schema["const"]) {
    fail(path, "must equal " + schema["const"].dump());
  }
  if (schema.contains("enum")) {
    const auto& options = schema["enum"];
    if (std::find(options.begin(), options.end(), value) == options.end()) {
      fail(path, "not one of " + options.dump());
    }
  }
  if (schema.contains("type")) {
    const std::string type = schema["type"].get<std::string>();
    if (!type_matches(type, value)) fail(path, "expected " + type);
  }

  if (schema.contains("oneOf")) {
    bool ok = false;
    for (const Json& option : schema["oneOf"]) {
      try {
        validate(root, option, value, path);
        ok = true;
        break;
      } catch (const SchemaError&) {
      }
    }
    if (!ok) fail(path, "matches no allowed alternative");
  }

  if (value.is_number()) {
    const double d = value.get<double>();
    if (schema.contains("minimum") && d < schema["minimum"].get<double>()) {
      fail(path, "below minimum " + schema["minimum"].dump());
    }
    if (schema.contains("maximum") && d > schema["maximum"].get<double>()) {
      fail(path, "above maximum " + schema["maximum"].dump());
    }
    if (schema.contains("exclusiveMinimum") &&
        d <= schema["exclusiveMinimum"].get<double>()) {
      fail(path, "must exceed " + schema["exclusiveMinimum"].dump());
    }
    if (schema.contains("exclusiveMaximum") &&
        d >= schema["exclusiveMaximum"].get<double>()) {
      fail(path, "must be below " + schema["exclusiveMaximum"].dump());
    }
  }

  if (value.is_array()) {
    if (schema.contains("minItems") &&
        value.size() < schema["minItems"].get<std::size_t>()) {
      fail(path, "needs at least " + schema["minItems"].dump() + " items");
    }
    if (schema.contains("maxItems") &&
        value.size() > schema["maxItems"].get<std::size_t>()) {
      fail(path, "allows at most " + schema["maxItems"].dump() + " items");
    }
    if (schema.contains("items")) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        validate(root, schema["items"], value[i],
                 path + "/" + std::to_string(i));
      }
    }
  }

  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const Json& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          fail(path, "missing required field '" + key.get<std::string>() +
                         "'");
        }
      }
    }
    const bool closed = schema.contains("additionalProperties") &&
                        schema["additionalProperties"].is_boolean() &&
                        !schema["additionalProperties"].get<bool>();
    for (const auto& [key, member] : value.items()) {
      if (schema.contains("properties") &&
          schema["properties"].contains(key)) {
        validate(root, schema["properties"][key], member, path + "/" + key);
      } else if (closed) {
        fail(path, "unknown field '" + key + "'");
      }
    }
  }
}

void validate_instance(const Json& instance) {
  const Json& root = instance_schema();
  validate(root, root, instance, "instance");

  std::string key = instance["kind"].get<std::string>();
  std::replace(key.begin(), key.end(), '-', '_');
  const std::string def = "payload_" + key;
  if (!root["definitions"].contains(def)) {
    throw SchemaError("input: instance: no payload schema for kind " + key);
  }
  validate(root, root["definitions"][def], instance["payload"],
           "instance/payload");
}

void validate_report(const Json& report) {
  const Json& root = report_schema();
  validate(root, root, report, "report");
}

}  // namespace cnp::cli
