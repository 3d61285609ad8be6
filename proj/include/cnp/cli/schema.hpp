// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>
#include <string>

#include "cnp/errors.hpp"

namespace cnp::cli {

using Json = nlohmann::json;

/// Validation failure against one of the shipped schemas; the message
/// carries a JSON-pointer-style path to the offending value.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// The schemas shipped under schemas/ are embedded into the binary at build
/// time; these return the parsed documents.
const Json& instance_schema();
const Json& report_schema();

/// Structural validator for the schema subset the shipped documents use:
/// type, const, enum, required, properties, additionalProperties, items,
/// minItems/maxItems, minimum/maximum (plus exclusive forms), oneOf and
/// local $ref.
void validate(const Json& schema_root, const Json& schema_node,
              const Json& value, const std::string& path);

/// Envelope plus kind-specific payload validation.
void validate_instance(const Json& instance);

/// Every emitted report is checked against the report schema before it is
/// printed.
void validate_report(const Json& report);

}  // namespace cnp::cli
