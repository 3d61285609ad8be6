// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "cnp/capacity.hpp"
#include "cnp/cli/schema.hpp"
#include "cnp/kernels.hpp"

namespace cnp::cli {

/// A parsed, schema-validated problem instance.
struct Instance {
  std::string kind;
  Json payload;
  std::string digest;  // fnv1a64 over the canonical instance text
};

std::uint64_t fnv1a64(const std::string& bytes);

/// Parse + validate an instance from JSON text. Parse errors surface the
/// byte position; validation errors carry the JSON path.
Instance load_instance(const std::string& text);
Instance load_instance_file(const std::string& path);

// Payload element parsers (schema validation has already shaped the JSON;
// these enforce the cross-field rules and build the core objects).
Complex parse_complex(const Json& j);
KernelSpec parse_kernel(const Json& j);
PointSet parse_points(const Json& points, const KernelSpec& spec);
TestFunction parse_test_function(const Json& j);
DiskGrid parse_grid(const Json& j);
PlanarSet parse_planar_set(const Json& j);

/// "a+bi" / "a-bi" / "a" / "bi" forms used by command-line flags.
Complex parse_complex_literal(const std::string& text);

}  // namespace cnp::cli
