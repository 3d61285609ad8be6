// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cnp/cli/schema.hpp"
#include "cnp/hermitian.hpp"

namespace cnp::cli {

/// Deterministic disk-sample generators for experiment configs. Random
/// generators draw from a seeded mt19937_64 through an explicit bit-to-double
/// mapping so results do not depend on library distribution internals.
struct GeneratorSpec {
  enum class Type { circle, grid, random, annulus, annulus_grid };
  Type type = Type::circle;
  int count = 100;
  double radius = 0.9;      // circle
  int radial = 10;          // grid / annulus_grid
  int angular = 64;         // grid / annulus_grid
  double outer = 0.995;     // grid / annulus / annulus_grid
  double inner = 0.5;       // annulus / annulus_grid
  double max_radius = 0.9;  // random
  std::uint64_t seed = 0;
};

GeneratorSpec parse_generator(const Json& j);

std::vector<Complex> generate_points(const GeneratorSpec& g);

/// Sample resolution: explicit points, or a generator (seed optionally
/// overridden by the command line). Returns the points and the effective
/// seed when a generator was used.
struct ResolvedSample {
  std::vector<Complex> points;
  std::optional<std::uint64_t> seed;
};

ResolvedSample resolve_sample(const Json& sample,
                              std::optional<std::uint64_t> seed_override);

/// Seeded Fisher-Yates permutation of indices 0..n-1.
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed);

}  // namespace cnp::cli
