// SPDX-License-Identifier: Apache-2.0
#include "cnp/cli/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace cnp::cli {

namespace {

// 53-bit uniform in [0, 1); independent of std::uniform_real_distribution
// internals so identical seeds give identical samples everywhere.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex polar_point(double r, double theta) {
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

GeneratorSpec parse_generator(const Json& j) {
  GeneratorSpec g;
  const std::string type = j["type"].get<std::string>();
  if (type == "circle") {
    g.type = GeneratorSpec::Type::circle;
  } else if (type == "grid") {
    g.type = GeneratorSpec::Type::grid;
  } else if (type == "random") {
    g.type = GeneratorSpec::Type::random;
  } else if (type == "annulus") {
    g.type = GeneratorSpec::Type::annulus;
  } else {
    g.type = GeneratorSpec::Type::annulus_grid;
  }
  if (j.contains("count")) g.count = j["count"].get<int>();
  if (j.contains("radius")) g.radius = j["radius"].get<double>();
  if (j.contains("radial")) g.radial = j["radial"].get<int>();
  if (j.contains("angular")) g.angular = j["angular"].get<int>();
  if (j.contains("outer")) g.outer = j["outer"].get<double>();
  if (j.contains("inner")) g.inner = j["inner"].get<double>();
  if (j.contains("max_radius")) g.max_radius = j["max_radius"].get<double>();
  if (j.contains("seed")) g.seed = j["seed"].get<std::uint64_t>();
  return g;
}

std::vector<Complex> generate_points(const GeneratorSpec& g) {
  std::vector<Complex> pts;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  switch (g.type) {
    case GeneratorSpec::Type::circle: {
      for (int k = 0; k < g.count; ++k) {
        pts.push_back(polar_point(g.radius, two_pi * k / g.count));
      }
      break;
    }
    case GeneratorSpec::Type::grid: {
      for (int k = 0; k < g.radial; ++k) {
        const double r = g.outer * (k + 1) / g.radial;
        for (int t = 0; t < g.angular; ++t) {
          pts.push_back(polar_point(r, two_pi * t / g.angular));
        }
      }
      break;
    }
    case GeneratorSpec::Type::annulus_grid: {
      if (!(g.inner < g.outer)) {
        throw SchemaError("input: annulus needs inner < outer");
      }
      for (int k = 0; k < g.radial; ++k) {
        const double r =
            g.inner + (g.outer - g.inner) * (k + 1) / g.radial;
        for (int t = 0; t < g.angular; ++t) {
          pts.push_back(polar_point(r, two_pi * t / g.angular));
        }
      }
      break;
    }
    case GeneratorSpec::Type::random: {
      std::mt19937_64 rng(g.seed);
      for (int k = 0; k < g.count; ++k) {
        const double r = g.max_radius * std::sqrt(next_unit(rng));
        pts.push_back(polar_point(r, two_pi * next_unit(rng)));
      }
      break;
    }
    case GeneratorSpec::Type::annulus: {
      if (!(g.inner < g.outer)) {
        throw SchemaError("input: annulus needs inner < outer");
      }
      std::mt19937_64 rng(g.seed);
      const double a2 = g.inner * g.inner;
      const double b2 = g.outer * g.outer;
      for (int k = 0; k < g.count; ++k) {
        const double r = std::sqrt(a2 + (b2 - a2) * next_unit(rng));
        pts.push_back(polar_point(r, two_pi * next_unit(rng)));
      }
      break;
    }
  }
  return pts;
}

ResolvedSample resolve_sample(const Json& sample,
                              std::optional<std::uint64_t> seed_override) {
  ResolvedSample out;
  const bool has_points = sample.contains("points");
  const bool has_generator = sample.contains("generator");
  if (has_points == has_generator) {
    throw SchemaError(
        "input: sample requires exactly one of 'points' or 'generator'");
  }
  if (has_points) {
    for (const Json& p : sample["points"]) {
      out.points.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    if (seed_override) out.seed = *seed_override;
    return out;
  }
  GeneratorSpec g = parse_generator(sample["generator"]);
  if (seed_override) g.seed = *seed_override;
  out.points = generate_points(g);
  out.seed = g.seed;
  return out;
}

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (std::size_t i = n; i-- > 1;) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(idx[i], idx[j]);
  }
  return idx;
}

}  // namespace cnp::cli
