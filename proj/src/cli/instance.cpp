// SPDX-License-Identifier: Apache-2.0
#include "cnp/cli/instance.hpp"

#include <fstream>
#include <sstream>

namespace cnp::cli {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Instance load_instance(const std::string& text) {
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("input: JSON parse error: ") + e.what());
  }
  validate_instance(parsed);

  Instance out;
  out.kind = parsed["kind"].get<std::string>();
  out.payload = parsed["payload"];
  std::ostringstream digest;
  digest << "fnv1a64:" << std::hex << fnv1a64(parsed.dump());
  out.digest = digest.str();
  return out;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("input: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

Complex parse_complex(const Json& j) {
  return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

std::vector<Complex> parse_complex_list(const Json& j) {
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(parse_complex(v));
  return out;
}

}  // namespace

KernelSpec parse_kernel(const Json& j) {
  const std::string variant = j["variant"].get<std::string>();
  if (variant == "szego") {
    return KernelSpec::szego();
  }
  if (variant == "drury_arveson") {
    if (!j.contains("d")) {
      throw SchemaError("input: drury_arveson kernel requires 'd'");
    }
    return KernelSpec::drury_arveson(j["d"].get<int>());
  }
  if (variant == "embedding") {
    if (!j.contains("j") || !j.contains("base")) {
      throw SchemaError("input: embedding kernel requires 'j' and 'base'");
    }
    return KernelSpec::embedding(parse_complex_list(j["j"]),
                                 j["base"].get<std::size_t>());
  }
  if (!j.contains("matrix")) {
    throw SchemaError("input: gram kernel requires 'matrix'");
  }
  const Json& rows = j["matrix"];
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != n) {
      throw SchemaError("input: gram matrix must be square");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = parse_complex(rows[static_cast<std::size_t>(r)]
                                  [static_cast<std::size_t>(c)]);
    }
  }
  return KernelSpec::gram(HermitianMatrix(std::move(m)));
}

PointSet parse_points(const Json& points, const KernelSpec& spec) {
  const bool ball_kernel =
      std::holds_alternative<DruryArvesonVariant>(spec.variant());
  if (!ball_kernel) {
    std::vector<Complex> zs;
    zs.reserve(points.size());
    for (const Json& p : points) {
      if (!p.empty() && p[0].is_array()) {
        if (p.size() != 1) {
          throw SchemaError(
              "input: disk kernels take one-dimensional points");
        }
        zs.push_back(parse_complex(p[0]));
      } else {
        zs.push_back(parse_complex(p));
      }
    }
    return PointSet::disk(zs);
  }

  std::vector<Eigen::VectorXcd> pts;
  pts.reserve(points.size());
  for (const Json& p : points) {
    if (p.empty() || !p[0].is_array()) {
      // A bare complex is a 1-dimensional ball point.
      Eigen::VectorXcd v(1);
      v(0) = parse_complex(p);
      pts.push_back(std::move(v));
      continue;
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(p.size()));
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      v(k) = parse_complex(p[static_cast<std::size_t>(k)]);
    }
    pts.push_back(std::move(v));
  }
  return PointSet::ball(std::move(pts));
}

TestFunction parse_test_function(const Json& j) {
  const std::string type = j["type"].get<std::string>();
  if (type == "polynomial") {
    if (!j.contains("coeffs")) {
      throw SchemaError("input: polynomial test function requires 'coeffs'");
    }
    return TestFunction::polynomial(parse_complex_list(j["coeffs"]));
  }
  if (!j.contains("zeros")) {
    throw SchemaError("input: blaschke test function requires 'zeros'");
  }
  return TestFunction::blaschke(parse_complex_list(j["zeros"]));
}

DiskGrid parse_grid(const Json& j) {
  DiskGrid grid;
  if (j.contains("radial")) grid.radial = j["radial"].get<int>();
  if (j.contains("angular")) grid.angular = j["angular"].get<int>();
  if (j.contains("outer_radius")) {
    grid.outer_radius = j["outer_radius"].get<double>();
  }
  return grid;
}

PlanarSet parse_planar_set(const Json& j) {
  std::vector<PlanarComponent> components;
  for (const Json& c : j["components"]) {
    const std::string type = c["type"].get<std::string>();
    if (type == "point") {
      if (!c.contains("z")) {
        throw SchemaError("input: point component requires 'z'");
      }
      components.push_back(PointComponent{parse_complex(c["z"])});
    } else if (type == "disk") {
      if (!c.contains("center") || !c.contains("radius")) {
        throw SchemaError(
            "input: disk component requires 'center' and 'radius'");
      }
      components.push_back(
          DiskComponent{parse_complex(c["center"]), c["radius"].get<double>()});
    } else {
      if (!c.contains("a") || !c.contains("b")) {
        throw SchemaError("input: segment component requires 'a' and 'b'");
      }
      components.push_back(
          SegmentComponent{parse_complex(c["a"]), parse_complex(c["b"])});
    }
  }
  return PlanarSet::of(std::move(components));
}

Complex parse_complex_literal(const std::string& text) {
  // Forms: "0.5", "0.5+0.3i", "-0.2-0.4i", "0.3i".
  if (text.empty()) throw SchemaError("input: empty complex literal");
  std::string s = text;
  double re = 0.0, im = 0.0;
  if (s.back() == 'i') {
    s.pop_back();
    // Split at the last +/- that is not an exponent sign or leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    try {
      if (split == std::string::npos) {
        im = s.empty() ? 1.0 : std::stod(s);
      } else {
        re = std::stod(s.substr(0, split));
        const std::string rest = s.substr(split);
        im = (rest == "+") ? 1.0 : (rest == "-") ? -1.0 : std::stod(rest);
      }
    } catch (const std::exception&) {
      throw SchemaError("input: bad complex literal '" + text + "'");
    }
  } else {
    try {
      re = std::stod(s);
    } catch (const std::exception&) {
      throw SchemaError("input: bad complex literal '" + text + "'");
    }
  }
  return {re, im};
}

}  // namespace cnp::cli
