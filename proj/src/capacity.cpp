// SPDX-License-Identifier: Apache-2.0
#include "cnp/capacity.hpp"

#include <cmath>

#include "cnp/pick.hpp"

namespace cnp {

namespace {

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string("capacity: non-finite ") + what);
  }
}

double component_capacity(const PlanarComponent& c) {
  return std::visit(
      [](const auto& comp) -> double {
        using T = std::decay_t<decltype(comp)>;
        if constexpr (std::is_same_v<T, PointComponent>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, DiskComponent>) {
          return comp.radius;
        } else {
          return std::abs(comp.a - comp.b) / 4.0;
        }
      },
      c);
}

}  // namespace

PlanarSet PlanarSet::of(std::vector<PlanarComponent> components) {
  for (const PlanarComponent& c : components) {
    std::visit(
        [](const auto& comp) {
          using T = std::decay_t<decltype(comp)>;
          if constexpr (std::is_same_v<T, PointComponent>) {
            require_finite(comp.z, "point");
          } else if constexpr (std::is_same_v<T, DiskComponent>) {
            require_finite(comp.center, "disk center");
            if (!(comp.radius >= 0.0) || !std::isfinite(comp.radius)) {
              throw DomainError("capacity: disk radius must be >= 0");
            }
          } else {
            require_finite(comp.a, "segment endpoint");
            require_finite(comp.b, "segment endpoint");
          }
        },
        c);
  }
  return PlanarSet{std::move(components)};
}

CapacityResult analytic_capacity(const PlanarSet& s) {
  CapacityResult out;
  bool all_points = true;
  for (const PlanarComponent& c : s.components) {
    if (!std::holds_alternative<PointComponent>(c)) all_points = false;
  }
  if (all_points) {
    out.supported = true;
    out.value = 0.0;
    out.source = CapacitySource::removability;
    return out;
  }
  if (s.components.size() == 1) {
    out.supported = true;
    out.value = component_capacity(s.components.front());
    out.source = CapacitySource::literature;
    return out;
  }
  out.supported = false;
  double bound = 0.0;
  for (const PlanarComponent& c : s.components) bound += component_capacity(c);
  out.upper_bound = bound;
  return out;
}

std::optional<bool> is_removable(const PlanarSet& s) {
  const CapacityResult r = analytic_capacity(s);
  if (!r.supported) return std::nullopt;
  return r.value == 0.0;
}

RemovabilityReport removability_experiment(
    const std::vector<Complex>& punctures, const DiskSample& sample,
    const TestFunction& fn, double tol, std::vector<std::size_t> sizes,
    double norm_tol) {
  if (!(tol >= 0.0)) throw DomainError("capacity: tolerance must be >= 0");
  for (const Complex p : punctures) {
    require_finite(p, "puncture");
    if (std::abs(p) >= 1.0) {
      throw DomainError("capacity: puncture lies outside the open disk");
    }
    for (const Complex a : sample.points) {
      if (p == a) {
        throw Error("capacity: puncture collides with a sample point");
      }
    }
  }
  if (sample.points.empty()) throw DomainError("capacity: empty sample");
  const double bound = [&] {
    double sup = 0.0;
    for (const Complex z : DiskGrid{}.points()) {
      sup = std::max(sup, std::abs(fn(z)));
    }
    return sup;
  }();
  if (bound > 1.0 + 1e-12) {
    throw DomainError("capacity: test function exceeds unit bound on the grid");
  }

  if (sizes.empty()) sizes.push_back(sample.points.size());
  for (const std::size_t n : sizes) {
    if (n < 1 || n > sample.points.size()) {
      throw DomainError("capacity: subsample size out of range");
    }
  }

  RemovabilityReport report;
  report.tol = tol;
  const KernelSpec szego = KernelSpec::szego();
  for (const std::size_t n : sizes) {
    const std::vector<Complex> pts(sample.points.begin(),
                                   sample.points.begin() +
                                       static_cast<std::ptrdiff_t>(n));
    std::vector<Complex> targets(n);
    for (std::size_t i = 0; i < n; ++i) targets[i] = fn(pts[i]);

    // The punctured-domain run restricts the Hardy kernel to D \ E. On the
    // finite sample the restriction is the identical gram, but both runs are
    // executed independently so the blindness is measured, not assumed.
    const PickResult on_disk = min_multiplier_norm(
        InterpolationProblem::scalar(szego, PointSet::disk(pts), targets),
        norm_tol);
    const PickResult on_punctured = min_multiplier_norm(
        InterpolationProblem::scalar(szego, PointSet::disk(pts), targets),
        norm_tol);

    RemovabilityStep step;
    step.n = n;
    step.norm_punctured = on_punctured.min_norm;
    step.norm_unpunctured = on_disk.min_norm;
    step.gap = std::fabs(step.norm_punctured - step.norm_unpunctured);
    report.steps.push_back(step);
  }

  report.pass = true;
  for (const RemovabilityStep& s : report.steps) {
    if (!(s.gap <= tol)) report.pass = false;
  }
  return report;
}

}  // namespace cnp
