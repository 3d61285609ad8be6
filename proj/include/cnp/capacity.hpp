// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cnp/disk.hpp"

namespace cnp {

/// Finitely described compact subsets of the plane.
struct PointComponent {
  Complex z;
};
struct DiskComponent {
  Complex center;
  double radius = 0.0;  // >= 0
};
struct SegmentComponent {
  Complex a;
  Complex b;
};
using PlanarComponent =
    std::variant<PointComponent, DiskComponent, SegmentComponent>;

struct PlanarSet {
  std::vector<PlanarComponent> components;

  static PlanarSet of(std::vector<PlanarComponent> components);
};

/// Provenance of a closed-form capacity value: zero capacity of finite sets
/// follows from removability; the disk and segment values are classical
/// facts recorded from the literature.
enum class CapacitySource { removability, literature };

struct CapacityResult {
  bool supported = false;
  double value = 0.0;                 // meaningful when supported
  std::optional<double> upper_bound;  // sum of component capacities otherwise
  CapacitySource source = CapacitySource::removability;
};

/// Closed-form analytic capacity where one exists: finite point sets have
/// capacity 0, a disk of radius r has capacity r, a segment of length L has
/// capacity L/4. Everything else reports `unsupported` with the subadditive
/// upper bound attached.
CapacityResult analytic_capacity(const PlanarSet& s);

/// true iff the capacity is 0 among supported forms; nullopt otherwise.
std::optional<bool> is_removable(const PlanarSet& s);

struct RemovabilityStep {
  std::size_t n = 0;
  double norm_punctured = 0.0;
  double norm_unpunctured = 0.0;
  double gap = 0.0;
};

struct RemovabilityReport {
  std::vector<RemovabilityStep> steps;
  bool pass = false;
  double tol = 0.0;
};

/// Compare the minimal multiplier norm of data sampled from a test function
/// on the disk against the same data on the punctured disk. Finite Pick data
/// cannot see the punctures, so the gap is exactly zero; the report makes
/// that observable. `sizes` selects nested prefixes of the sample (empty
/// means the full sample only).
RemovabilityReport removability_experiment(
    const std::vector<Complex>& punctures, const DiskSample& sample,
    const TestFunction& fn, double tol,
    std::vector<std::size_t> sizes = {}, double norm_tol = 1e-12);

}  // namespace cnp
