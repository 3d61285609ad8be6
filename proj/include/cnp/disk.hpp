// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "cnp/hermitian.hpp"

namespace cnp {

/// Pseudo-hyperbolic distance |(z - w) / (1 - conj(w) z)| on the open disk.
double mobius_distance(Complex z, Complex w);

/// atanh of mobius_distance.
double caratheodory_distance(Complex z, Complex w);

/// Asymptotic radius model a_n = 1 - c / n^p for tail classification.
struct TailModel {
  double c = 1.0;
  double p = 1.0;
};

/// Finite disk sample with an optional tail model.
struct DiskSample {
  std::vector<Complex> points;
  std::optional<TailModel> tail;

  static DiskSample of(std::vector<Complex> points,
                       std::optional<TailModel> tail = std::nullopt);
};

enum class BlaschkeClass { divergent, convergent, unknown };

struct BlaschkeSum {
  double partial = 0.0;  // sum of (1 - |a|) over the listed points
  BlaschkeClass classification = BlaschkeClass::unknown;
};

/// Partial Blaschke sum and tail classification: the sum diverges iff the
/// sample is a uniqueness set for the Hardy space.
BlaschkeSum blaschke_sum(const DiskSample& s);

/// Finite Blaschke product prod (a - z)/(1 - conj(a) z) * |a|/a over the
/// zero list. Zeros must be nonzero (the normalizing factor is undefined
/// at 0) and inside the disk.
Complex blaschke_product(const std::vector<Complex>& zeros, Complex z);

/// Polar evaluation grid: origin plus radial x angular points up to
/// outer_radius. Sup norms of the test families in scope live near the
/// boundary, so outer_radius bounds the truncation error explicitly.
struct DiskGrid {
  int radial = 200;
  int angular = 256;
  double outer_radius = 0.995;

  std::vector<Complex> points() const;
};

/// Disk-valued test function: polynomial in z (coefficient list, constant
/// first) or finite Blaschke product (zero list).
class TestFunction {
 public:
  static TestFunction polynomial(std::vector<Complex> coeffs);
  static TestFunction blaschke(std::vector<Complex> zeros);

  Complex operator()(Complex z) const;
  const std::string& describe() const { return name_; }

 private:
  TestFunction(bool poly, std::vector<Complex> data, std::string name)
      : poly_(poly), data_(std::move(data)), name_(std::move(name)) {}

  bool poly_ = true;
  std::vector<Complex> data_;
  std::string name_;
};

/// Per-function sample-sup over grid-sup ratios, clipped to [0, 1].
std::vector<double> dominating_ratios(const DiskSample& s,
                                      const std::vector<TestFunction>& fns,
                                      const DiskGrid& grid);

/// min over the family of (sup over sample / sup over grid), in [0, 1].
double dominating_ratio(const DiskSample& s,
                        const std::vector<TestFunction>& fns,
                        const DiskGrid& grid);

/// Pairwise sup over the family of d_D(f(x), f(y)): a certified lower bound
/// for the Mobius pseudo-distance of the sampled domain. Family members must
/// map into the disk (checked on the grid and at the points, error names the
/// offender).
Eigen::MatrixXd dx_lower_bound(const std::vector<Complex>& pts,
                               const std::vector<TestFunction>& fns,
                               const DiskGrid& grid = DiskGrid{});

}  // namespace cnp
