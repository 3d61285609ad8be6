// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>
#include <vector>

#include "cnp/kernels.hpp"

namespace cnp {

/// Interpolation data over a kernel sample: scalar targets w_i or uniform
/// m x m block targets W_i, one per point.
class InterpolationProblem {
 public:
  static InterpolationProblem scalar(KernelSpec spec, PointSet pts,
                                     std::vector<Complex> targets);
  static InterpolationProblem blocks(KernelSpec spec, PointSet pts,
                                     std::vector<Eigen::MatrixXcd> targets);

  const KernelSpec& spec() const { return spec_; }
  const PointSet& points() const { return pts_; }
  std::size_t n() const { return pts_.size(); }
  Eigen::Index block_order() const { return m_; }
  bool has_scalar_targets() const { return blocks_.empty() || m_ == 1; }
  const std::vector<Eigen::MatrixXcd>& block_targets() const {
    return blocks_;
  }

 private:
  InterpolationProblem(KernelSpec spec, PointSet pts,
                       std::vector<Eigen::MatrixXcd> blocks, Eigen::Index m);

  KernelSpec spec_;
  PointSet pts_;
  std::vector<Eigen::MatrixXcd> blocks_;  // always stored as m x m blocks
  Eigen::Index m_ = 1;
};

/// Solution record for a minimal-norm query.
struct PickResult {
  bool feasible = false;   // min_norm <= 1 + tol
  double min_norm = 0.0;   // least t with the Pick matrix at t PSD
  double certificate = 0.0;  // min eigenvalue of the Pick matrix at min_norm
  int iterations = 0;        // PSD tests performed
};

/// Block matrix [(t^2 I - W_i W_j^*) k(x_i, x_j)], order m*n.
/// At t = 1 this is the interpolation feasibility certificate.
HermitianMatrix pick_matrix(const InterpolationProblem& p, double t);

/// PSD test of pick_matrix(p, 1).
bool is_solvable(const InterpolationProblem& p, double tol = kDefaultTol);

/// Least t with pick_matrix(p, t) PSD, by bisection over the upward-closed
/// feasible half-line. Bracket width at return is <= tol. The PSD decision
/// uses a fixed threshold psd_tol * (1 + scale of the seed matrix), much
/// sharper than the bracket so the returned t is bisection-limited.
PickResult min_multiplier_norm(const InterpolationProblem& p,
                               double tol = 1e-9, double psd_tol = 1e-12);

/// Numerical solution of the two-point extremal problem
/// sup{ Re phi(x) : ||phi|| <= 1, phi(base) = 0 }, with the closed form
/// sqrt(1 - 1/k_base(x, x)) reported alongside for telemetry.
struct ExtremalResult {
  double value = 0.0;        // bisection result
  double closed_form = 0.0;  // sqrt(1 - 1/k_base(x,x))
  double gap = 0.0;          // |value - closed_form|
  int iterations = 0;
};

ExtremalResult extremal_value(const KernelSpec& spec, const PointSet& pts,
                              PointId base, PointId x, double tol = 1e-9);

/// PSD test of [(1 - v_i conj(v_j)) k(x_i, x_j)]: whether the sampled values
/// are consistent with a contractive multiplier.
bool is_contractive_multiplier(const KernelSpec& spec, const PointSet& pts,
                               const std::vector<Complex>& values,
                               double tol = kDefaultTol);

}  // namespace cnp
