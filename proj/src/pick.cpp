// SPDX-License-Identifier: Apache-2.0
#include "cnp/pick.hpp"

#include <cmath>

namespace cnp {

namespace {

// Pick matrix assembly from a precomputed gram so the bisection loop does
// not re-evaluate the kernel.
Eigen::MatrixXcd assemble(const HermitianMatrix& g,
                          const std::vector<Eigen::MatrixXcd>& blocks,
                          Eigen::Index m, double t) {
  const Eigen::Index n = g.order();
  const double t2 = t * t;
  Eigen::MatrixXcd out(m * n, m * n);
  if (m == 1) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const Complex w = blocks[i](0, 0) * std::conj(blocks[j](0, 0));
        out(i, j) = (t2 - w) * g(i, j);
      }
    }
    return out;
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out.block(i * m, j * m, m, m) =
          (t2 * id - blocks[i] * blocks[j].adjoint()) * g(i, j);
    }
  }
  return out;
}

double sigma_max(const Eigen::MatrixXcd& w) {
  if (w.rows() == 1 && w.cols() == 1) return std::abs(w(0, 0));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(w);
  return svd.singularValues()(0);
}

double lambda_min_of(const Eigen::MatrixXcd& m) {
  return min_eigenvalue(HermitianMatrix(m));
}

}  // namespace

InterpolationProblem::InterpolationProblem(
    KernelSpec spec, PointSet pts, std::vector<Eigen::MatrixXcd> blocks,
    Eigen::Index m)
    : spec_(std::move(spec)),
      pts_(std::move(pts)),
      blocks_(std::move(blocks)),
      m_(m) {
  if (blocks_.size() != pts_.size()) {
    throw DomainError("pick: one target required per point");
  }
  if (m_ < 1) throw DomainError("pick: target block order must be >= 1");
  for (const auto& w : blocks_) {
    if (w.rows() != m_ || w.cols() != m_) {
      throw DomainError("pick: inconsistent target block orders");
    }
    for (Eigen::Index c = 0; c < m_; ++c) {
      for (Eigen::Index r = 0; r < m_; ++r) {
        if (!std::isfinite(w(r, c).real()) || !std::isfinite(w(r, c).imag())) {
          throw DomainError("pick: non-finite target");
        }
      }
    }
  }
}

InterpolationProblem InterpolationProblem::scalar(KernelSpec spec,
                                                  PointSet pts,
                                                  std::vector<Complex> targets) {
  std::vector<Eigen::MatrixXcd> blocks(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    blocks[i] = Eigen::MatrixXcd::Constant(1, 1, targets[i]);
  }
  return InterpolationProblem(std::move(spec), std::move(pts),
                              std::move(blocks), 1);
}

InterpolationProblem InterpolationProblem::blocks(
    KernelSpec spec, PointSet pts, std::vector<Eigen::MatrixXcd> targets) {
  const Eigen::Index m = targets.empty() ? 1 : targets.front().rows();
  return InterpolationProblem(std::move(spec), std::move(pts),
                              std::move(targets), m);
}

HermitianMatrix pick_matrix(const InterpolationProblem& p, double t) {
  if (!(t >= 0.0)) throw DomainError("pick: norm parameter must be >= 0");
  const HermitianMatrix g = gram(p.spec(), p.points());
  return HermitianMatrix(assemble(g, p.block_targets(), p.block_order(), t));
}

bool is_solvable(const InterpolationProblem& p, double tol) {
  return is_psd(pick_matrix(p, 1.0), tol);
}

PickResult min_multiplier_norm(const InterpolationProblem& p, double tol,
                               double psd_tol) {
  if (p.n() == 0) throw Error("pick: empty problem");
  if (!(tol > 0.0)) throw DomainError("pick: bracket tolerance must be > 0");
  if (!(psd_tol >= 0.0)) throw DomainError("pick: negative tolerance");

  const HermitianMatrix g = gram(p.spec(), p.points());
  const Eigen::Index m = p.block_order();
  PickResult out;

  double lower = 0.0;
  for (const auto& w : p.block_targets()) lower = std::max(lower, sigma_max(w));

  // The feasibility threshold is anchored at the lower-seed matrix scale and
  // kept fixed across t. A threshold that grew with the t^2 entry scale
  // would eventually absorb the strictly negative eigenvalue of a genuinely
  // infeasible family and defeat the unbounded-bracket detection.
  const HermitianMatrix seed(assemble(g, p.block_targets(), m, lower));
  const double seed_lmin = min_eigenvalue(seed);
  const double theta = psd_tol * (1.0 + seed.max_abs());
  out.iterations = 1;

  const auto feasible = [&](double t) {
    ++out.iterations;
    return lambda_min_of(assemble(g, p.block_targets(), m, t)) >= -theta;
  };

  // Feasibility is upward-closed in t, so the diagonal necessity bound is
  // returned exactly when it is already feasible.
  if (seed_lmin >= -theta) {
    out.min_norm = lower;
    out.certificate = seed_lmin;
    out.feasible = out.min_norm <= 1.0 + tol;
    return out;
  }

  double lo = lower;
  double hi = lower + 1.0;
  int doublings = 0;
  while (!feasible(hi)) {
    lo = hi;
    hi = lower + 2.0 * (hi - lower);
    if (++doublings > 20) throw Error("pick: unbounded bracket");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  out.min_norm = hi;
  out.certificate = lambda_min_of(assemble(g, p.block_targets(), m, hi));
  out.feasible = out.min_norm <= 1.0 + tol;
  return out;
}

ExtremalResult extremal_value(const KernelSpec& spec, const PointSet& pts,
                              PointId base, PointId x, double tol) {
  if (x == base) throw Error("pick: degenerate extremal problem");
  if (!(tol > 0.0)) throw DomainError("pick: tolerance must be > 0");
  const HermitianMatrix g = gram(spec, pts);
  if (static_cast<Eigen::Index>(x) >= g.order() ||
      static_cast<Eigen::Index>(base) >= g.order()) {
    throw DomainError("pick: point id out of range");
  }
  if (g(x, base) == Complex(0.0, 0.0)) {
    throw Error("kernels: kernel vanishes against base point");
  }

  // Normalized diagonal at x; everything else about the two-point problem
  // is determined by it.
  const double kappa =
      g(x, x).real() * g(base, base).real() / std::norm(g(x, base));

  ExtremalResult out;
  out.closed_form = std::sqrt(std::max(0.0, 1.0 - 1.0 / kappa));

  // Two-point Pick matrix for targets (0, c) after normalization:
  // [[1, 1], [1, (1 - c^2) kappa]]. The entries are O(1), so a tight PSD
  // tolerance keeps the feasibility boundary sharp near small kappa.
  const auto boundary_matrix = [&](double c) {
    Eigen::MatrixXcd m(2, 2);
    m << 1.0, 1.0, 1.0, (1.0 - c * c) * kappa;
    return HermitianMatrix(std::move(m));
  };
  const auto lambda_min_at = [&](double c) {
    ++out.iterations;
    return min_eigenvalue(boundary_matrix(c));
  };

  double lo = 0.0;
  double hi = 1.0;
  double lmin_lo = lambda_min_at(lo);
  // Bisect to the bracket width, then keep halving until the matrix at the
  // returned value is singular within the certificate bound. The extra
  // phase matters when kappa is large: a fixed-width bracket would leave a
  // visibly nonsingular matrix at the boundary. The acceptance slack sits
  // just above the eigensolver noise (~1e-16 on these order-one entries);
  // a looser slack would drag the optimum visibly past the boundary when
  // the feasibility crossing is shallow (nearly coincident points).
  while (hi - lo > 1e-15 &&
         (hi - lo > tol || std::fabs(lmin_lo) > 5.0 * tol)) {
    const double mid = 0.5 * (lo + hi);
    const double lm = lambda_min_at(mid);
    if (lm >= -1e-14 * (1.0 + std::fabs((1.0 - mid * mid) * kappa))) {
      lo = mid;
      lmin_lo = lm;
    } else {
      hi = mid;
    }
  }

  out.value = lo;
  out.gap = std::fabs(out.value - out.closed_form);
  return out;
}

bool is_contractive_multiplier(const KernelSpec& spec, const PointSet& pts,
                               const std::vector<Complex>& values,
                               double tol) {
  if (values.size() != pts.size()) {
    throw DomainError("pick: one multiplier value required per point");
  }
  std::vector<Eigen::MatrixXcd> blocks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw DomainError("pick: non-finite multiplier value");
    }
    blocks[i] = Eigen::MatrixXcd::Constant(1, 1, values[i]);
  }
  const HermitianMatrix g = gram(spec, pts);
  return is_psd(HermitianMatrix(assemble(g, blocks, 1, 1.0)), tol);
}

}  // namespace cnp
