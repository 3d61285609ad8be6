// SPDX-License-Identifier: Apache-2.0
#include "cnp/hermitian.hpp"

#include <cmath>
#include <sstream>

namespace cnp {

namespace {

void require_finite(const Eigen::MatrixXcd& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw DomainError("linalg: non-finite matrix entry");
      }
    }
  }
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solve_hermitian(
    const HermitianMatrix& h, bool with_vectors) {
  if (h.order() == 0) throw Error("linalg: empty matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      h.matrix(),
      with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw Error("linalg: eigensolver failed to converge");
  }
  return es;
}

}  // namespace

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DomainError("linalg: matrix not square");
  require_finite(m_);
  if (m_.size() > 0) {
    max_abs_ = m_.cwiseAbs().maxCoeff();
    const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * (1.0 + max_abs_)) {
      std::ostringstream msg;
      msg << "linalg: matrix is not Hermitian (max asymmetry " << asym << ")";
      throw DomainError(msg.str());
    }
    m_ = (0.5 * (m_ + m_.adjoint())).eval();
    max_abs_ = m_.cwiseAbs().maxCoeff();
  }
}

double min_eigenvalue(const HermitianMatrix& h) {
  return solve_hermitian(h, /*with_vectors=*/false).eigenvalues()(0);
}

bool is_psd(const HermitianMatrix& h, double tol) {
  if (!(tol >= 0.0)) throw DomainError("linalg: negative tolerance");
  return min_eigenvalue(h) >= -tol * (1.0 + h.max_abs());
}

LowRankFactor low_rank_factor(const HermitianMatrix& h, double tol) {
  if (!(tol >= 0.0)) throw DomainError("linalg: negative tolerance");
  const auto es = solve_hermitian(h, /*with_vectors=*/true);
  const Eigen::Index n = h.order();
  const Eigen::VectorXd evals = es.eigenvalues();  // ascending
  const double scale = tol * (1.0 + h.max_abs());

  if (evals(0) < -scale) {
    std::ostringstream msg;
    msg << "linalg: not positive semidefinite (lambda_min " << evals(0) << ")";
    throw NotPsdError(msg.str(), evals(0));
  }

  LowRankFactor out;
  out.spectrum = evals.reverse();
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (evals(k) > scale) ++rank;
  }
  out.rank = rank;
  out.factor.resize(n, rank);
  for (Eigen::Index c = 0; c < rank; ++c) {
    const Eigen::Index k = n - 1 - c;  // descending order
    out.factor.col(c) = es.eigenvectors().col(k) * std::sqrt(evals(k));
  }

  // Gauge: first non-negligible entry of each column made real positive,
  // so factors of equal matrices are reproducible.
  for (Eigen::Index c = 0; c < rank; ++c) {
    const double col_max = out.factor.col(c).cwiseAbs().maxCoeff();
    if (col_max == 0.0) continue;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double a = std::abs(out.factor(i, c));
      if (a > 1e-12 * col_max) {
        out.factor.col(c) *= std::conj(out.factor(i, c)) / a;
        break;
      }
    }
  }
  return out;
}

}  // namespace cnp
