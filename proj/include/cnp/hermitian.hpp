// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "cnp/errors.hpp"

namespace cnp {

using Complex = std::complex<double>;

/// Relative tolerance used by every PSD-dependent operation that does not
/// receive an explicit override. All thresholds scale as tol * (1 + max|H|).
inline constexpr double kDefaultTol = 1e-9;

/// Dense complex Hermitian matrix.
///
/// Construction symmetrizes H <- (H + H^*)/2 and rejects inputs whose
/// asymmetry exceeds 1e-12 relative to the entry scale, so conjugate-symmetry
/// bugs in kernel evaluation surface here instead of being averaged away.
/// The diagonal of the stored matrix is exactly real. Order zero is allowed
/// (the eigenvalue operations reject it).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Eigen::MatrixXcd m);

  Eigen::Index order() const { return m_.rows(); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  /// Largest entry modulus (0 for the empty matrix).
  double max_abs() const { return max_abs_; }

  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

 private:
  Eigen::MatrixXcd m_;
  double max_abs_ = 0.0;
};

/// Smallest eigenvalue, via full Hermitian eigendecomposition.
double min_eigenvalue(const HermitianMatrix& h);

/// True iff min_eigenvalue(h) >= -tol * (1 + max|h|). tol must be >= 0.
bool is_psd(const HermitianMatrix& h, double tol = kDefaultTol);

/// Result of truncated eigenfactorization H ~= factor * factor^*.
struct LowRankFactor {
  Eigen::Index rank = 0;
  /// n x rank, columns ordered by descending eigenvalue; each column gauged
  /// so that its first non-negligible entry is real positive.
  Eigen::MatrixXcd factor;
  /// Full eigenvalue spectrum, descending, for rank diagnostics.
  Eigen::VectorXd spectrum;
};

/// Factor a PSD matrix as B * B^* with rank = #{eigenvalues > tol*(1+max|H|)}.
/// Throws NotPsdError (carrying lambda_min) when h is not PSD within tol.
LowRankFactor low_rank_factor(const HermitianMatrix& h,
                              double tol = kDefaultTol);

}  // namespace cnp
