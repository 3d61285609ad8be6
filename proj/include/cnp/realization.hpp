// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "cnp/kernels.hpp"

namespace cnp {

/// Finite-scale ball embedding recovered from a kernel sample: rows b(x_i)
/// in C^d with ||b(x_i)|| < 1, b(base) = 0 and
/// k_base(x, y) = 1 / (1 - <b(x), b(y)>) up to reconstruction_error.
struct EmbeddingRealization {
  int d = 0;
  Eigen::MatrixXcd b;  // n x d, row i = b(x_i)
  PointId base = 0;
  double reconstruction_error = 0.0;
  Eigen::VectorXd spectrum;  // eigenvalues of 1 - 1/k_base, descending
};

/// Recover a ball embedding from the kernel on the sample. Throws
/// NotPsdError("... not CNP on this sample") when 1 - 1/k_base fails the
/// PSD test within tol: that failure is the finite-sample CNP criterion.
EmbeddingRealization realize(const KernelSpec& spec, const PointSet& pts,
                             PointId base, double tol = kDefaultTol);

/// Max entrywise deviation |k_base(x,y) - 1/(1 - j(x) conj(j(y)))| between
/// the normalized kernel gram and the Szego gram of the j-images. A value
/// within 1e-10 certifies the unitary identification on the sample.
double verify_unitary_gram(const KernelSpec& spec, const PointSet& pts,
                           PointId base, const std::vector<Complex>& j);

/// Values of the multiplier <b(.), xi> for a unit vector xi in C^d.
std::vector<Complex> xi_multiplier_values(const EmbeddingRealization& r,
                                          const Eigen::VectorXcd& xi);

/// g(t) = t^4/4 - t^3 + t^2/2 + t + 1/4, nondecreasing on [0, 1], g(1) = 1.
double g_poly(double t);

}  // namespace cnp
