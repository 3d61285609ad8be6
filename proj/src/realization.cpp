// SPDX-License-Identifier: Apache-2.0
#include "cnp/realization.hpp"

#include <cmath>
#include <sstream>

namespace cnp {

EmbeddingRealization realize(const KernelSpec& spec, const PointSet& pts,
                             PointId base, double tol) {
  const HermitianMatrix norm = normalize(spec, pts, base);
  const Eigen::Index n = norm.order();

  Eigen::MatrixXcd f(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex k = norm(i, j);
      if (k == Complex(0.0, 0.0)) {
        throw Error("realization: normalized kernel entry vanishes");
      }
      f(i, j) = 1.0 - 1.0 / k;
    }
  }

  HermitianMatrix fh(std::move(f));
  LowRankFactor lrf;
  try {
    lrf = low_rank_factor(fh, tol);
  } catch (const NotPsdError& e) {
    std::ostringstream msg;
    msg << "realization: kernel is not CNP on this sample (lambda_min "
        << e.lambda_min() << ")";
    throw NotPsdError(msg.str(), e.lambda_min());
  }

  EmbeddingRealization out;
  out.d = static_cast<int>(lrf.rank);
  out.b = std::move(lrf.factor);
  out.base = base;
  out.spectrum = std::move(lrf.spectrum);

  for (Eigen::Index i = 0; i < n; ++i) {
    if (out.b.row(i).norm() >= 1.0) {
      throw Error("realization: embedding row escaped the unit ball");
    }
  }
  if (out.b.row(static_cast<Eigen::Index>(base)).norm() > 1e-10) {
    throw Error("realization: base row of the embedding is not zero");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if ((out.b.row(i) - out.b.row(j)).norm() <= 1e-12) {
        throw Error("realization: embedding is not injective on the sample");
      }
    }
  }

  double err = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // <b_i, b_j>, conjugate-linear in the second slot.
      const Complex inner = out.b.row(j).dot(out.b.row(i));
      err = std::max(err, std::abs(norm(i, j) - 1.0 / (1.0 - inner)));
    }
  }
  out.reconstruction_error = err;
  return out;
}

double verify_unitary_gram(const KernelSpec& spec, const PointSet& pts,
                           PointId base, const std::vector<Complex>& j) {
  if (j.size() != pts.size()) {
    throw DomainError("realization: one disk value required per point");
  }
  if (base >= j.size()) {
    throw DomainError("realization: base point id out of range");
  }
  for (PointId i = 0; i < j.size(); ++i) {
    if (!std::isfinite(j[i].real()) || !std::isfinite(j[i].imag()) ||
        std::abs(j[i]) >= 1.0) {
      std::ostringstream msg;
      msg << "realization: disk value " << i << " lies outside the open disk";
      throw DomainError(msg.str());
    }
    for (PointId k = i + 1; k < j.size(); ++k) {
      if (j[i] == j[k]) {
        throw DomainError("realization: disk values are not injective");
      }
    }
  }
  if (std::abs(j[base]) > 1e-12) {
    throw DomainError("realization: base point must map to 0");
  }

  const HermitianMatrix norm = normalize(spec, pts, base);
  double dev = 0.0;
  for (Eigen::Index a = 0; a < norm.order(); ++a) {
    for (Eigen::Index c = 0; c < norm.order(); ++c) {
      const Complex szego = 1.0 / (1.0 - j[a] * std::conj(j[c]));
      dev = std::max(dev, std::abs(norm(a, c) - szego));
    }
  }
  return dev;
}

std::vector<Complex> xi_multiplier_values(const EmbeddingRealization& r,
                                          const Eigen::VectorXcd& xi) {
  if (xi.size() != r.d) {
    throw DomainError("realization: xi dimension does not match the embedding");
  }
  if (std::fabs(xi.norm() - 1.0) > 1e-12) {
    throw DomainError("realization: xi must be a unit vector");
  }
  std::vector<Complex> values(static_cast<std::size_t>(r.b.rows()));
  for (Eigen::Index i = 0; i < r.b.rows(); ++i) {
    // <b(x_i), xi>, conjugate-linear in xi.
    values[static_cast<std::size_t>(i)] = xi.dot(r.b.row(i).transpose());
  }
  return values;
}

double g_poly(double t) {
  return (((0.25 * t - 1.0) * t + 0.5) * t + 1.0) * t + 0.25;
}

}  // namespace cnp
