// SPDX-License-Identifier: Apache-2.0
#include "cnp/kernels.hpp"

#include <cmath>
#include <sstream>

namespace cnp {

namespace {

void require_finite(const Eigen::VectorXcd& v, const char* what) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v(k).real()) || !std::isfinite(v(k).imag())) {
      throw DomainError(std::string("kernels: non-finite ") + what);
    }
  }
}

// <x, y> in the paper's convention: linear in x, conjugate-linear in y.
Complex herm_inner(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  return y.dot(x);
}

[[noreturn]] void boundary_error(PointId id) {
  std::ostringstream msg;
  msg << "kernels: point " << id << " lies on or outside the domain boundary";
  throw DomainError(msg.str());
}

void check_ball(const PointSet& pts) {
  for (PointId i = 0; i < pts.size(); ++i) {
    if (pts.at(i).norm() >= 1.0) boundary_error(i);
  }
}

HermitianMatrix szego_gram_of(const std::vector<Complex>& zs) {
  const Eigen::Index n = static_cast<Eigen::Index>(zs.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = 1.0 / (1.0 - zs[i] * std::conj(zs[j]));
    }
  }
  return HermitianMatrix(std::move(g));
}

}  // namespace

PointSet::PointSet(std::vector<Eigen::VectorXcd> pts, Eigen::Index dim)
    : pts_(std::move(pts)), dim_(dim) {
  for (PointId i = 0; i < pts_.size(); ++i) {
    if (pts_[i].size() != dim_) {
      throw DomainError("kernels: point dimensions are not uniform");
    }
    require_finite(pts_[i], "point coordinate");
  }
  for (PointId i = 0; i < pts_.size(); ++i) {
    for (PointId j = i + 1; j < pts_.size(); ++j) {
      if (pts_[i] == pts_[j]) {
        std::ostringstream msg;
        msg << "kernels: repeated point (" << i << ", " << j << ")";
        throw DomainError(msg.str());
      }
    }
  }
}

PointSet PointSet::disk(const std::vector<Complex>& zs) {
  std::vector<Eigen::VectorXcd> pts(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    pts[i] = Eigen::VectorXcd::Constant(1, zs[i]);
  }
  return PointSet(std::move(pts), 1);
}

PointSet PointSet::ball(std::vector<Eigen::VectorXcd> pts) {
  const Eigen::Index dim = pts.empty() ? 1 : pts.front().size();
  if (dim < 1) throw DomainError("kernels: zero-dimensional point");
  return PointSet(std::move(pts), dim);
}

const Eigen::VectorXcd& PointSet::at(PointId id) const {
  if (id >= pts_.size()) throw DomainError("kernels: point id out of range");
  return pts_[id];
}

Complex PointSet::scalar_at(PointId id) const {
  const Eigen::VectorXcd& p = at(id);
  if (p.size() != 1) {
    throw DomainError("kernels: scalar access to a higher-dimensional point");
  }
  return p(0);
}

KernelSpec KernelSpec::szego() { return KernelSpec(SzegoVariant{}); }

KernelSpec KernelSpec::drury_arveson(int d) {
  if (d < 1 || d > 64) {
    throw DomainError("kernels: Drury-Arveson dimension must be in [1, 64]");
  }
  return KernelSpec(DruryArvesonVariant{d});
}

KernelSpec KernelSpec::embedding(std::vector<Complex> j, PointId base) {
  if (j.empty()) throw DomainError("kernels: empty embedding map");
  if (base >= j.size()) {
    throw DomainError("kernels: embedding base id out of range");
  }
  for (PointId i = 0; i < j.size(); ++i) {
    if (!std::isfinite(j[i].real()) || !std::isfinite(j[i].imag()) ||
        std::abs(j[i]) >= 1.0) {
      boundary_error(i);
    }
  }
  if (j[base] != Complex(0.0, 0.0)) {
    throw DomainError("kernels: embedding base point must map to 0");
  }
  for (PointId i = 0; i < j.size(); ++i) {
    for (PointId k = i + 1; k < j.size(); ++k) {
      if (j[i] == j[k]) {
        throw DomainError("kernels: embedding map is not injective");
      }
    }
  }
  return KernelSpec(EmbeddingVariant{std::move(j), base});
}

KernelSpec KernelSpec::gram(HermitianMatrix g) {
  const Eigen::Index n = g.order();
  if (n == 0) throw DomainError("kernels: empty gram matrix");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(g(i, i).real() > 0.0)) {
      throw DomainError("kernels: gram diagonal must be strictly positive");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (g(i, j) == Complex(0.0, 0.0)) {
        throw DomainError(
            "kernels: gram matrix has a zero entry (kernel not irreducible)");
      }
    }
  }
  // Pairwise column proportionality at 1e-10: Cauchy-Schwarz equality test.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double ni = g.matrix().col(i).norm();
      const double nj = g.matrix().col(j).norm();
      const double cross = std::abs(g.matrix().col(i).dot(g.matrix().col(j)));
      if (ni * nj - cross <= 1e-10 * ni * nj) {
        std::ostringstream msg;
        msg << "kernels: gram columns " << i << " and " << j
            << " are proportional (kernel not irreducible)";
        throw DomainError(msg.str());
      }
    }
  }
  if (!is_psd(g, kDefaultTol)) {
    throw NotPsdError("kernels: gram matrix is not positive semidefinite",
                      min_eigenvalue(g));
  }
  return KernelSpec(GramVariant{std::move(g)});
}

HermitianMatrix gram(const KernelSpec& spec, const PointSet& pts) {
  const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
  return std::visit(
      [&](const auto& k) -> HermitianMatrix {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, SzegoVariant>) {
          if (pts.dim() != 1) {
            throw DomainError("kernels: Szego kernel needs disk points");
          }
          check_ball(pts);
          std::vector<Complex> zs(pts.size());
          for (PointId i = 0; i < pts.size(); ++i) zs[i] = pts.scalar_at(i);
          return szego_gram_of(zs);
        } else if constexpr (std::is_same_v<T, DruryArvesonVariant>) {
          if (pts.dim() != k.d) {
            throw DomainError(
                "kernels: point dimension does not match Drury-Arveson d");
          }
          check_ball(pts);
          Eigen::MatrixXcd g(n, n);
          for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
              g(i, j) = 1.0 / (1.0 - herm_inner(pts.at(i), pts.at(j)));
            }
          }
          return HermitianMatrix(std::move(g));
        } else if constexpr (std::is_same_v<T, EmbeddingVariant>) {
          if (pts.size() != k.j.size()) {
            throw DomainError(
                "kernels: sample size does not match the embedding map");
          }
          return szego_gram_of(k.j);
        } else {
          if (n != k.gram.order()) {
            throw DomainError(
                "kernels: sample size does not match the gram order");
          }
          return k.gram;
        }
      },
      spec.variant());
}

HermitianMatrix normalize_gram(const HermitianMatrix& g, PointId base) {
  const Eigen::Index n = g.order();
  const Eigen::Index b = static_cast<Eigen::Index>(base);
  if (b >= n) throw DomainError("kernels: base point id out of range");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (g(i, b) == Complex(0.0, 0.0)) {
      throw Error("kernels: kernel vanishes against base point");
    }
  }
  const Complex kbb = g(b, b);
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // The formula collapses to 1 on the base row and column.
      out(i, j) = (i == b || j == b)
                      ? Complex(1.0, 0.0)
                      : g(i, j) * kbb / (g(i, b) * g(b, j));
    }
  }
  return HermitianMatrix(std::move(out));
}

HermitianMatrix normalize(const KernelSpec& spec, const PointSet& pts,
                          PointId base) {
  return normalize_gram(gram(spec, pts), base);
}

double dk_from_gram(const HermitianMatrix& g, PointId i, PointId j) {
  const Eigen::Index n = g.order();
  if (static_cast<Eigen::Index>(i) >= n || static_cast<Eigen::Index>(j) >= n) {
    throw DomainError("kernels: point id out of range");
  }
  if (i == j) return 0.0;
  const double kii = g(i, i).real();
  const double kjj = g(j, j).real();
  if (!(kii > 0.0) || !(kjj > 0.0)) {
    throw Error("kernels: kernel diagonal not strictly positive");
  }
  const Complex kij = g(i, j);
  if (kij == Complex(0.0, 0.0)) {
    throw Error("kernels: kernel not irreducible at pair");
  }
  const double q = std::norm(kij) / (kii * kjj);
  return std::sqrt(std::max(0.0, 1.0 - q));
}

double dk(const KernelSpec& spec, const PointSet& pts, PointId i, PointId j) {
  return dk_from_gram(gram(spec, pts), i, j);
}

}  // namespace cnp
