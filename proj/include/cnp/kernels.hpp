// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <variant>
#include <vector>

#include "cnp/hermitian.hpp"

namespace cnp {

using PointId = std::size_t;

/// Finite ordered sample of kernel-domain points. Coordinates are complex
/// vectors of a common dimension (1 for disk kernels); repeated points are
/// rejected at construction. May be empty.
class PointSet {
 public:
  static PointSet disk(const std::vector<Complex>& zs);
  static PointSet ball(std::vector<Eigen::VectorXcd> pts);

  std::size_t size() const { return pts_.size(); }
  Eigen::Index dim() const { return dim_; }
  const Eigen::VectorXcd& at(PointId id) const;
  /// Dimension-1 access.
  Complex scalar_at(PointId id) const;

 private:
  PointSet(std::vector<Eigen::VectorXcd> pts, Eigen::Index dim);

  std::vector<Eigen::VectorXcd> pts_;
  Eigen::Index dim_ = 1;
};

/// k(z, w) = 1 / (1 - z * conj(w)) on the unit disk.
struct SzegoVariant {};

/// k(z, w) = 1 / (1 - <z, w>) on the d-ball, 1 <= d <= 64.
struct DruryArvesonVariant {
  int d = 1;
};

/// Kernel induced by an injective map into the disk with a designated base
/// point mapped to 0: k(x, y) = 1 / (1 - j(x) * conj(j(y))).
struct EmbeddingVariant {
  std::vector<Complex> j;
  PointId base = 0;
};

/// Explicit Hermitian PSD gram with nonzero entries and pairwise
/// non-proportional columns (the numerically checkable face of
/// irreducibility).
struct GramVariant {
  HermitianMatrix gram;
};

class KernelSpec {
 public:
  using Variant =
      std::variant<SzegoVariant, DruryArvesonVariant, EmbeddingVariant,
                   GramVariant>;

  static KernelSpec szego();
  static KernelSpec drury_arveson(int d);
  static KernelSpec embedding(std::vector<Complex> j, PointId base);
  static KernelSpec gram(HermitianMatrix g);

  const Variant& variant() const { return v_; }

 private:
  explicit KernelSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Gram matrix [k(x_i, x_j)] of the kernel on the sample.
HermitianMatrix gram(const KernelSpec& spec, const PointSet& pts);

/// Kernel normalized at a base point:
/// k_b(x, y) = k(x, y) k(b, b) / (k(x, b) k(b, y)).
/// The returned base row and column are identically 1.
HermitianMatrix normalize(const KernelSpec& spec, const PointSet& pts,
                          PointId base);
HermitianMatrix normalize_gram(const HermitianMatrix& g, PointId base);

/// Kernel pseudo-metric d_k(x, y) = sqrt(1 - |k(x,y)|^2 / (k(x,x) k(y,y))).
double dk(const KernelSpec& spec, const PointSet& pts, PointId i, PointId j);
double dk_from_gram(const HermitianMatrix& g, PointId i, PointId j);

}  // namespace cnp
