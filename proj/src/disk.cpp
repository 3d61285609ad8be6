// SPDX-License-Identifier: Apache-2.0
#include "cnp/disk.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cnp {

namespace {

void require_in_disk(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
      std::abs(z) >= 1.0) {
    throw DomainError(std::string("disk: ") + what +
                      " lies on or outside the unit disk");
  }
}

double sup_modulus(const TestFunction& f, const std::vector<Complex>& pts) {
  double sup = 0.0;
  for (const Complex z : pts) sup = std::max(sup, std::abs(f(z)));
  return sup;
}

}  // namespace

double mobius_distance(Complex z, Complex w) {
  require_in_disk(z, "point");
  require_in_disk(w, "point");
  return std::abs((z - w) / (1.0 - std::conj(w) * z));
}

double caratheodory_distance(Complex z, Complex w) {
  return std::atanh(mobius_distance(z, w));
}

DiskSample DiskSample::of(std::vector<Complex> points,
                          std::optional<TailModel> tail) {
  for (const Complex a : points) require_in_disk(a, "sample point");
  if (tail && (!(tail->c > 0.0) || !(tail->p > 0.0))) {
    throw DomainError("disk: tail model parameters must be positive");
  }
  return DiskSample{std::move(points), tail};
}

BlaschkeSum blaschke_sum(const DiskSample& s) {
  BlaschkeSum out;
  for (const Complex a : s.points) out.partial += 1.0 - std::abs(a);
  if (s.tail) {
    out.classification = s.tail->p <= 1.0 ? BlaschkeClass::divergent
                                          : BlaschkeClass::convergent;
  }
  return out;
}

Complex blaschke_product(const std::vector<Complex>& zeros, Complex z) {
  require_in_disk(z, "evaluation point");
  Complex prod = 1.0;
  for (const Complex a : zeros) {
    require_in_disk(a, "zero");
    if (a == Complex(0.0, 0.0)) {
      throw DomainError(
          "disk: normalization factor |a|/a undefined at a zero at 0");
    }
    prod *= (a - z) / (1.0 - std::conj(a) * z) * (std::abs(a) / a);
  }
  return prod;
}

std::vector<Complex> DiskGrid::points() const {
  if (radial < 1 || angular < 1) {
    throw DomainError("disk: grid counts must be >= 1");
  }
  if (!(outer_radius > 0.0) || outer_radius >= 1.0) {
    throw DomainError("disk: grid outer radius must lie in (0, 1)");
  }
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(radial) * angular + 1);
  pts.emplace_back(0.0, 0.0);
  for (int k = 0; k < radial; ++k) {
    const double r = outer_radius * (k + 1) / radial;
    for (int t = 0; t < angular; ++t) {
      const double theta = 2.0 * std::numbers::pi * t / angular;
      pts.emplace_back(r * std::cos(theta), r * std::sin(theta));
    }
  }
  return pts;
}

TestFunction TestFunction::polynomial(std::vector<Complex> coeffs) {
  if (coeffs.empty()) throw DomainError("disk: empty polynomial");
  for (const Complex c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("disk: non-finite polynomial coefficient");
    }
  }
  std::ostringstream name;
  name << "polynomial(deg " << coeffs.size() - 1 << ")";
  return TestFunction(true, std::move(coeffs), name.str());
}

TestFunction TestFunction::blaschke(std::vector<Complex> zeros) {
  for (const Complex a : zeros) {
    require_in_disk(a, "zero");
    if (a == Complex(0.0, 0.0)) {
      throw DomainError(
          "disk: normalization factor |a|/a undefined at a zero at 0");
    }
  }
  std::ostringstream name;
  name << "blaschke(" << zeros.size() << " zeros)";
  return TestFunction(false, std::move(zeros), name.str());
}

Complex TestFunction::operator()(Complex z) const {
  if (poly_) {
    Complex acc = 0.0;
    for (auto it = data_.rbegin(); it != data_.rend(); ++it) {
      acc = acc * z + *it;
    }
    return acc;
  }
  return blaschke_product(data_, z);
}

std::vector<double> dominating_ratios(const DiskSample& s,
                                      const std::vector<TestFunction>& fns,
                                      const DiskGrid& grid) {
  if (fns.empty()) throw DomainError("disk: empty test family");
  if (s.points.empty()) throw DomainError("disk: empty sample");
  const std::vector<Complex> gpts = grid.points();
  std::vector<double> ratios;
  ratios.reserve(fns.size());
  for (const TestFunction& f : fns) {
    const double sup_grid = sup_modulus(f, gpts);
    const double sup_sample = sup_modulus(f, s.points);
    // A function vanishing on the whole grid attains its sup anywhere.
    const double r = sup_grid == 0.0 ? 1.0 : sup_sample / sup_grid;
    ratios.push_back(std::min(1.0, std::max(0.0, r)));
  }
  return ratios;
}

double dominating_ratio(const DiskSample& s,
                        const std::vector<TestFunction>& fns,
                        const DiskGrid& grid) {
  double out = 1.0;
  for (const double r : dominating_ratios(s, fns, grid)) {
    out = std::min(out, r);
  }
  return out;
}

Eigen::MatrixXd dx_lower_bound(const std::vector<Complex>& pts,
                               const std::vector<TestFunction>& fns,
                               const DiskGrid& grid) {
  if (fns.empty()) throw DomainError("disk: empty test family");
  for (const Complex z : pts) require_in_disk(z, "point");

  const std::vector<Complex> gpts = grid.points();
  for (std::size_t k = 0; k < fns.size(); ++k) {
    if (sup_modulus(fns[k], gpts) >= 1.0 ||
        sup_modulus(fns[k], pts) >= 1.0) {
      std::ostringstream msg;
      msg << "disk: family member " << k << " [" << fns[k].describe()
          << "] attains modulus >= 1";
      throw DomainError(msg.str());
    }
  }

  const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double best = 0.0;
      for (const TestFunction& f : fns) {
        best = std::max(best, mobius_distance(f(pts[i]), f(pts[j])));
      }
      out(i, j) = out(j, i) = best;
    }
  }
  return out;
}

}  // namespace cnp
