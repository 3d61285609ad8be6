// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cnp/pick.hpp"

using cnp::Complex;
using cnp::HermitianMatrix;
using cnp::InterpolationProblem;
using cnp::KernelSpec;
using cnp::PointSet;

namespace {

InterpolationProblem worked_problem() {
  return InterpolationProblem::scalar(KernelSpec::szego(),
                                      PointSet::disk({0.0, 0.5}),
                                      {Complex(0.0), Complex(0.6)});
}

std::vector<Complex> random_disk_points(int n, double max_r,
                                        std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> zs(n);
  for (int i = 0; i < n; ++i) {
    const double r = max_r * std::sqrt(u(rng));
    const double th = 2.0 * M_PI * u(rng);
    zs[i] = Complex(r * std::cos(th), r * std::sin(th));
  }
  return zs;
}

}  // namespace

TEST_CASE("pick_matrix: worked Szego instance at t = 1") {
  const auto m = cnp::pick_matrix(worked_problem(), 1.0);
  CHECK(m(0, 0) == Complex(1, 0));
  CHECK(m(0, 1) == Complex(1, 0));
  CHECK(m(1, 0) == Complex(1, 0));
  CHECK(m(1, 1).real() ==
        doctest::Approx(0.64 * (4.0 / 3.0)).epsilon(1e-15));
}

TEST_CASE("pick_matrix: 1x1 diagonal necessity and zero targets at t = 0") {
  const auto one = InterpolationProblem::scalar(
      KernelSpec::szego(), PointSet::disk({0.3}), {Complex(0.7)});
  CHECK(cnp::min_eigenvalue(cnp::pick_matrix(one, 0.7)) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK_FALSE(cnp::is_psd(cnp::pick_matrix(one, 0.69), 1e-12));

  const auto zeros = InterpolationProblem::scalar(
      KernelSpec::szego(), PointSet::disk({0.0, 0.5}), {0.0, 0.0});
  CHECK(cnp::pick_matrix(zeros, 0.0).max_abs() == 0.0);
  CHECK(cnp::is_psd(cnp::pick_matrix(zeros, 0.0), 0.0));
}

TEST_CASE("pick_matrix: negative norm parameter rejected") {
  const auto one = InterpolationProblem::scalar(
      KernelSpec::szego(), PointSet::disk({0.3}), {Complex(0.7)});
  CHECK_THROWS_AS(cnp::pick_matrix(one, -0.1), cnp::DomainError);
}

TEST_CASE("pick_matrix: inconsistent block orders rejected") {
  std::vector<Eigen::MatrixXcd> blocks = {Eigen::MatrixXcd::Identity(2, 2),
                                          Eigen::MatrixXcd::Identity(3, 3)};
  CHECK_THROWS_AS(InterpolationProblem::blocks(
                      KernelSpec::szego(), PointSet::disk({0.0, 0.5}),
                      std::move(blocks)),
                  cnp::DomainError);
}

TEST_CASE("is_solvable: worked instance infeasible, boundary case feasible") {
  CHECK_FALSE(cnp::is_solvable(worked_problem(), 1e-9));

  const auto boundary = InterpolationProblem::scalar(
      KernelSpec::szego(), PointSet::disk({0.0, 0.5}), {0.0, 0.5});
  CHECK(cnp::is_solvable(boundary, 1e-9));

  const auto null = InterpolationProblem::scalar(
      KernelSpec::szego(), PointSet::disk({0.0, 0.5}), {0.0, 0.0});
  CHECK(cnp::is_solvable(null, 0.0));
}

TEST_CASE("min_multiplier_norm: exact at the lower seed for n = 1") {
  const auto one = InterpolationProblem::scalar(
      KernelSpec::szego(), PointSet::disk({0.3}), {Complex(0.7)});
  const auto r = cnp::min_multiplier_norm(one, 1e-9);
  CHECK(r.min_norm == 0.7);
  CHECK(r.feasible);
}

TEST_CASE("min_multiplier_norm: worked instance returns 1.2") {
  const auto r = cnp::min_multiplier_norm(worked_problem(), 1e-9);
  CHECK(std::fabs(r.min_norm - 1.2) <= 1e-9);
  CHECK_FALSE(r.feasible);
  CHECK(r.certificate >= -1e-9 * (1.0 + 1.3));
}

TEST_CASE("min_multiplier_norm: two-point closed form |w| / |x|") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.05, 0.9);
  for (int trial = 0; trial < 50; ++trial) {
    const double xr = u(rng);
    const double th = 2.0 * M_PI * u(rng);
    const Complex x(xr * std::cos(th), xr * std::sin(th));
    const double wr = u(rng);
    const Complex w(wr * std::cos(3 * th), wr * std::sin(3 * th));
    const auto p = InterpolationProblem::scalar(
        KernelSpec::szego(), PointSet::disk({0.0, x}), {0.0, w});
    const auto r = cnp::min_multiplier_norm(p, 1e-10);
    CHECK(std::fabs(r.min_norm - std::abs(w) / std::abs(x)) <= 1e-8);
  }
}

TEST_CASE("min_multiplier_norm: diagonal blocks split into scalar problems") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const auto zs = random_disk_points(4, 0.8, rng);
    const auto ws = random_disk_points(4, 0.95, rng);
    const auto vs = random_disk_points(4, 0.95, rng);

    std::vector<Eigen::MatrixXcd> blocks(4);
    for (int i = 0; i < 4; ++i) {
      blocks[i] = Eigen::MatrixXcd::Zero(2, 2);
      blocks[i](0, 0) = ws[i];
      blocks[i](1, 1) = vs[i];
    }
    const auto block_result = cnp::min_multiplier_norm(
        InterpolationProblem::blocks(KernelSpec::szego(), PointSet::disk(zs),
                                     blocks),
        1e-12);

    std::vector<Complex> w(ws.begin(), ws.end()), v(vs.begin(), vs.end());
    const auto rw = cnp::min_multiplier_norm(
        InterpolationProblem::scalar(KernelSpec::szego(), PointSet::disk(zs),
                                     w),
        1e-12);
    const auto rv = cnp::min_multiplier_norm(
        InterpolationProblem::scalar(KernelSpec::szego(), PointSet::disk(zs),
                                     v),
        1e-12);
    CHECK(std::fabs(block_result.min_norm -
                    std::max(rw.min_norm, rv.min_norm)) <= 1e-10);
  }
}

TEST_CASE("min_multiplier_norm: empty problem and unbounded bracket") {
  const auto empty = InterpolationProblem::scalar(KernelSpec::szego(),
                                                  PointSet::disk({}), {});
  CHECK_THROWS_WITH_AS(cnp::min_multiplier_norm(empty, 1e-9),
                       "pick: empty problem", cnp::Error);

  // Rank-deficient gram whose kernel direction the targets excite: no t can
  // dominate, the doubling bracket must give up.
  Eigen::MatrixXcd a(3, 2);
  a << 1.0, 0.1, 0.1, 1.0, 1.0, 1.0;
  Eigen::MatrixXcd g = a * a.adjoint();
  const auto spec = KernelSpec::gram(HermitianMatrix(g));
  const auto p = InterpolationProblem::scalar(
      spec, PointSet::disk({0.0, 0.1, 0.2}), {1.0, 2.0, 1.0});
  CHECK_THROWS_WITH_AS(cnp::min_multiplier_norm(p, 1e-9),
                       "pick: unbounded bracket", cnp::Error);
}

TEST_CASE("extremal_value: Szego closed forms") {
  const auto spec = KernelSpec::szego();
  const auto pts = PointSet::disk({0.0, 0.5, 0.9});
  const auto r05 = cnp::extremal_value(spec, pts, 0, 1, 1e-9);
  CHECK(std::fabs(r05.value - 0.5) <= 1e-8);
  CHECK(std::fabs(r05.closed_form - 0.5) <= 1e-14);

  const auto r09 = cnp::extremal_value(spec, pts, 0, 2, 1e-9);
  CHECK(std::fabs(r09.value - 0.9) <= 1e-8);
  CHECK(std::fabs(r09.closed_form - 0.9) <= 1e-14);
}

TEST_CASE("extremal_value: agreement and boundary singularity, all variants") {
  std::mt19937_64 rng(611);
  const double tol = 1e-9;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    auto zs = random_disk_points(n, 0.9, rng);
    const auto variant = trial % 3;
    KernelSpec spec = KernelSpec::szego();
    if (variant == 1) spec = KernelSpec::drury_arveson(1);
    if (variant == 2) {
      zs[0] = 0.0;
      spec = KernelSpec::embedding(zs, 0);
    }
    const auto pts = PointSet::disk(zs);
    const cnp::PointId base = 0, x = 1 + rng() % (n - 1);
    const auto r = cnp::extremal_value(spec, pts, base, x, tol);
    CHECK(r.gap <= 2.0 * tol);

    // Boundary attainment: the two-point Pick matrix at the optimum is
    // singular within 10 tol.
    const auto norm = cnp::normalize(spec, pts, base);
    Eigen::MatrixXcd m(2, 2);
    m << Complex(1, 0), Complex(1, 0), Complex(1, 0),
        (1.0 - r.value * r.value) * norm(static_cast<Eigen::Index>(x),
                                         static_cast<Eigen::Index>(x));
    CHECK(std::fabs(cnp::min_eigenvalue(HermitianMatrix(m))) <= 10.0 * tol);
  }
}

TEST_CASE("extremal_value: stays sharp for nearly coincident pairs") {
  // Shallow feasibility crossings: separations down to 1e-4 near the
  // boundary and near the center.
  const double tol = 1e-9;
  for (const double r : {0.0, 0.4, 0.95}) {
    for (const double sep : {1e-2, 1e-4}) {
      const Complex b(r, 0.0), x(r - sep, sep);
      const auto res = cnp::extremal_value(KernelSpec::szego(),
                                           PointSet::disk({b, x}), 0, 1, tol);
      CHECK(res.gap <= 2.0 * tol);
    }
  }
}

TEST_CASE("extremal_value: equals the kernel pseudo-metric to the base") {
  std::mt19937_64 rng(733);
  auto js = random_disk_points(5, 0.9, rng);
  js[0] = 0.0;
  const auto spec = KernelSpec::embedding(js, 0);
  const auto pts = PointSet::disk(js);
  for (cnp::PointId x = 1; x < 5; ++x) {
    const auto r = cnp::extremal_value(spec, pts, 0, x, 1e-9);
    CHECK(std::fabs(r.value - cnp::dk(spec, pts, x, 0)) <= 1e-9);
  }
}

TEST_CASE("extremal_value: degenerate problem rejected") {
  CHECK_THROWS_WITH_AS(
      cnp::extremal_value(KernelSpec::szego(), PointSet::disk({0.0, 0.5}), 1,
                          1, 1e-9),
      "pick: degenerate extremal problem", cnp::Error);
}

TEST_CASE("is_contractive_multiplier: identity and scaled identity") {
  std::mt19937_64 rng(13);
  auto zs = random_disk_points(8, 0.9, rng);
  zs.push_back(0.7);  // ensure a point with |z| > 0.5
  const auto pts = PointSet::disk(zs);
  std::vector<Complex> vals(zs.begin(), zs.end());
  CHECK(cnp::is_contractive_multiplier(KernelSpec::szego(), pts, vals));

  std::vector<Complex> doubled(vals);
  for (auto& v : doubled) v *= 2.0;
  CHECK_FALSE(cnp::is_contractive_multiplier(KernelSpec::szego(), pts,
                                             doubled));
}

TEST_CASE("property: feasibility is upward closed in t") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto zs = random_disk_points(n, 0.9, rng);
    const auto ws = random_disk_points(n, 1.2, rng);
    const auto p = InterpolationProblem::scalar(
        KernelSpec::szego(), PointSet::disk(zs),
        std::vector<Complex>(ws.begin(), ws.end()));
    double t1 = u(rng), t2 = u(rng);
    if (t1 > t2) std::swap(t1, t2);
    if (cnp::is_psd(cnp::pick_matrix(p, t1), 1e-10)) {
      CHECK(cnp::is_psd(cnp::pick_matrix(p, t2), 1e-10));
    }
  }
}

TEST_CASE("property: restriction monotonicity of the minimal norm") {
  std::mt19937_64 rng(345);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const auto zs = random_disk_points(n, 0.85, rng);
    const auto ws = random_disk_points(n, 1.1, rng);

    const auto full = cnp::min_multiplier_norm(
        InterpolationProblem::scalar(KernelSpec::szego(), PointSet::disk(zs),
                                     std::vector<Complex>(ws.begin(),
                                                          ws.end())),
        1e-12);
    const std::vector<Complex> sub_z(zs.begin(), zs.begin() + n - 2);
    const std::vector<Complex> sub_w(ws.begin(), ws.begin() + n - 2);
    const auto sub = cnp::min_multiplier_norm(
        InterpolationProblem::scalar(KernelSpec::szego(),
                                     PointSet::disk(sub_z), sub_w),
        1e-12);
    CHECK(sub.min_norm <= full.min_norm + 1e-10);
  }
}

TEST_CASE("property: feasible flag matches min_norm <= 1 + tol") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 20; ++trial) {
    const auto zs = random_disk_points(3, 0.8, rng);
    const auto ws = random_disk_points(3, 1.3, rng);
    const auto r = cnp::min_multiplier_norm(
        InterpolationProblem::scalar(KernelSpec::szego(), PointSet::disk(zs),
                                     std::vector<Complex>(ws.begin(),
                                                          ws.end())),
        1e-9);
    CHECK(r.feasible == (r.min_norm <= 1.0 + 1e-9));
  }
}
