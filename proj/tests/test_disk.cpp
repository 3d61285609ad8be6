// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cnp/disk.hpp"

using cnp::Complex;
using cnp::DiskGrid;
using cnp::DiskSample;
using cnp::TestFunction;

namespace {

Complex random_point(double max_r, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = max_r * std::sqrt(u(rng));
  const double th = 2.0 * M_PI * u(rng);
  return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace

TEST_CASE("mobius_distance: worked values") {
  CHECK(cnp::mobius_distance(0.5, 0.0) == 0.5);
  CHECK(cnp::mobius_distance(Complex(0.2, 0.4), Complex(0.2, 0.4)) == 0.0);
  CHECK(cnp::mobius_distance(0.5, -0.5) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(cnp::mobius_distance(1.0, 0.0), cnp::DomainError);
}

TEST_CASE("caratheodory_distance: atanh scaling and monotonicity") {
  CHECK(cnp::caratheodory_distance(0.0, 0.0) == 0.0);
  CHECK(cnp::caratheodory_distance(0.5, 0.0) ==
        doctest::Approx(0.5493061443340549).epsilon(1e-14));
  CHECK(cnp::caratheodory_distance(0.9, 0.0) >
        cnp::caratheodory_distance(0.5, 0.0));
}

TEST_CASE("mobius_distance: invariance under disk automorphisms") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex z = random_point(0.9, rng);
    const Complex w = random_point(0.9, rng);
    const Complex a = random_point(0.9, rng);
    const auto phi = [&](Complex x) {
      return (a - x) / (1.0 - std::conj(a) * x);
    };
    CHECK(std::fabs(cnp::mobius_distance(phi(z), phi(w)) -
                    cnp::mobius_distance(z, w)) <= 1e-12);
  }
}

TEST_CASE("blaschke_sum: partial sums and tail classes") {
  // a_n = 1 - 1/n^2 for n = 1..3.
  const auto s = DiskSample::of({0.0, 0.75, 8.0 / 9.0});
  CHECK(cnp::blaschke_sum(s).partial ==
        doctest::Approx(49.0 / 36.0).epsilon(1e-15));
  CHECK(cnp::blaschke_sum(s).classification == cnp::BlaschkeClass::unknown);

  const auto divergent = DiskSample::of({0.5}, cnp::TailModel{1.0, 1.0});
  CHECK(cnp::blaschke_sum(divergent).classification ==
        cnp::BlaschkeClass::divergent);

  const auto convergent = DiskSample::of({0.5}, cnp::TailModel{1.0, 2.0});
  CHECK(cnp::blaschke_sum(convergent).classification ==
        cnp::BlaschkeClass::convergent);

  CHECK_THROWS_AS(DiskSample::of({0.5}, cnp::TailModel{-1.0, 1.0}),
                  cnp::DomainError);
}

TEST_CASE("blaschke_product: worked values and zero handling") {
  CHECK(std::abs(cnp::blaschke_product({0.5}, 0.0) - Complex(0.5, 0.0)) <=
        1e-15);
  CHECK(cnp::blaschke_product({0.5, Complex(0.0, 0.5)}, 0.0) ==
        Complex(0.25, 0.0));
  CHECK(std::abs(cnp::blaschke_product({0.5, Complex(0.0, 0.5)}, 0.5)) ==
        0.0);
  CHECK_THROWS_AS(cnp::blaschke_product({0.0, 0.5}, 0.1), cnp::DomainError);
}

TEST_CASE("blaschke_product: modulus below one, decreasing with more zeros") {
  std::mt19937_64 rng(1000);
  std::vector<Complex> zeros;
  for (int k = 0; k < 6; ++k) {
    Complex a = random_point(0.9, rng);
    while (a == Complex(0.0, 0.0)) a = random_point(0.9, rng);
    zeros.push_back(a);
  }
  const DiskGrid grid{20, 64, 0.99};
  for (const Complex z : grid.points()) {
    double prev = 1.0;
    for (std::size_t m = 1; m <= zeros.size(); ++m) {
      const std::vector<Complex> head(zeros.begin(), zeros.begin() + m);
      const double mod = std::abs(cnp::blaschke_product(head, z));
      CHECK(mod < 1.0);
      CHECK(mod <= prev + 1e-15);
      prev = mod;
    }
  }
}

TEST_CASE("dominating_ratio: sample equal to the grid attains one") {
  const DiskGrid grid{8, 16, 0.9};
  const auto sample = DiskSample::of(grid.points());
  const std::vector<TestFunction> fns = {
      TestFunction::polynomial({0.0, 1.0})};
  CHECK(cnp::dominating_ratio(sample, fns, grid) == 1.0);
}

TEST_CASE("dominating_ratio: sample at the origin scores zero for z") {
  const auto sample = DiskSample::of({0.0});
  const std::vector<TestFunction> fns = {
      TestFunction::polynomial({0.0, 1.0})};
  CHECK(cnp::dominating_ratio(sample, fns, DiskGrid{}) == 0.0);
}

TEST_CASE("dominating_ratio: near-boundary circle for z^2") {
  std::vector<Complex> circle;
  for (int k = 0; k < 1000; ++k) {
    const double th = 2.0 * M_PI * k / 1000.0;
    circle.emplace_back(0.99 * std::cos(th), 0.99 * std::sin(th));
  }
  const std::vector<TestFunction> fns = {
      TestFunction::polynomial({0.0, 0.0, 1.0})};
  const double ratio =
      cnp::dominating_ratio(DiskSample::of(circle), fns, DiskGrid{});
  CHECK(ratio == doctest::Approx(0.9801 / (0.995 * 0.995)).epsilon(1e-10));

  CHECK_THROWS_AS(
      cnp::dominating_ratio(DiskSample::of(circle), {}, DiskGrid{}),
      cnp::DomainError);
}

TEST_CASE("dx_lower_bound: identity attains the Mobius distance") {
  const std::vector<Complex> pts = {0.0, 0.5};
  const std::vector<TestFunction> fns = {
      TestFunction::polynomial({0.0, 1.0})};
  const auto m = cnp::dx_lower_bound(pts, fns);
  CHECK(m(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(m(1, 0) == m(0, 1));
  CHECK(m(0, 0) == 0.0);
}

TEST_CASE("dx_lower_bound: constants give zero, z^2 stays below Schwarz-Pick") {
  const std::vector<Complex> pts = {0.0, 0.5};
  const auto zero_only = cnp::dx_lower_bound(
      pts, {TestFunction::polynomial({0.0})});
  CHECK(zero_only(0, 1) == 0.0);

  const auto sq = cnp::dx_lower_bound(
      pts, {TestFunction::polynomial({0.0, 0.0, 1.0})});
  CHECK(sq(0, 1) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(sq(0, 1) <= cnp::mobius_distance(pts[0], pts[1]) + 1e-15);
}

TEST_CASE("dx_lower_bound: family enlargement is monotone") {
  std::mt19937_64 rng(555);
  std::vector<Complex> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(random_point(0.8, rng));

  const std::vector<TestFunction> small = {
      TestFunction::polynomial({0.0, 0.0, 1.0})};
  std::vector<TestFunction> big = small;
  big.push_back(TestFunction::polynomial({0.0, 1.0}));
  big.push_back(TestFunction::blaschke({0.3}));

  const auto a = cnp::dx_lower_bound(pts, small);
  const auto b = cnp::dx_lower_bound(pts, big);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      CHECK(b(i, j) >= a(i, j) - 1e-15);
    }
  }
}

TEST_CASE("dx_lower_bound: family member escaping the disk is named") {
  const std::vector<Complex> pts = {0.0, 0.5};
  const std::vector<TestFunction> fns = {
      TestFunction::polynomial({0.0, 1.5})};
  CHECK_THROWS_WITH_AS(
      cnp::dx_lower_bound(pts, fns),
      "disk: family member 0 [polynomial(deg 1)] attains modulus >= 1",
      cnp::DomainError);
}

TEST_CASE("grid: validation and size") {
  CHECK(DiskGrid{2, 4, 0.5}.points().size() == 9);
  CHECK_THROWS_AS((DiskGrid{0, 4, 0.5}.points()), cnp::DomainError);
  CHECK_THROWS_AS((DiskGrid{2, 4, 1.0}.points()), cnp::DomainError);
}
