#include <doctest.h>

#include <random>

#include "dirichlet/measures.hpp"
#include "helpers.hpp"

using namespace dirichlet;
using testutil::random_series;

TEST_CASE("dirichlet_mu: atomic hand cases") {
  CoefficientSeries f({5.0, 3.0, 4.0});
  CHECK(dirichlet_mu(f, DiskMeasure::point_mass(0.0)) == doctest::Approx(25.0));

  // half delta_1 + half delta_{-1} on z^2: both local norms equal 2
  DiskMeasure mu = DiskMeasure::atomic(
      {Atom{DiskPoint(cplx(1.0, 0.0)), 0.5}, Atom{DiskPoint(cplx(-1.0, 0.0)), 0.5}});
  CHECK(dirichlet_mu(CoefficientSeries({0.0, 0.0, 1.0}), mu) ==
        doctest::Approx(2.0));
}

TEST_CASE("dirichlet_mu: uniform circle of z^2 is 2") {
  // D_zeta(z^2) = 2 for every unimodular zeta, so the integrand is constant
  CHECK(dirichlet_mu(CoefficientSeries({0.0, 0.0, 1.0}),
                     DiskMeasure::uniform_circle(256)) ==
        doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("dmu_norm_sq hand cases") {
  CHECK(dmu_norm_sq(CoefficientSeries({3.0}),
                    DiskMeasure::point_mass(cplx(0.3, 0.2))) ==
        doctest::Approx(9.0));
  CHECK(dmu_norm_sq(CoefficientSeries({0.0, 1.0}),
                    DiskMeasure::point_mass(1.0)) == doctest::Approx(1.0));
  CHECK(dmu_norm_sq(CoefficientSeries({1.0, 1.0}),
                    DiskMeasure::point_mass(0.0, 2.0)) == doctest::Approx(3.0));
}

TEST_CASE("additivity and scaling in mu") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    CoefficientSeries f = random_series(rng, 1 + rng() % 40);
    auto z1 = testutil::random_disk_point(rng);
    auto z2 = testutil::random_disk_point(rng);
    double m1 = 0.1 + (rng() % 100) / 50.0;
    double m2 = 0.1 + (rng() % 100) / 50.0;
    DiskMeasure mu1 = DiskMeasure::atomic({Atom{z1, m1}});
    DiskMeasure mu2 = DiskMeasure::atomic({Atom{z2, m2}});
    DiskMeasure join = DiskMeasure::atomic({Atom{z1, m1}, Atom{z2, m2}});
    double d = dirichlet_mu(f, join);
    CHECK(std::abs(d - dirichlet_mu(f, mu1) - dirichlet_mu(f, mu2)) < 1e-10 *
              std::max(1.0, d));

    double c = 3.25;
    DiskMeasure scaled = DiskMeasure::atomic({Atom{z1, c * m1}});
    CHECK(dirichlet_mu(f, scaled) ==
          doctest::Approx(c * dirichlet_mu(f, mu1)).epsilon(1e-12));
  }
}

TEST_CASE("classical Dirichlet check on the uniform circle") {
  // D_mu with normalized arclength equals sum k |a_k|^2
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    CoefficientSeries f = random_series(rng, 1 + rng() % 30);
    KahanSum expect;
    for (std::size_t k = 1; k < f.coeffs.size(); ++k)
      expect.add(static_cast<double>(k) * std::norm(f.coeffs[k]));
    double got = dirichlet_mu(f, DiskMeasure::uniform_circle(256));
    CHECK(std::abs(got - expect.value()) < 1e-8 * std::max(1.0, expect.value()));
  }
}

TEST_CASE("definiteness at desk scale") {
  DiskMeasure mu = DiskMeasure::point_mass(cplx(0.4, 0.1));
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    CoefficientSeries f = random_series(rng, 1 + rng() % 20);
    if (dmu_norm_sq(f, mu) <= 1e-12) {
      for (const cplx& c : f.coeffs) CHECK(std::abs(c) <= 1e-12);
    }
  }
  // and the zero function really gives zero
  CHECK(dmu_norm_sq(CoefficientSeries({0.0}), mu) == 0.0);
}

TEST_CASE("disk density measure integrates") {
  // uniform density 1/pi on the disk, total mass 1
  DiskMeasure mu(DiskDensityMeasure{[](double, double) { return 1.0 / M_PI; },
                                    32, 64},
                 "uniform_disk");
  CHECK(mu.total_mass() == doctest::Approx(1.0).epsilon(1e-10));
  // D_zeta(z) = 1 everywhere, so D_mu(z) = total mass
  CHECK(dirichlet_mu(CoefficientSeries({0.0, 1.0}), mu) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("measure validation errors") {
  CHECK_THROWS_AS(DiskMeasure::atomic({}), std::invalid_argument);
  CHECK_THROWS_AS(DiskMeasure::atomic({Atom{DiskPoint(), -1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      DiskMeasure(CircleDensityMeasure{[](double) { return 1.0; }, 7}),
      std::invalid_argument);
}
