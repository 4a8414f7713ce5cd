#include <doctest.h>

#include <random>

#include "dirichlet/series.hpp"
#include "helpers.hpp"

using namespace dirichlet;
using testutil::random_series;

TEST_CASE("evaluate: Horner on small polynomials") {
  CoefficientSeries f({1.0, 2.0, 3.0});
  CHECK(evaluate(f, 0.0) == cplx(1.0));
  CHECK(evaluate(f, 1.0) == cplx(6.0));
  CHECK(evaluate(f, cplx(0.0, 1.0)) == cplx(-2.0, 2.0));
}

TEST_CASE("derivative: term-by-term rule") {
  CHECK(derivative(CoefficientSeries({1.0, 2.0, 3.0})).coeffs ==
        std::vector<cplx>{2.0, 6.0});
  CHECK(derivative(CoefficientSeries({7.0})).coeffs ==
        std::vector<cplx>{0.0});
  CHECK(derivative(CoefficientSeries({0.0, 0.0, 0.0, 1.0})).coeffs ==
        std::vector<cplx>{0.0, 0.0, 3.0});
}

TEST_CASE("h2_norm_sq basics") {
  CHECK(h2_norm_sq(CoefficientSeries({1.0, 1.0, 1.0})) == doctest::Approx(3.0));
  CHECK(h2_norm_sq(CoefficientSeries({0.0})) == 0.0);
  // geometric lambda = 1/2 truncated at N = 30: sum 4^{-k} = 4/3 minus the
  // explicit tail 4^{-31} * 4/3
  CoefficientSeries g = make_family("geometric", {0.5}, 30);
  double expect = 4.0 / 3.0 - std::pow(0.25, 31) * 4.0 / 3.0;
  CHECK(h2_norm_sq(g) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("make_family") {
  CoefficientSeries g = make_family("geometric", {0.5}, 3);
  CHECK(g.coeffs == std::vector<cplx>{1.0, 0.5, 0.25, 0.125});
  CHECK(g.family_tag == "geometric");
  CHECK(g.kind == SeriesKind::Truncation);

  CoefficientSeries m = make_family("monomial", {2.0}, 2);
  CHECK(m.coeffs == std::vector<cplx>{0.0, 0.0, 1.0});

  // a_j = t_j - t_{j+1} telescoping with t = (1, 1, 0, ...)
  CoefficientSeries t = make_family("tail_designed", {1.0, 1.0}, 2);
  CHECK(t.coeffs == std::vector<cplx>{0.0, 1.0, 0.0});

  CHECK_THROWS_AS(make_family("nope", {}, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_family("geometric", {1.0}, 4), std::invalid_argument);
}

TEST_CASE("derivative matches central finite differences") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  const double h = 1e-5;
  for (int trial = 0; trial < 50; ++trial) {
    CoefficientSeries f = random_series(rng, rng() % 21);
    cplx z(u(rng) * 0.7, u(rng) * 0.7);
    cplx fd = (evaluate(f, z + h) - evaluate(f, z - h)) / (2.0 * h);
    cplx d = evaluate(derivative(f), z);
    double denom = std::max(1.0, std::abs(d));
    CHECK(std::abs(fd - d) / denom < 1e-6);
  }
}

TEST_CASE("h2 norm: triangle inequality and zero-padding invariance") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    CoefficientSeries f = random_series(rng, rng() % 31);
    CoefficientSeries g = random_series(rng, rng() % 31);
    double lhs = std::sqrt(h2_norm_sq(add(f, g)));
    double rhs = std::sqrt(h2_norm_sq(f)) + std::sqrt(h2_norm_sq(g));
    CHECK(lhs <= rhs + 1e-12);

    CoefficientSeries padded = f;
    padded.coeffs.resize(padded.coeffs.size() + 17, cplx(0.0, 0.0));
    CHECK(h2_norm_sq(padded) == h2_norm_sq(f));
  }
}

TEST_CASE("DiskPoint boundary tolerance") {
  CHECK_NOTHROW(DiskPoint(cplx(1.0, 0.0)));
  DiskPoint p(std::polar(1.0 + 5e-13, 0.3));
  CHECK(std::abs(p.value()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(DiskPoint(cplx(1.1, 0.0)), std::invalid_argument);
}

TEST_CASE("coefficient JSON round trip rejects non-finite entries") {
  CoefficientSeries f({cplx(1.0, -2.0), cplx(0.5, 0.0)});
  CoefficientSeries back = series_from_json(series_to_json(f));
  CHECK(back.coeffs == f.coeffs);

  nlohmann::json bad = nlohmann::json::array();
  bad.push_back({1.0, 2.0});
  bad.push_back(nlohmann::json::array({"inf", 0.0}));
  CHECK_THROWS_AS(series_from_json(bad), std::invalid_argument);
}
