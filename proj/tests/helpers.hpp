#pragma once

// Shared test utilities: deterministic random inputs and the brute-force
// oracles the implementation is checked against.

#include <complex>
#include <random>
#include <vector>

#include "dirichlet/series.hpp"

namespace testutil {

using dirichlet::CoefficientSeries;
using dirichlet::cplx;
using dirichlet::DiskPoint;

inline CoefficientSeries random_series(std::mt19937_64& rng, std::size_t deg,
                                       double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<cplx> c(deg + 1);
  for (auto& v : c) v = cplx(u(rng), u(rng));
  return CoefficientSeries(std::move(c));
}

inline DiskPoint random_disk_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = std::sqrt(u(rng));
  double th = 2.0 * M_PI * u(rng);
  return DiskPoint(std::polar(r, th));
}

inline DiskPoint random_circle_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return DiskPoint(std::polar(1.0, 2.0 * M_PI * u(rng)));
}

// Direct tail-sum oracle for the decomposition quotient:
// b_k = sum_{j >= k+1} a_j zeta^{j-k-1}, summed term by term (quadratic).
inline std::vector<cplx> tail_sum_quotient(const CoefficientSeries& f,
                                           cplx zeta) {
  std::size_t d = f.degree();
  if (d == 0) return {cplx(0.0, 0.0)};
  std::vector<cplx> b(d, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < d; ++k) {
    cplx pow(1.0, 0.0);
    for (std::size_t j = k + 1; j <= d; ++j) {
      b[k] += f.coeffs[j] * pow;
      pow *= zeta;
    }
  }
  return b;
}

// Expands a + (z - zeta) g back to coefficient form.
inline std::vector<cplx> recompose(cplx a, const CoefficientSeries& g,
                                   cplx zeta) {
  std::vector<cplx> c(g.coeffs.size() + 1, cplx(0.0, 0.0));
  c[0] = a;
  for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
    c[k + 1] += g.coeffs[k];
    c[k] -= zeta * g.coeffs[k];
  }
  return c;
}

}  // namespace testutil
