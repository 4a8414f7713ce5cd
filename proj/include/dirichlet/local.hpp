#pragma once

// Local Dirichlet spaces D_zeta.  A function f of the space decomposes as
// f(z) = a + (z - zeta) g(z) with g in H^2, and D_zeta(f) = ||g||_{H^2}^2.
// Truncations are measured as the polynomials they store.

#include <cmath>
#include <stdexcept>

#include "series.hpp"

namespace dirichlet {

struct LocalDecomposition {
  DiskPoint zeta;
  cplx a;               // constant of the decomposition
  CoefficientSeries g;  // quotient, one degree below f
};

// Coefficient relations a_0 = a - zeta b_0, a_k = b_{k-1} - zeta b_k give the
// backward recursion b_{k-1} = a_k + zeta b_k, seeded with b_{d-1} = a_d.
// No division by zeta anywhere, so zeta = 0 needs no special case.
inline LocalDecomposition decompose(const CoefficientSeries& f,
                                    const DiskPoint& zeta) {
  const cplx z = zeta.value();
  const std::size_t d = f.degree();
  if (d == 0)
    return {zeta, f.coeffs[0], CoefficientSeries({cplx(0.0, 0.0)})};
  std::vector<cplx> b(d);
  b[d - 1] = f.coeffs[d];
  for (std::size_t k = d - 1; k >= 1; --k) b[k - 1] = f.coeffs[k] + z * b[k];
  cplx a = f.coeffs[0] + z * b[0];
  return {zeta, a, CoefficientSeries(std::move(b))};
}

inline double local_norm_sq(const CoefficientSeries& f, const DiskPoint& zeta) {
  if (f.is_zero()) return 0.0;
  return h2_norm_sq(decompose(f, zeta).g);
}

// D_zeta(q) / (n^2 ||q||_{H^2}^2) for a polynomial q of degree n >= 1.
// The value never exceeds 1 (up to rounding).
inline double lemma_poly_ratio(const CoefficientSeries& q,
                               const DiskPoint& zeta) {
  if (q.is_zero())
    throw std::invalid_argument("lemma_poly_ratio: zero polynomial");
  const std::size_t n = q.degree();
  if (n < 1)
    throw std::invalid_argument("lemma_poly_ratio: degree must be >= 1");
  double bound = static_cast<double>(n) * static_cast<double>(n) *
                 h2_norm_sq(q);
  return local_norm_sq(q, zeta) / bound;
}

}  // namespace dirichlet
