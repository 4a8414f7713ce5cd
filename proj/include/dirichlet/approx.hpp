#pragma once

// Approximants built from a weight array:
//   p_n(z) = sum_{k<=n} w_{n,k} a_k z^k                  (global, zeta-free)
//   f_n(z) = a + (z - zeta) g_n(z)                       (local)
// together with error curves D_mu(f - p_n) and the lacunary counterexample
// showing that plain Taylor truncation fails at the boundary atom delta_1.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kernels.hpp"
#include "local.hpp"
#include "measures.hpp"
#include "series.hpp"

namespace dirichlet {

inline CoefficientSeries build_pn(const CoefficientSeries& f,
                                  const WeightArray& a, int n) {
  if (n < 0) throw std::invalid_argument("build_pn: n must be >= 0");
  std::size_t len =
      std::min<std::size_t>(static_cast<std::size_t>(n) + 1, f.coeffs.size());
  std::vector<cplx> c(std::max<std::size_t>(len, 1), cplx(0.0, 0.0));
  for (std::size_t k = 0; k < len; ++k)
    c[k] = a.w(n, static_cast<int>(k)) * f.coeffs[k];
  return CoefficientSeries(std::move(c));
}

// Local approximant via the decomposition route: decompose f at zeta, damp
// the quotient coefficients, recompose a + (z - zeta) g_n.
inline CoefficientSeries build_fn(const CoefficientSeries& f,
                                  const WeightArray& a, int n,
                                  const DiskPoint& zeta) {
  if (n < 0) throw std::invalid_argument("build_fn: n must be >= 0");
  LocalDecomposition dec = decompose(f, zeta);
  const cplx z = zeta.value();
  if (n == 0 || dec.g.is_zero()) {
    return CoefficientSeries({dec.a});
  }
  CoefficientSeries gn = apply_to_g(a, dec.g, n);
  std::vector<cplx> c(gn.coeffs.size() + 1, cplx(0.0, 0.0));
  c[0] = dec.a;
  for (std::size_t k = 0; k < gn.coeffs.size(); ++k) {
    c[k + 1] += gn.coeffs[k];
    c[k] -= z * gn.coeffs[k];
  }
  return CoefficientSeries(std::move(c));
}

// Same polynomial assembled from the rearranged coefficient formula
//   sum w_{n,k} a_k z^k + zeta sum (w_{n,k} - w_{n,k+1}) b_k z^k
//   + (1 - w_{n,0}) a.
// Kept as the second route of the dual-route contract.
inline CoefficientSeries build_fn_coefficient_route(const CoefficientSeries& f,
                                                    const WeightArray& a,
                                                    int n,
                                                    const DiskPoint& zeta) {
  if (n < 0) throw std::invalid_argument("build_fn: n must be >= 0");
  LocalDecomposition dec = decompose(f, zeta);
  const cplx z = zeta.value();
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0, 0.0));
  for (int k = 0; k <= n; ++k) {
    if (static_cast<std::size_t>(k) < f.coeffs.size())
      c[k] += a.w(n, k) * f.coeffs[k];
    if (static_cast<std::size_t>(k) < dec.g.coeffs.size())
      c[k] += z * (a.w(n, k) - a.w(n, k + 1)) * dec.g.coeffs[k];
  }
  c[0] += (cplx(1.0) - a.w(n, 0)) * dec.a;
  return CoefficientSeries(std::move(c));
}

// Truncation-array special case: the first n Taylor coefficients plus the
// single tail coefficient b_{n-1} = sum_{k>=n} a_k zeta^{k-n} at z^n.
inline CoefficientSeries taylor_tail_fn(const CoefficientSeries& f,
                                        const DiskPoint& zeta, int n) {
  if (n < 1 || static_cast<std::size_t>(n) > f.degree())
    throw std::invalid_argument("taylor_tail_fn: need 1 <= n <= deg f");
  LocalDecomposition dec = decompose(f, zeta);
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0, 0.0));
  for (int k = 0; k < n; ++k)
    if (static_cast<std::size_t>(k) < f.coeffs.size()) c[k] = f.coeffs[k];
  c[n] = dec.g.coeffs[static_cast<std::size_t>(n) - 1];
  return CoefficientSeries(std::move(c));
}

struct ConvergenceRecord {
  int n = 0;
  double err_sq = 0.0;    // D_mu(f - p_n)
  double norm_sq = 0.0;   // ||f - p_n||^2_{D_mu}
  double bound_sq = 0.0;  // (1 + M + L)^2 D_mu(f); NaN when no L is claimed
};

inline std::vector<ConvergenceRecord> convergence_run(
    const CoefficientSeries& f, const DiskMeasure& mu, const WeightArray& a,
    const std::vector<int>& n_list) {
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("convergence_run: n_list must increase");
  double dmu_f = dirichlet_mu(f, mu);
  double bound = a.L ? (1.0 + a.M + *a.L) * (1.0 + a.M + *a.L) * dmu_f
                     : std::nan("");
  std::vector<ConvergenceRecord> out;
  out.reserve(n_list.size());
  for (int n : n_list) {
    CoefficientSeries diff = subtract(f, build_pn(f, a, n));
    ConvergenceRecord rec;
    rec.n = n;
    rec.err_sq = dirichlet_mu(diff, mu);
    rec.norm_sq = dmu_norm_sq(diff, mu);
    rec.bound_sq = bound;
    out.push_back(rec);
  }
  return out;
}

struct CounterexampleRecord {
  int j = 0;
  int n = 0;                      // n = 2^j - 1
  double taylor_err_sq = 0.0;     // D_1(f - s_n(f))
  double fejer_err_sq = 0.0;      // D_1(f - sigma_n(f))
  double taylor_closed_form = 0.0;  // (n+1)|t_{n+1}|^2 + sum_{k>n} |t_{k+1}|^2
};

// Lacunary tail sequence t_m = 2^{-j/2} at m = 2^j (1 <= j <= J), zero
// elsewhere; f has coefficients a_m = t_m - t_{m+1}, truncated at N = 2^J.
// Along n = 2^j - 1 the Taylor error stays >= 1 while the Fejer error decays.
inline std::vector<double> counterexample_tail(int J) {
  std::vector<double> t(static_cast<std::size_t>(1) << J, 0.0);
  t.resize((static_cast<std::size_t>(1) << J) + 1, 0.0);
  for (int j = 1; j <= J; ++j)
    t[static_cast<std::size_t>(1) << j] = std::pow(2.0, -0.5 * j);
  return t;
}

inline std::vector<CounterexampleRecord> counterexample_run(int J) {
  if (J < 3) throw std::invalid_argument("counterexample_run: J must be >= 3");
  std::vector<double> t = counterexample_tail(J);
  std::size_t N = static_cast<std::size_t>(1) << J;
  CoefficientSeries f = make_family("tail_designed", t, N);
  DiskPoint one(cplx(1.0, 0.0));
  WeightArray trunc = taylor_truncation();
  WeightArray fej = fejer();
  auto tail_at = [&](std::size_t m) { return m < t.size() ? t[m] : 0.0; };

  std::vector<CounterexampleRecord> out;
  for (int j = 1; j <= J; ++j) {
    int n = (1 << j) - 1;
    CounterexampleRecord rec;
    rec.j = j;
    rec.n = n;
    rec.taylor_err_sq =
        local_norm_sq(subtract(f, build_pn(f, trunc, n)), one);
    rec.fejer_err_sq = local_norm_sq(subtract(f, build_pn(f, fej, n)), one);
    KahanSum tail;
    tail.add((n + 1.0) * tail_at(n + 1) * tail_at(n + 1));
    for (std::size_t k = n + 1; k + 1 < t.size(); ++k)
      tail.add(tail_at(k + 1) * tail_at(k + 1));
    rec.taylor_closed_form = tail.value();
    out.push_back(rec);
  }
  return out;
}

}  // namespace dirichlet
