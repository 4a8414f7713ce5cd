#pragma once

// Triangular weight arrays (w_{n,k}): the summability kernels driving the
// polynomial approximants.  An array is admissible when
//   (C0) w_{n,k} = 0 for k > n
//   (C1) w_{n,k} -> 1 as n -> infinity, for each fixed k
//   (C2) |w_{n,k}| <= M
//   (C3) |w_{n,k} - w_{n,k+1}| <= L/n
// Arrays are generator functions, not stored matrices; the validator
// materializes rows lazily.  It checks at finite n with a tolerance, so it is
// a falsification tool, not a proof.

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "series.hpp"

namespace dirichlet {

struct WeightArray {
  std::function<cplx(int n, int k)> w;
  double M = 1.0;              // uniform bound (C2)
  std::optional<double> L;     // difference constant (C3); nullopt = none claimed
  std::string name;
};

inline WeightArray fejer() {
  WeightArray a;
  a.w = [](int n, int k) -> cplx {
    if (k > n) return 0.0;
    return 1.0 - static_cast<double>(k) / (n + 1);
  };
  a.M = 1.0;
  a.L = 1.0;
  a.name = "fejer";
  return a;
}

// Plain Taylor truncation: indicator of k <= n.  No valid L exists: the jump
// |w_{n,n} - w_{n,n+1}| = 1 beats L/n for every fixed L once n > L.
inline WeightArray taylor_truncation() {
  WeightArray a;
  a.w = [](int n, int k) -> cplx { return k <= n ? 1.0 : 0.0; };
  a.M = 1.0;
  a.L = std::nullopt;
  a.name = "truncation";
  return a;
}

// Flat until ceil(n/2), then a linear ramp reaching 0 at k = n+1.
inline WeightArray vallee_poussin() {
  WeightArray a;
  a.w = [](int n, int k) -> cplx {
    if (k > n) return 0.0;
    int m = (n + 1) / 2;  // ceil(n/2)
    if (k <= m) return 1.0;
    return static_cast<double>(n + 1 - k) / (n + 1 - m);
  };
  a.M = 1.0;
  a.L = 4.0;
  a.name = "vallee_poussin";
  return a;
}

struct ConditionResult {
  bool pass = true;
  int witness_n = -1;
  int witness_k = -1;
  double worst = 0.0;  // worst violating quantity seen
};

struct ValidationReport {
  ConditionResult triangular;    // C0
  ConditionResult limit_one;     // C1
  ConditionResult uniform_bound; // C2
  ConditionResult difference;    // C3
  bool all_pass() const {
    return triangular.pass && limit_one.pass && uniform_bound.pass &&
           difference.pass;
  }
};

inline ValidationReport validate(const WeightArray& a, int N_max, double tol) {
  ValidationReport r;
  const double eps = 1e-12;

  // C0: zero beyond the diagonal, spot-checked a few columns past it.
  for (int n = 1; n <= N_max && r.triangular.pass; ++n)
    for (int k = n + 1; k <= n + 8; ++k)
      if (std::abs(a.w(n, k)) > eps) {
        r.triangular = {false, n, k, std::abs(a.w(n, k))};
        break;
      }

  // C1: |w_{N_max,k} - 1| <= tol for k up to log2(N_max).
  int kmax = static_cast<int>(std::log2(static_cast<double>(N_max)));
  for (int k = 0; k <= kmax; ++k) {
    double dev = std::abs(a.w(N_max, k) - cplx(1.0));
    if (dev > tol && dev > r.limit_one.worst)
      r.limit_one = {false, N_max, k, dev};
  }

  // C2 and C3 over the full triangle.
  double worst_scaled_diff = 0.0;
  int wn = -1, wk = -1;
  for (int n = 1; n <= N_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      double mag = std::abs(a.w(n, k));
      if (mag > a.M + eps && mag > r.uniform_bound.worst)
        r.uniform_bound = {false, n, k, mag};
      double diff = std::abs(a.w(n, k) - a.w(n, k + 1));
      double scaled = diff * n;
      if (scaled > worst_scaled_diff) {
        worst_scaled_diff = scaled;
        wn = n;
        wk = k;
      }
    }
  }
  if (a.L) {
    if (worst_scaled_diff > *a.L + eps)
      r.difference = {false, wn, wk, worst_scaled_diff};
  } else {
    // No finite L claimed; report the worst witness outright.
    r.difference = {false, wn, wk, worst_scaled_diff};
  }
  return r;
}

// g_n(z) := sum_{k=0}^{n-1} w_{n,k+1} b_k z^k.  Satisfies
// ||g_n||_{H^2} <= M ||g||_{H^2}.
inline CoefficientSeries apply_to_g(const WeightArray& a,
                                    const CoefficientSeries& g, int n) {
  if (n < 1) throw std::invalid_argument("apply_to_g: n must be >= 1");
  std::size_t len = std::min<std::size_t>(n, g.coeffs.size());
  std::vector<cplx> c(std::max<std::size_t>(len, 1), cplx(0.0, 0.0));
  for (std::size_t k = 0; k < len; ++k)
    c[k] = a.w(n, static_cast<int>(k) + 1) * g.coeffs[k];
  return CoefficientSeries(std::move(c));
}

}  // namespace dirichlet
