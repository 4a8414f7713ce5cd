#pragma once

// Gauss-Legendre rules, composite radial panels with graded refinement near
// singular radii, and a fixed-shape pairwise reduction for reproducible sums.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace dirichlet {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and weights on [-1,1], Newton iteration on the Legendre polynomial.
inline QuadRule gauss_legendre(int n) {
  QuadRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (x * p1 - p2) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.nodes[i] = -x;
    q.nodes[n - 1 - i] = x;
    q.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    q.weights[n - 1 - i] = q.weights[i];
  }
  return q;
}

// Composite rule on [0,1]: base panels of fixed order, extra breakpoints at
// the given radii with graded rings at distances {1e-2, 1e-4, 1e-6}.  The
// grading makes integrable log singularities at those radii converge fast.
inline QuadRule radial_rule(int total_nodes,
                            const std::vector<double>& singular_radii,
                            int panel_order = 8) {
  int base_panels = std::max(1, total_nodes / panel_order);
  std::vector<double> brk;
  brk.reserve(base_panels + 1 + 8 * singular_radii.size());
  for (int i = 0; i <= base_panels; ++i)
    brk.push_back(static_cast<double>(i) / base_panels);
  const double rings[] = {1e-2, 1e-4, 1e-6};
  for (double rho : singular_radii) {
    if (rho < 0.0 || rho > 1.0) continue;
    brk.push_back(rho);
    for (double d : rings) {
      if (rho - d > 0.0) brk.push_back(rho - d);
      if (rho + d < 1.0) brk.push_back(rho + d);
    }
  }
  std::sort(brk.begin(), brk.end());
  brk.erase(std::unique(brk.begin(), brk.end(),
                        [](double a, double b) { return b - a < 1e-15; }),
            brk.end());
  if (brk.front() > 0.0) brk.insert(brk.begin(), 0.0);
  if (brk.back() < 1.0) brk.push_back(1.0);

  QuadRule gl = gauss_legendre(panel_order);
  QuadRule out;
  for (std::size_t p = 0; p + 1 < brk.size(); ++p) {
    double a = brk[p], b = brk[p + 1];
    double h = 0.5 * (b - a), c = 0.5 * (b + a);
    for (int i = 0; i < panel_order; ++i) {
      out.nodes.push_back(c + h * gl.nodes[i]);
      out.weights.push_back(h * gl.weights[i]);
    }
  }
  return out;
}

// Fixed-shape pairwise tree reduction; bitwise reproducible for a given size.
inline double pairwise_sum(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::size_t n = v.size();
  while (n > 1) {
    std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) v[i] = v[2 * i] + v[2 * i + 1];
    if (n % 2) {
      v[half] = v[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return v[0];
}

}  // namespace dirichlet
