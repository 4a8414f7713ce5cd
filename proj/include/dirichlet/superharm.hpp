#pragma once

// Superharmonic weights from the representation formula
//   omega(z) = int_D log|(1 - conj(zeta) z)/(zeta - z)| * 2/(1-|zeta|^2) dmu
//            + int_T (1-|z|^2)/|zeta - z|^2 dmu
// and the weighted area Dirichlet integral
//   int_D |f'(z)|^2 omega(z) dA(z),  dA = normalized area measure.
// The identity check compares this integral against the coefficient-side
// norm D_mu(f).
//
// Quadrature: composite Gauss-Legendre panels in r (graded rings at radial
// distances {1e-2, 1e-4, 1e-6} from interior atom radii) x trapezoid in
// theta.  Near a singular radius the angular integrand is sharply peaked, so
// the trapezoid node count for that ring is raised until the aliased modes
// are negligible; elsewhere the plain count applies.

#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "measures.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "series.hpp"

namespace dirichlet {

class SingularEvaluation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// log|(1 - conj(zeta) z)/(zeta - z)| * 2/(1 - |zeta|^2), zeta interior.
inline double interior_log_kernel(cplx zeta, cplx z) {
  double dist = std::abs(zeta - z);
  if (dist < 1e-13)
    throw SingularEvaluation("omega evaluation at an interior atom");
  return std::log(std::abs(1.0 - std::conj(zeta) * z) / dist) * 2.0 /
         (1.0 - std::norm(zeta));
}

inline double poisson_kernel(cplx zeta, cplx z) {
  return (1.0 - std::norm(z)) / std::norm(zeta - z);
}

}  // namespace detail

class SuperharmonicWeight {
public:
  explicit SuperharmonicWeight(const DiskMeasure& mu) {
    if (const auto* a = std::get_if<AtomicMeasure>(&mu.variant())) {
      for (const Atom& at : a->atoms) {
        if (at.zeta.on_circle())
          boundary_atoms_.push_back(at);
        else
          interior_atoms_.push_back(at);
      }
    } else if (const auto* c =
                   std::get_if<CircleDensityMeasure>(&mu.variant())) {
      // Poisson extension of the density via its Fourier coefficients,
      // sampled at the measure's own nodes.
      const int K = c->node_count;
      circle_modes_.resize(K / 2);
      for (int m = 0; m < K / 2; ++m) {
        cplx acc(0.0, 0.0);
        for (int j = 0; j < K; ++j) {
          double th = 2.0 * M_PI * j / K;
          acc += c->density(th) * std::polar(1.0, -m * th);
        }
        circle_modes_[m] = acc * (2.0 * M_PI / K);
      }
      circle_bandwidth_ = K / 2;
    } else {
      // Disk density: discretize into weighted interior point masses on the
      // measure's own quadrature grid.
      const auto& d = std::get<DiskDensityMeasure>(mu.variant());
      QuadRule rr = radial_rule(d.radial_nodes, {});
      const int K = d.angular_nodes;
      for (std::size_t i = 0; i < rr.nodes.size(); ++i) {
        double r = rr.nodes[i];
        for (int j = 0; j < K; ++j) {
          double th = 2.0 * M_PI * j / K;
          double mass = d.density(r, th) * r * rr.weights[i] * 2.0 * M_PI / K;
          if (mass > 0.0)
            interior_atoms_.push_back(Atom{DiskPoint(std::polar(r, th)), mass});
        }
      }
      atomized_density_ = true;
    }
  }

  double operator()(cplx z) const {
    if (std::abs(z) >= 1.0)
      throw std::domain_error("omega evaluation requires |z| < 1");
    KahanSum s;
    for (const Atom& at : interior_atoms_)
      s.add(at.mass * detail::interior_log_kernel(at.zeta.value(), z));
    for (const Atom& at : boundary_atoms_)
      s.add(at.mass * detail::poisson_kernel(at.zeta.value(), z));
    if (!circle_modes_.empty()) {
      // Poisson extension: omega = c_0 + 2 sum_{m>=1} r^m Re(c_m e^{im th}),
      // c_m = int rho(th) e^{-im th} dth.
      double r = std::abs(z);
      double th = std::arg(z);
      s.add(circle_modes_[0].real());
      double rm = 1.0;
      for (std::size_t m = 1; m < circle_modes_.size(); ++m) {
        rm *= r;
        s.add(2.0 * rm * (circle_modes_[m] * std::polar(1.0, m * th)).real());
      }
    }
    return s.value();
  }

  const std::vector<Atom>& interior_atoms() const { return interior_atoms_; }
  const std::vector<Atom>& boundary_atoms() const { return boundary_atoms_; }
  bool has_circle_part() const { return !circle_modes_.empty(); }
  int circle_bandwidth() const { return circle_bandwidth_; }
  bool atomized_density() const { return atomized_density_; }

  // Radii whose neighborhoods need graded radial panels.
  std::vector<double> singular_radii() const {
    std::vector<double> out;
    if (atomized_density_) return out;  // smooth after integration
    for (const Atom& at : interior_atoms_)
      out.push_back(std::abs(at.zeta.value()));
    return out;
  }

  bool boundary_peaked() const { return !boundary_atoms_.empty(); }

  bool warn_near_boundary_atom() const {
    for (const Atom& at : interior_atoms_)
      if (std::abs(at.zeta.value()) > 0.8) return true;
    return false;
  }

private:
  std::vector<Atom> interior_atoms_;
  std::vector<Atom> boundary_atoms_;
  std::vector<cplx> circle_modes_;  // int rho(th) e^{-im th} dth
  int circle_bandwidth_ = 0;
  bool atomized_density_ = false;
};

struct PowerWeight {
  double alpha = 1.0;  // in [0,1]
  double operator()(cplx z) const {
    return std::pow(1.0 - std::norm(z), 1.0 - alpha);
  }
};

// Weight plus the structural hints the quadrature needs.
struct WeightField {
  std::function<double(cplx)> eval;
  std::vector<double> interior_singular_radii;
  bool boundary_peaked = false;
  int min_angular_bandwidth = 0;  // e.g. circle-density weights
};

inline WeightField field_of(const SuperharmonicWeight& w) {
  WeightField fld;
  fld.eval = [&w](cplx z) { return w(z); };
  fld.interior_singular_radii = w.singular_radii();
  fld.boundary_peaked = w.boundary_peaked();
  fld.min_angular_bandwidth = w.circle_bandwidth();
  return fld;
}

inline WeightField field_of(const PowerWeight& w) {
  return WeightField{[w](cplx z) { return w(z); }, {}, false, 0};
}

// (1/pi) int int |f'(r e^{i th})|^2 w(r e^{i th}) r dr dth.
inline double area_dirichlet(const CoefficientSeries& f, const WeightField& w,
                             int nodes_r = 64, int nodes_theta = 256) {
  CoefficientSeries fp = derivative(f);
  const int bandwidth = 2 * static_cast<int>(fp.degree());

  std::vector<double> graded;
  for (double rho : w.interior_singular_radii) graded.push_back(rho);
  QuadRule rr = radial_rule(nodes_r, graded);

  // Angular node count per ring: enough to push aliased modes of the
  // product below ~e^{-38} wherever a singular radius narrows the strip of
  // analyticity.
  auto theta_count = [&](double r) -> int {
    int n = std::max(nodes_theta, bandwidth + w.min_angular_bandwidth + 8);
    double u = std::numeric_limits<double>::infinity();
    for (double rho : w.interior_singular_radii)
      if (rho > 1e-12) u = std::min(u, std::abs(std::log(r / rho)));
    if (w.boundary_peaked) u = std::min(u, -std::log(r));
    if (std::isfinite(u) && u > 0.0) {
      double need = bandwidth + 38.0 / u;
      n = std::max(n, static_cast<int>(std::min(need + 1.0, 131072.0)));
    }
    return n + (n % 2);
  };

  std::vector<double> ring(rr.nodes.size());
  std::string failure;
  std::mutex failure_mtx;
  parallel_for(rr.nodes.size(), [&](std::size_t i) {
    double r = rr.nodes[i];
    int N = theta_count(r);
    KahanSum s;
    for (int j = 0; j < N; ++j) {
      cplx z = std::polar(r, 2.0 * M_PI * j / N);
      double wv = w.eval(z);
      if (!std::isfinite(wv)) {
        std::lock_guard<std::mutex> lock(failure_mtx);
        failure = "non-finite weight at r=" + std::to_string(r) +
                  " theta=" + std::to_string(2.0 * M_PI * j / N);
        return;
      }
      s.add(std::norm(evaluate(fp, z)) * wv);
    }
    // (1/pi) * 2 pi / N * (r w_r) = 2 r w_r / N
    ring[i] = s.value() * 2.0 * r * rr.weights[i] / N;
  });
  if (!failure.empty()) throw std::runtime_error("area_dirichlet: " + failure);
  return pairwise_sum(std::move(ring));
}

struct IdentityReport {
  double lhs = 0.0;  // area integral of |f'|^2 omega
  double rhs = 0.0;  // D_mu(f)
  double abs_err = 0.0;
  double rel_err = 0.0;
  int nodes_r = 0;
  int nodes_theta = 0;
  bool warning = false;  // an interior atom with |zeta| > 0.8
};

inline IdentityReport identity_check(const CoefficientSeries& f,
                                     const DiskMeasure& mu, int nodes_r = 64,
                                     int nodes_theta = 256) {
  SuperharmonicWeight w(mu);
  IdentityReport rep;
  rep.lhs = area_dirichlet(f, field_of(w), nodes_r, nodes_theta);
  rep.rhs = dirichlet_mu(f, mu);
  rep.abs_err = std::abs(rep.lhs - rep.rhs);
  double scale = std::max(std::abs(rep.rhs), 1e-300);
  rep.rel_err = rep.abs_err / scale;
  rep.nodes_r = nodes_r;
  rep.nodes_theta = nodes_theta;
  rep.warning = w.warn_near_boundary_atom();
  return rep;
}

struct PowerWeightReport {
  double integral = 0.0;   // area Dirichlet integral with (1-|z|^2)^{1-alpha}
  double coeff_sum = 0.0;  // sum k^alpha |a_k|^2
  double ratio = 0.0;
};

inline PowerWeightReport power_weight_comparison(const CoefficientSeries& f,
                                                 double alpha,
                                                 int nodes_r = 512,
                                                 int nodes_theta = 256) {
  if (alpha < 0.0 || alpha > 1.0)
    throw std::invalid_argument("power weight: alpha must be in [0,1]");
  if (f.degree() == 0)
    throw std::invalid_argument("power weight comparison: constant function");
  PowerWeightReport rep;
  rep.integral = area_dirichlet(f, field_of(PowerWeight{alpha}), nodes_r,
                                nodes_theta);
  KahanSum s;
  for (std::size_t k = 1; k < f.coeffs.size(); ++k)
    s.add(std::pow(static_cast<double>(k), alpha) * std::norm(f.coeffs[k]));
  rep.coeff_sum = s.value();
  rep.ratio = rep.integral / rep.coeff_sum;
  return rep;
}

}  // namespace dirichlet
