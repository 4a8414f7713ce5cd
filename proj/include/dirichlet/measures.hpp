#pragma once

// Finite positive measures mu on the closed disk and the integrated norm
//   D_mu(f) = integral of D_zeta(f) dmu(zeta),
//   ||f||_{D_mu}^2 = |f(0)|^2 + D_mu(f).
// Three variants: atomic, circle density (wrt dtheta on T), disk density
// (wrt Lebesgue r dr dtheta).  Circle integration is the trapezoid rule on
// uniform angles, spectrally accurate for smooth periodic integrands; disk
// integration is tensor Gauss-Legendre (radial) x trapezoid (angular).

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "local.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "series.hpp"

namespace dirichlet {

struct Atom {
  DiskPoint zeta;
  double mass = 0.0;
};

struct AtomicMeasure {
  std::vector<Atom> atoms;
};

struct CircleDensityMeasure {
  std::function<double(double)> density;  // of theta in [0, 2pi)
  int node_count = 256;                   // even, >= 8
};

struct DiskDensityMeasure {
  std::function<double(double, double)> density;  // of (r, theta)
  int radial_nodes = 64;                          // >= 4
  int angular_nodes = 256;                        // >= 8
};

class DiskMeasure {
public:
  using Variant =
      std::variant<AtomicMeasure, CircleDensityMeasure, DiskDensityMeasure>;

  DiskMeasure(Variant v, std::string id = {})
      : variant_(std::move(v)), id_(std::move(id)) {
    check();
    total_mass_ = compute_mass();
    if (!(total_mass_ > 0.0) || !std::isfinite(total_mass_))
      throw std::invalid_argument("DiskMeasure: total mass must be positive");
  }

  static DiskMeasure atomic(std::vector<Atom> atoms, std::string id = {}) {
    return DiskMeasure(AtomicMeasure{std::move(atoms)}, std::move(id));
  }

  static DiskMeasure point_mass(cplx zeta, double mass = 1.0,
                                std::string id = {}) {
    return atomic({Atom{DiskPoint(zeta), mass}}, std::move(id));
  }

  // Normalized arclength on T: total mass 1.
  static DiskMeasure uniform_circle(int nodes = 256) {
    return DiskMeasure(
        CircleDensityMeasure{[](double) { return 1.0 / (2.0 * M_PI); }, nodes},
        "uniform_T");
  }

  const Variant& variant() const { return variant_; }
  double total_mass() const { return total_mass_; }
  const std::string& id() const { return id_; }

private:
  void check() const {
    if (const auto* a = std::get_if<AtomicMeasure>(&variant_)) {
      if (a->atoms.empty())
        throw std::invalid_argument("atomic measure: no atoms");
      for (const Atom& at : a->atoms)
        if (!(at.mass > 0.0))
          throw std::invalid_argument("atomic measure: masses must be > 0");
    } else if (const auto* c = std::get_if<CircleDensityMeasure>(&variant_)) {
      if (c->node_count < 8 || c->node_count % 2 != 0)
        throw std::invalid_argument("circle measure: need even nodes >= 8");
    } else if (const auto* d = std::get_if<DiskDensityMeasure>(&variant_)) {
      if (d->radial_nodes < 4 || d->angular_nodes < 8)
        throw std::invalid_argument("disk measure: too few nodes");
    }
  }

  double compute_mass() const {
    if (const auto* a = std::get_if<AtomicMeasure>(&variant_)) {
      KahanSum s;
      for (const Atom& at : a->atoms) s.add(at.mass);
      return s.value();
    }
    if (const auto* c = std::get_if<CircleDensityMeasure>(&variant_)) {
      const int K = c->node_count;
      KahanSum s;
      for (int j = 0; j < K; ++j) {
        double v = c->density(2.0 * M_PI * j / K);
        if (v < 0.0)
          throw std::invalid_argument("circle measure: negative density");
        s.add(v);
      }
      return s.value() * 2.0 * M_PI / K;
    }
    const auto& d = std::get<DiskDensityMeasure>(variant_);
    QuadRule rr = radial_rule(d.radial_nodes, {});
    const int K = d.angular_nodes;
    KahanSum s;
    for (std::size_t i = 0; i < rr.nodes.size(); ++i) {
      double r = rr.nodes[i];
      for (int j = 0; j < K; ++j) {
        double v = d.density(r, 2.0 * M_PI * j / K);
        if (v < 0.0)
          throw std::invalid_argument("disk measure: negative density");
        s.add(v * r * rr.weights[i]);
      }
    }
    return s.value() * 2.0 * M_PI / K;
  }

  Variant variant_;
  std::string id_;
  double total_mass_ = 0.0;
};

inline double dirichlet_mu(const CoefficientSeries& f, const DiskMeasure& mu) {
  if (const auto* a = std::get_if<AtomicMeasure>(&mu.variant())) {
    std::vector<double> vals(a->atoms.size());
    parallel_for(vals.size(), [&](std::size_t i) {
      vals[i] = a->atoms[i].mass * local_norm_sq(f, a->atoms[i].zeta);
    });
    return pairwise_sum(std::move(vals));
  }
  if (const auto* c = std::get_if<CircleDensityMeasure>(&mu.variant())) {
    const int K = c->node_count;
    std::vector<double> vals(K);
    parallel_for(static_cast<std::size_t>(K), [&](std::size_t j) {
      double th = 2.0 * M_PI * static_cast<double>(j) / K;
      DiskPoint zeta(std::polar(1.0, th));
      vals[j] = local_norm_sq(f, zeta) * c->density(th);
    });
    return pairwise_sum(std::move(vals)) * 2.0 * M_PI / K;
  }
  const auto& d = std::get<DiskDensityMeasure>(mu.variant());
  QuadRule rr = radial_rule(d.radial_nodes, {});
  const int K = d.angular_nodes;
  std::vector<double> vals(rr.nodes.size() * K);
  parallel_for(vals.size(), [&](std::size_t idx) {
    std::size_t i = idx / K;
    int j = static_cast<int>(idx % K);
    double r = rr.nodes[i];
    double th = 2.0 * M_PI * j / K;
    DiskPoint zeta(std::polar(r, th));
    vals[idx] =
        local_norm_sq(f, zeta) * d.density(r, th) * r * rr.weights[i];
  });
  return pairwise_sum(std::move(vals)) * 2.0 * M_PI / K;
}

inline double dmu_norm_sq(const CoefficientSeries& f, const DiskMeasure& mu) {
  return std::norm(f.coeffs[0]) + dirichlet_mu(f, mu);
}

}  // namespace dirichlet
