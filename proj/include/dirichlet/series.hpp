#pragma once

// Finite complex coefficient vectors standing for polynomials or truncated
// power series on the unit disk, plus the basic Hardy-space operations.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace dirichlet {

using cplx = std::complex<double>;

// Compensated (Kahan) accumulator for fixed-order real sums.
class KahanSum {
public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

enum class SeriesKind { ExactPolynomial, Truncation };

struct CoefficientSeries {
  std::vector<cplx> coeffs;  // index = power of z, never empty
  SeriesKind kind = SeriesKind::ExactPolynomial;
  std::string family_tag;  // optional closed-form family name

  CoefficientSeries() : coeffs{cplx(0.0, 0.0)} {}
  explicit CoefficientSeries(std::vector<cplx> c,
                             SeriesKind k = SeriesKind::ExactPolynomial,
                             std::string tag = {})
      : coeffs(std::move(c)), kind(k), family_tag(std::move(tag)) {
    if (coeffs.empty()) coeffs.assign(1, cplx(0.0, 0.0));
  }

  std::size_t degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
      if (coeffs[i] != cplx(0.0, 0.0)) return i;
    return 0;
  }

  bool is_zero() const { return degree() == 0 && coeffs[0] == cplx(0.0, 0.0); }

  // Drops trailing zero coefficients (keeps at least one entry).
  CoefficientSeries trimmed() const {
    CoefficientSeries out = *this;
    out.coeffs.resize(degree() + 1);
    return out;
  }
};

// Point of the closed unit disk.  Values with modulus in (1, 1+1e-12] are
// renormalized to modulus exactly 1; anything larger is rejected.
class DiskPoint {
public:
  DiskPoint() : value_(0.0, 0.0) {}
  explicit DiskPoint(cplx v) : value_(v) {
    double m = std::abs(v);
    if (m > 1.0 + 1e-12)
      throw std::invalid_argument("DiskPoint: |value| > 1 beyond tolerance");
    if (m > 1.0) value_ = v / m;
  }
  cplx value() const { return value_; }
  bool on_circle() const { return std::abs(value_) >= 1.0 - 1e-14; }

private:
  cplx value_;
};

// Horner evaluation of sum c_k z^k.
inline cplx evaluate(const CoefficientSeries& f, cplx z) {
  cplx acc(0.0, 0.0);
  for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = acc * z + f.coeffs[i];
  return acc;
}

inline CoefficientSeries derivative(const CoefficientSeries& f) {
  if (f.coeffs.size() <= 1)
    return CoefficientSeries({cplx(0.0, 0.0)}, f.kind);
  std::vector<cplx> d(f.coeffs.size() - 1);
  for (std::size_t k = 1; k < f.coeffs.size(); ++k)
    d[k - 1] = static_cast<double>(k) * f.coeffs[k];
  return CoefficientSeries(std::move(d), f.kind);
}

// Sum of |c_k|^2 in ascending k with compensated summation.
inline double h2_norm_sq(const CoefficientSeries& f) {
  KahanSum s;
  for (const cplx& c : f.coeffs) s.add(std::norm(c));
  return s.value();
}

inline CoefficientSeries subtract(const CoefficientSeries& f,
                                  const CoefficientSeries& g) {
  std::vector<cplx> out(std::max(f.coeffs.size(), g.coeffs.size()),
                        cplx(0.0, 0.0));
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) out[i] += f.coeffs[i];
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) out[i] -= g.coeffs[i];
  return CoefficientSeries(std::move(out));
}

inline CoefficientSeries add(const CoefficientSeries& f,
                             const CoefficientSeries& g) {
  std::vector<cplx> out(std::max(f.coeffs.size(), g.coeffs.size()),
                        cplx(0.0, 0.0));
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) out[i] += f.coeffs[i];
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) out[i] += g.coeffs[i];
  return CoefficientSeries(std::move(out));
}

// Named truncation families used throughout the experiments.
//   geometric      params = {lambda}, a_k = lambda^k, |lambda| < 1
//   inverse_square a_k = 1/(k+1)^2
//   monomial       params = {m}, a_k = [k == m]
//   tail_designed  params = tail sequence t_0..t_T, a_j = t_j - t_{j+1}
inline CoefficientSeries make_family(const std::string& name,
                                     const std::vector<double>& params,
                                     std::size_t N) {
  std::vector<cplx> c(N + 1, cplx(0.0, 0.0));
  if (name == "geometric") {
    if (params.size() != 1)
      throw std::invalid_argument("geometric family needs one parameter");
    double lambda = params[0];
    if (std::abs(lambda) >= 1.0)
      throw std::invalid_argument("geometric family needs |lambda| < 1");
    double p = 1.0;
    for (std::size_t k = 0; k <= N; ++k, p *= lambda) c[k] = p;
  } else if (name == "inverse_square") {
    for (std::size_t k = 0; k <= N; ++k)
      c[k] = 1.0 / (static_cast<double>(k + 1) * static_cast<double>(k + 1));
  } else if (name == "monomial") {
    if (params.size() != 1)
      throw std::invalid_argument("monomial family needs one parameter");
    auto m = static_cast<std::size_t>(params[0]);
    if (m <= N) c[m] = 1.0;
  } else if (name == "tail_designed") {
    auto t = [&](std::size_t j) -> double {
      return j < params.size() ? params[j] : 0.0;
    };
    for (std::size_t j = 0; j <= N; ++j) c[j] = t(j) - t(j + 1);
  } else {
    throw std::invalid_argument("unknown series family: " + name);
  }
  return CoefficientSeries(std::move(c), SeriesKind::Truncation, name);
}

// Coefficient file format: JSON array of [re, im] pairs, index = power of z.
inline CoefficientSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("coefficient file: expected nonempty array");
  std::vector<cplx> c;
  c.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
        !e[1].is_number())
      throw std::invalid_argument("coefficient file: entries must be [re,im]");
    double re = e[0].get<double>();
    double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw std::invalid_argument("coefficient file: non-finite entry");
    c.emplace_back(re, im);
  }
  return CoefficientSeries(std::move(c));
}

inline nlohmann::json series_to_json(const CoefficientSeries& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const cplx& c : f.coeffs) j.push_back({c.real(), c.imag()});
  return j;
}

}  // namespace dirichlet
