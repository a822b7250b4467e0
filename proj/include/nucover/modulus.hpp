#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>

namespace nucover {

/// L(eta) = A / eta + B.
struct RationalModulus {
  double a = 1.0;
  double b = 0.0;
};

/// L(eta) = 5*pi + 2 / sqrt(1 - tau(eta/2)^2)  for 0 < eta/2 < eta_tilde,
///          5*pi + pi - eta/2                    for eta_tilde <= eta/2 < pi.
struct PiecewiseModulus {
  double sigma = 0.0;
  double eta_tilde = 0.0;
  std::function<double(double)> tau;
};

struct CustomModulus {
  std::function<double(double)> evaluate;
};

/// Vanderbei modulus eta -> L(eta): |f(x) - f(y)| <= L(eta) |x - y| + eta.
/// Immutable once built; `scale` multiplies every value (used to move the
/// modulus between norms, e.g. sqrt(n) for 1-norm constants on 2-norm balls).
class VanderbeiModulus {
 public:
  using Form = std::variant<RationalModulus, PiecewiseModulus, CustomModulus>;

  VanderbeiModulus() : VanderbeiModulus(RationalModulus{}) {}
  VanderbeiModulus(RationalModulus m) : form_(m) {
    if (!(m.a > 0.0) || !(m.b >= 0.0))
      throw std::invalid_argument("RationalModulus: require A > 0, B >= 0");
  }
  VanderbeiModulus(PiecewiseModulus m) : form_(std::move(m)) {
    const auto& p = std::get<PiecewiseModulus>(form_);
    if (!p.tau || !(p.eta_tilde > 0.0))
      throw std::invalid_argument("PiecewiseModulus: require tau solver and eta_tilde > 0");
  }
  VanderbeiModulus(CustomModulus m) : form_(std::move(m)) {
    if (!std::get<CustomModulus>(form_).evaluate)
      throw std::invalid_argument("CustomModulus: empty evaluator");
  }

  static VanderbeiModulus rational(double a, double b) { return VanderbeiModulus(RationalModulus{a, b}); }
  static VanderbeiModulus custom(std::function<double(double)> f) { return VanderbeiModulus(CustomModulus{std::move(f)}); }
  static VanderbeiModulus constant(double l) {
    return custom([l](double) { return l; });
  }

  const Form& form() const noexcept { return form_; }
  double scale() const noexcept { return scale_; }
  bool is_rational() const noexcept { return std::holds_alternative<RationalModulus>(form_); }
  bool is_custom() const noexcept { return std::holds_alternative<CustomModulus>(form_); }

  /// Rational coefficients after scaling. Only valid for the rational form.
  RationalModulus rational_coefficients() const {
    const auto& r = std::get<RationalModulus>(form_);
    return {r.a * scale_, r.b * scale_};
  }

  VanderbeiModulus scaled(double factor) const {
    if (!(factor > 0.0)) throw std::invalid_argument("VanderbeiModulus::scaled: factor must be positive");
    VanderbeiModulus copy = *this;
    copy.scale_ *= factor;
    return copy;
  }

  double operator()(double eta) const {
    if (!(eta > 0.0)) throw std::invalid_argument("modulus: eta must be positive");
    const double value = std::visit([eta](const auto& m) { return eval(m, eta); }, form_) * scale_;
    if (!(value > 0.0) || std::isnan(value))
      throw std::domain_error("modulus: L(eta) must be positive, got " + std::to_string(value));
    return value;
  }

 private:
  static double eval(const RationalModulus& m, double eta) { return m.a / eta + m.b; }

  static double eval(const PiecewiseModulus& m, double eta) {
    constexpr double pi = 3.14159265358979323846;
    const double half = 0.5 * eta;
    if (half >= pi) throw std::domain_error("piecewise modulus: eta/2 must be below pi");
    if (half < m.eta_tilde) {
      const double t = m.tau(half);
      return 5.0 * pi + 2.0 / std::sqrt((1.0 - t) * (1.0 + t));
    }
    return 5.0 * pi + (pi - half);
  }

  static double eval(const CustomModulus& m, double eta) { return m.evaluate(eta); }

  Form form_;
  double scale_ = 1.0;
};

inline double modulus_eval(const VanderbeiModulus& m, double eta) { return m(eta); }

/// Base covering step h = 2 (eps - eta) / L(eta).
inline double base_step(double eps, double eta, const VanderbeiModulus& m) {
  if (!(eta > 0.0) || !(eta < eps)) throw std::invalid_argument("base_step: require 0 < eta < eps");
  return 2.0 * (eps - eta) / m(eta);
}

struct DiscardRadius {
  double rho = 0.0;
  double eta = 0.0;
};

namespace detail {

struct RadiusObjective {
  const VanderbeiModulus& modulus;
  double slack;  // gap + eps
  double operator()(double eta) const { return (slack - eta) / modulus(eta); }
};

inline void check_radius_args(double gap, double eps, double beta) {
  if (!(gap >= 0.0)) throw std::invalid_argument("discard_radius: gap must be nonnegative");
  if (!(eps > 0.0)) throw std::invalid_argument("discard_radius: eps must be positive");
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("discard_radius: beta must lie in (0,1)");
}

inline double radius_floor(double eps, double beta, const VanderbeiModulus& m) {
  return (1.0 - beta) * eps / m(beta * eps);
}

inline void check_floor(const DiscardRadius& r, double eps, double beta, const VanderbeiModulus& m) {
  // Only monotone forms carry the floor guarantee.
  if (m.is_custom()) return;
  if (r.rho < radius_floor(eps, beta, m) - 1e-12)
    throw std::logic_error("discard_radius: result below guaranteed floor (1-beta)eps/L(beta eps)");
}

}  // namespace detail

/// sup over eta in (0, phi] of (gap + eps - eta)/L(eta) by golden-section
/// search on [1e-12 phi, phi] with absolute tolerance 1e-10 phi. The upper
/// end phi is always a candidate; for custom moduli a 64-point grid is
/// sampled too, since unimodality is not known. The returned rho is the
/// objective at the returned eta.
inline DiscardRadius discard_radius_golden(double gap, double eps, double beta, const VanderbeiModulus& m) {
  detail::check_radius_args(gap, eps, beta);
  const double phi = gap + beta * eps;
  const detail::RadiusObjective g{m, gap + eps};

  DiscardRadius best{g(phi), phi};
  auto consider = [&](double eta) {
    const double v = g(eta);
    if (v > best.rho) best = {v, eta};
  };

  double lo = 1e-12 * phi;
  double hi = phi;
  if (m.is_custom()) {
    constexpr int samples = 64;
    int best_i = samples;
    for (int i = 1; i < samples; ++i) {
      const double eta = phi * i / samples;
      const double v = g(eta);
      if (v > best.rho) {
        best = {v, eta};
        best_i = i;
      }
    }
    lo = std::max(lo, phi * (best_i - 1) / samples);
    hi = std::min(phi, phi * (best_i + 1) / samples);
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol = 1e-10 * phi;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  while (hi - lo > tol) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g(x1);
    }
  }
  if (g1 > best.rho) best = {g1, x1};
  if (g2 > best.rho) best = {g2, x2};
  consider(0.5 * (lo + hi));
  return best;
}

/// Closed-form maximiser for the rational modulus. With
/// g(eta) = (c - eta) eta / (A + B eta), c = gap + eps, the stationary point
/// solves B eta^2 + 2 A eta - A c = 0, i.e. eta = A c / (A + sqrt(A (A + B c))),
/// clipped to phi.
inline DiscardRadius discard_radius_rational(double gap, double eps, double beta, const VanderbeiModulus& m) {
  detail::check_radius_args(gap, eps, beta);
  const auto [a, b] = m.rational_coefficients();
  const double c = gap + eps;
  const double phi = gap + beta * eps;
  const double stationary = a * c / (a + std::sqrt(a * (a + b * c)));
  const double eta = std::min(stationary, phi);
  return {(c - eta) / m(eta), eta};
}

/// Safe discard radius rho with the eta attaining it (0 < eta <= phi).
inline DiscardRadius discard_radius(double gap, double eps, double beta, const VanderbeiModulus& m) {
  DiscardRadius r = m.is_rational() ? discard_radius_rational(gap, eps, beta, m)
                                    : discard_radius_golden(gap, eps, beta, m);
  detail::check_floor(r, eps, beta, m);
  return r;
}

/// discard_radius with a per-run memo keyed by phi = gap + beta*eps.
class RadiusSolver {
 public:
  RadiusSolver(VanderbeiModulus modulus, double eps, double beta)
      : modulus_(std::move(modulus)), eps_(eps), beta_(beta) {
    detail::check_radius_args(0.0, eps, beta);
  }

  DiscardRadius operator()(double gap) {
    const double phi = gap + beta_ * eps_;
    if (auto it = memo_.find(phi); it != memo_.end()) {
      ++hits_;
      return it->second;
    }
    const DiscardRadius r = discard_radius(gap, eps_, beta_, modulus_);
    memo_.emplace(phi, r);
    return r;
  }

  std::size_t memo_hits() const noexcept { return hits_; }
  const VanderbeiModulus& modulus() const noexcept { return modulus_; }

 private:
  VanderbeiModulus modulus_;
  double eps_;
  double beta_;
  std::unordered_map<double, DiscardRadius> memo_;
  std::size_t hits_ = 0;
};

}  // namespace nucover
