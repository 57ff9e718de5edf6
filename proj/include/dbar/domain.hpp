#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "dbar/errors.hpp"

namespace dbar {

using cplx = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

enum class region { interior, boundary, exterior };

/// A bounded smooth Jordan domain in the plane. Either the unit disc
/// (closed-form kernels) or a domain bounded by a trigonometric-polynomial
/// curve gamma(t) = sum_k c_k e^{ikt}, t in [0, 2pi), positively oriented.
class PlanarDomain {
 public:
  enum class kind_t { unit_disc, jordan };

  struct boundary_point {
    cplx point;
    cplx tangent;          // gamma'(t)
    cplx outward_normal;   // unit, perpendicular to tangent, pointing out
  };

  static PlanarDomain unit_disc() { return PlanarDomain(); }

  /// coeffs: list of (k, c_k) Fourier coefficients of the boundary curve.
  static PlanarDomain jordan(const std::vector<std::pair<int, cplx>>& coeffs) {
    PlanarDomain d;
    d.kind_ = kind_t::jordan;
    d.coeffs_ = coeffs;
    d.validate();
    return d;
  }

  kind_t kind() const { return kind_; }
  const std::vector<std::pair<int, cplx>>& boundary_coeffs() const { return coeffs_; }

  cplx gamma(double t) const {
    if (kind_ == kind_t::unit_disc) return std::polar(1.0, t);
    cplx z = 0;
    for (const auto& [k, c] : coeffs_) z += c * std::polar(1.0, k * t);
    return z;
  }

  cplx gamma_prime(double t) const {
    if (kind_ == kind_t::unit_disc) return cplx(0, 1) * std::polar(1.0, t);
    cplx z = 0;
    for (const auto& [k, c] : coeffs_) z += cplx(0, k) * c * std::polar(1.0, k * t);
    return z;
  }

  cplx gamma_second(double t) const {
    if (kind_ == kind_t::unit_disc) return -std::polar(1.0, t);
    cplx z = 0;
    for (const auto& [k, c] : coeffs_) z += cplx(-double(k) * k, 0) * c * std::polar(1.0, k * t);
    return z;
  }

  boundary_point boundary_eval(double t) const {
    boundary_point bp;
    bp.point = gamma(t);
    bp.tangent = gamma_prime(t);
    // interior on the left of the tangent, so outward is -i * unit tangent
    bp.outward_normal = cplx(0, -1) * bp.tangent / std::abs(bp.tangent);
    return bp;
  }

  /// Point a star-shaped area parameterization radiates from. c_0 for jordan
  /// domains, 0 for the disc.
  cplx star_center() const { return center_; }

  /// True if every boundary point subtends a strictly increasing angle about
  /// the star center (required by area quadrature and mollification).
  bool star_shaped() const { return star_shaped_; }

  double diameter() const { return diameter_; }

  /// Default half-width of the boundary classification band.
  double boundary_tol() const { return 1e-12 * diameter_; }

  region contains(cplx z, double tol = -1.0) const {
    if (tol < 0) tol = boundary_tol();
    if (kind_ == kind_t::unit_disc) {
      const double r = std::abs(z);
      if (std::abs(r - 1.0) <= tol) return region::boundary;
      return r < 1.0 ? region::interior : region::exterior;
    }
    const auto [t, d] = nearest_boundary_param(z);
    if (d <= tol) return region::boundary;
    if (d > diameter_ / 256) return winding_number(z) == 1 ? region::interior : region::exterior;
    // winding quadrature degrades near the curve; classify by the side of the
    // outward normal at the nearest boundary point instead
    const auto bp = boundary_eval(t);
    const double side = std::real(std::conj(bp.outward_normal) * (z - bp.point));
    return side < 0 ? region::interior : region::exterior;
  }

  /// Distance from an interior point to the boundary.
  double dist_to_boundary(cplx z) const {
    if (contains(z) == region::exterior)
      throw domain_error("dist_to_boundary: point is not in the domain");
    if (kind_ == kind_t::unit_disc) return 1.0 - std::abs(z);
    return nearest_boundary_param(z).second;
  }

  /// (argmin_t |z - gamma(t)|, min distance), by dense sampling plus Newton
  /// refinement on |z - gamma(t)|^2.
  std::pair<double, double> nearest_boundary_param(cplx z, int n = 4096) const {
    double best_t = 0, best_d2 = std::norm(z - gamma(0));
    for (int i = 1; i < n; ++i) {
      const double t = two_pi * i / n;
      const double d2 = std::norm(z - gamma(t));
      if (d2 < best_d2) {
        best_d2 = d2;
        best_t = t;
      }
    }
    double t = best_t;
    for (int it = 0; it < 30; ++it) {
      const cplx g = gamma(t), gp = gamma_prime(t), gpp = gamma_second(t);
      const cplx r = g - z;
      const double f1 = 2.0 * std::real(std::conj(r) * gp);
      const double f2 = 2.0 * (std::norm(gp) + std::real(std::conj(r) * gpp));
      if (f2 <= 0) break;
      const double step = f1 / f2;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    if (std::norm(z - gamma(t)) > best_d2) t = best_t;  // Newton wandered off
    return {t, std::abs(z - gamma(t))};
  }

  /// Winding number of the boundary curve about z (trapezoid rule, rounded).
  int winding_number(cplx z, int samples = 4096) const {
    cplx acc = 0;
    for (int i = 0; i < samples; ++i) {
      const double t = two_pi * i / samples;
      acc += gamma_prime(t) / (gamma(t) - z);
    }
    acc *= two_pi / samples;
    return static_cast<int>(std::lround(std::real(acc / cplx(0, two_pi))));
  }

 private:
  PlanarDomain() = default;

  void validate() {
    const int n = 4096;
    if (coeffs_.empty()) throw config_error("jordan domain: no boundary coefficients");
    std::vector<cplx> pts(n);
    double min_speed = 1e300;
    for (int i = 0; i < n; ++i) {
      const double t = two_pi * i / n;
      pts[i] = gamma(t);
      min_speed = std::min(min_speed, std::abs(gamma_prime(t)));
    }
    if (min_speed < 1e-9)
      throw config_error("jordan domain: gamma'(t) vanishes (irregular curve)");
    // simple-curve screen: distinct parameters must map to distinct points
    for (int i = 0; i < n; ++i) {
      for (int j = i + 64; j <= i + n / 2; j += 16) {
        const int jj = j % n;
        if (std::abs(pts[i] - pts[jj]) < 1e-9)
          throw config_error("jordan domain: boundary curve self-intersects");
      }
    }
    double min_re = 1e300, max_re = -1e300, min_im = 1e300, max_im = -1e300;
    for (const cplx& p : pts) {
      min_re = std::min(min_re, p.real());
      max_re = std::max(max_re, p.real());
      min_im = std::min(min_im, p.imag());
      max_im = std::max(max_im, p.imag());
    }
    diameter_ = std::hypot(max_re - min_re, max_im - min_im);
    for (const auto& [k, c] : coeffs_)
      if (k == 0) center_ = c;
    if (winding_number(center_) != 1)
      throw config_error(
          "jordan domain: boundary is not positively oriented about its center "
          "(winding number != +1)");
    star_shaped_ = true;
    for (int i = 0; i < n; ++i) {
      const double t = two_pi * i / n;
      if (std::imag(std::conj(gamma(t) - center_) * gamma_prime(t)) <= 0) {
        star_shaped_ = false;
        break;
      }
    }
  }

  kind_t kind_ = kind_t::unit_disc;
  std::vector<std::pair<int, cplx>> coeffs_;
  cplx center_ = 0.0;
  double diameter_ = 2.0;
  bool star_shaped_ = true;
};

/// An ordered product of planar factors, Omega = D_1 x ... x D_n.
class ProductDomain {
 public:
  explicit ProductDomain(std::vector<PlanarDomain> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw config_error("product domain needs at least one factor");
  }

  std::size_t size() const { return factors_.size(); }
  const PlanarDomain& factor(std::size_t j) const { return factors_.at(j); }
  const std::vector<PlanarDomain>& factors() const { return factors_; }

  bool contains_interior(const std::vector<cplx>& z) const {
    for (std::size_t j = 0; j < factors_.size(); ++j)
      if (factors_[j].contains(z[j]) != region::interior) return false;
    return true;
  }

  /// min over factors of the factor boundary distance
  double dist_to_boundary(const std::vector<cplx>& z) const {
    double d = 1e300;
    for (std::size_t j = 0; j < factors_.size(); ++j)
      d = std::min(d, factors_[j].dist_to_boundary(z[j]));
    return d;
  }

 private:
  std::vector<PlanarDomain> factors_;
};

}  // namespace dbar
