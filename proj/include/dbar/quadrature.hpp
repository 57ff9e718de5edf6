#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <vector>

#include "dbar/domain.hpp"
#include "dbar/errors.hpp"

namespace dbar {

/// Gauss-Legendre nodes and weights on [lo, hi].
inline void gauss_legendre(int n, double lo, double hi, std::vector<double>& x,
                           std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double xm = 0.5 * (hi + lo), xl = 0.5 * (hi - lo);
    x[i] = xm - xl * z;
    x[n - 1 - i] = xm + xl * z;
    w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

/// Area (or arclength) quadrature rule over a planar domain. Nodes are kept in
/// a fixed radial-major order; integrate() sums in exactly that order, so
/// results are reproducible bit for bit.
struct QuadratureRule {
  enum class kind_t { polar_regular, polar_singular, boundary_trapezoid };

  std::vector<cplx> nodes;
  std::vector<double> weights;
  kind_t kind = kind_t::polar_regular;
  cplx singular_center = 0.0;  // set for polar_singular

  double weight_sum() const {
    double s = 0;
    for (double w : weights) s += w;
    return s;
  }
};

/// Regular area rule: Gauss-Legendre in the radial blend x trapezoid in angle.
/// For jordan domains the unit-disc rule is pushed forward through
/// z = c + rho*(gamma(t) - c); the domain must be star-shaped about c.
inline QuadratureRule disc_rule(const PlanarDomain& dom, int nr, int nt) {
  if (nr < 4 || nt < 4) throw config_error("disc_rule: need nr, nt >= 4");
  if (dom.kind() == PlanarDomain::kind_t::jordan && !dom.star_shaped())
    throw unsupported_error("disc_rule: area rules require a star-shaped domain");
  std::vector<double> xr, wr;
  gauss_legendre(nr, 0.0, 1.0, xr, wr);
  QuadratureRule rule;
  rule.kind = QuadratureRule::kind_t::polar_regular;
  rule.nodes.reserve(static_cast<std::size_t>(nr) * nt);
  rule.weights.reserve(static_cast<std::size_t>(nr) * nt);
  const cplx c = dom.star_center();
  const double dt = two_pi / nt;
  for (int i = 0; i < nr; ++i) {
    for (int k = 0; k < nt; ++k) {
      const double t = dt * k;
      const cplx spoke = dom.gamma(t) - c;
      const double jac =
          std::imag(std::conj(spoke) * dom.gamma_prime(t));  // = 1 on the unit circle
      rule.nodes.push_back(c + xr[i] * spoke);
      rule.weights.push_back(wr[i] * dt * xr[i] * jac);
    }
  }
  return rule;
}

/// Arclength rule on the boundary curve (equispaced trapezoid in parameter).
inline QuadratureRule boundary_rule(const PlanarDomain& dom, int n) {
  QuadratureRule rule;
  rule.kind = QuadratureRule::kind_t::boundary_trapezoid;
  rule.nodes.reserve(n);
  rule.weights.reserve(n);
  const double dt = two_pi / n;
  for (int i = 0; i < n; ++i) {
    const double t = dt * i;
    rule.nodes.push_back(dom.gamma(t));
    rule.weights.push_back(dt * std::abs(dom.gamma_prime(t)));
  }
  return rule;
}

namespace detail {

// C-infinity partition blend: 1 on (-inf, 0], 0 on [1, inf).
inline double smooth_blend(double s) {
  if (s <= 0.0) return 1.0;
  if (s >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / (1.0 - s));
  const double b = std::exp(-1.0 / s);
  return a / (a + b);
}

}  // namespace detail

/// Pole-adapted rule: a polar patch recentered at w0 (reaching toward the
/// nearest boundary point) smoothly partitioned against the base rule, which
/// covers the rest of the domain. Radial Gauss-Legendre integrates rho*(1/rho)
/// without loss, so simple poles at w0 are benign. Weights stay nonnegative
/// and sum to the domain area.
inline QuadratureRule singular_rule(const PlanarDomain& dom, const QuadratureRule& base,
                                    cplx w0, int nr_inner = 0, int nt_inner = 0) {
  if (dom.contains(w0) != region::interior)
    throw domain_error("singular_rule: center must be an interior point");
  const double d = dom.dist_to_boundary(w0);
  if (d < 64 * dom.boundary_tol())
    throw domain_error("singular_rule: center is within the boundary threshold");
  const double blend_lo = 0.5 * d;  // chi = 1 inside, fades to 0 at blend_hi
  const double blend_hi = 0.9 * d;
  if (nr_inner <= 0) nr_inner = 48;
  if (nt_inner <= 0) nt_inner = 64;

  QuadratureRule rule;
  rule.kind = QuadratureRule::kind_t::polar_singular;
  rule.singular_center = w0;

  std::vector<double> xr, wr;
  gauss_legendre(nr_inner, 0.0, blend_hi, xr, wr);
  const double dt = two_pi / nt_inner;
  for (int i = 0; i < nr_inner; ++i) {
    const double chi =
        detail::smooth_blend((xr[i] - blend_lo) / (blend_hi - blend_lo));
    if (chi <= 0.0) continue;
    for (int k = 0; k < nt_inner; ++k) {
      rule.nodes.push_back(w0 + std::polar(xr[i], dt * k));
      rule.weights.push_back(wr[i] * dt * xr[i] * chi);
    }
  }
  for (std::size_t i = 0; i < base.nodes.size(); ++i) {
    const double rho = std::abs(base.nodes[i] - w0);
    const double chi = detail::smooth_blend((rho - blend_lo) / (blend_hi - blend_lo));
    if (chi >= 1.0) continue;
    rule.nodes.push_back(base.nodes[i]);
    rule.weights.push_back(base.weights[i] * (1.0 - chi));
  }
  return rule;
}

/// Fixed-order weighted sum. Non-finite integrand values poison the result and
/// are reported with the offending node.
template <class F>
cplx integrate(const QuadratureRule& rule, F&& f) {
  cplx acc = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const cplx v = f(rule.nodes[i]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "integrate: non-finite integrand value at node " << i << " = ("
         << rule.nodes[i].real() << ", " << rule.nodes[i].imag() << ")";
      throw numeric_error(os.str());
    }
    acc += rule.weights[i] * v;
  }
  return acc;
}

/// Tensor-product integration over a list of factor rules (test and scan
/// helper; the operators stream the tensor loop themselves).
template <class F>
cplx integrate_tensor(const std::vector<QuadratureRule>& rules, F&& f) {
  const std::size_t n = rules.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<cplx> z(n);
  cplx acc = 0;
  for (;;) {
    double w = 1;
    for (std::size_t j = 0; j < n; ++j) {
      z[j] = rules[j].nodes[idx[j]];
      w *= rules[j].weights[idx[j]];
    }
    const cplx v = f(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw numeric_error("integrate_tensor: non-finite integrand value");
    acc += w * v;
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++idx[j] < rules[j].nodes.size()) break;
      idx[j] = 0;
      if (j == 0) return acc;
    }
  }
}

}  // namespace dbar
