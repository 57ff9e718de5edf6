#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "dbar/domain.hpp"
#include "dbar/errors.hpp"

namespace dbar {

/// Interior Dirichlet solver on a smooth Jordan domain: double-layer density
/// with the +1/2 jump term, trapezoid Nystrom discretization. The double-layer
/// kernel is smooth on a smooth curve (its diagonal value is the curvature
/// limit), so plain trapezoid is spectrally accurate.
///
/// Representation: u(z) = sum_j h * k(z, t_j) * phi_j with
///   k(z, t) = (1/2pi) Im[gamma'(t) / (gamma(t) - z)],
/// and the boundary system (1/2 I + K) phi = g.
class DirichletSolver {
 public:
  DirichletSolver(const PlanarDomain& dom, int n) : dom_(dom), n_(n) {
    if (n < 32 || n % 2 != 0) throw config_error("DirichletSolver: need even N >= 32");
    const double h = two_pi / n;
    t_.resize(n);
    gamma_.resize(n);
    dgamma_.resize(n);
    max_spacing_ = 0;
    for (int i = 0; i < n; ++i) {
      t_[i] = h * i;
      gamma_[i] = dom.gamma(t_[i]);
      dgamma_[i] = dom.gamma_prime(t_[i]);
      max_spacing_ = std::max(max_spacing_, h * std::abs(dgamma_[i]));
    }
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double k;
        if (i == j) {
          const cplx gp = dgamma_[i], gpp = dom.gamma_second(t_[i]);
          k = std::imag(std::conj(gp) * gpp) / std::norm(gp) / (2.0 * two_pi);
        } else {
          k = std::imag(dgamma_[j] / (gamma_[j] - gamma_[i])) / two_pi;
        }
        a(i, j) = h * k + (i == j ? 0.5 : 0.0);
      }
    }
    lu_.compute(a);
    // self-check: the extension of constant data is that constant
    Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    Eigen::VectorXd phi = lu_.solve(ones);
    if ((a * phi - ones).lpNorm<Eigen::Infinity>() > 1e-12)
      throw config_error("DirichletSolver: boundary system is near-singular");
    std::vector<cplx> density(phi.data(), phi.data() + n);
    const cplx probe = eval_with_density(density, dom.star_center(), false);
    if (std::abs(probe - 1.0) > 1e-8)
      throw config_error("DirichletSolver: constant-data self-check failed");
  }

  int node_count() const { return n_; }
  double node_param(int i) const { return t_[i]; }
  cplx node_point(int i) const { return gamma_[i]; }

  /// Minimum boundary distance for interior evaluation (5 arclength spacings).
  double near_boundary_threshold() const { return 5.0 * max_spacing_; }

  /// Solve the boundary system for complex data given at the nodes.
  std::vector<cplx> solve_density(const std::vector<cplx>& boundary_values) const {
    if (static_cast<int>(boundary_values.size()) != n_)
      throw config_error("solve_density: data size does not match node count");
    Eigen::VectorXd re(n_), im(n_);
    for (int i = 0; i < n_; ++i) {
      re(i) = boundary_values[i].real();
      im(i) = boundary_values[i].imag();
    }
    const Eigen::VectorXd pre = lu_.solve(re), pim = lu_.solve(im);
    std::vector<cplx> phi(n_);
    for (int i = 0; i < n_; ++i) phi[i] = cplx(pre(i), pim(i));
    return phi;
  }

  /// Value of the harmonic extension at an interior point.
  cplx extend(const std::vector<cplx>& boundary_values, cplx z) const {
    return eval_with_density(solve_density(boundary_values), z);
  }

  /// Wirtinger d/dzbar of the harmonic extension, by differentiating the
  /// layer representation (no finite differences).
  cplx extend_dzbar(const std::vector<cplx>& boundary_values, cplx z) const {
    return eval_dzbar_with_density(solve_density(boundary_values), z);
  }

  cplx eval_with_density(const std::vector<cplx>& density, cplx z, bool check = true) const {
    if (check) check_interior(z);
    const double h = two_pi / n_;
    cplx acc = 0;
    for (int j = 0; j < n_; ++j)
      acc += std::imag(dgamma_[j] / (gamma_[j] - z)) * density[j];
    return acc * (h / two_pi);
  }

  cplx eval_dzbar_with_density(const std::vector<cplx>& density, cplx z,
                               bool check = true) const {
    if (check) check_interior(z);
    const double h = two_pi / n_;
    // d/dzbar of (1/2pi) Im[g'/(g-z)] = (i/4pi) conj(g'/(g-z)^2)
    cplx acc = 0;
    for (int j = 0; j < n_; ++j) {
      const cplx dz = gamma_[j] - z;
      acc += std::conj(dgamma_[j] / (dz * dz)) * density[j];
    }
    return acc * cplx(0, 1) * (h / (2.0 * two_pi));
  }

 private:
  void check_interior(cplx z) const {
    const auto [t, d] = dom_.nearest_boundary_param(z, 256);
    (void)t;
    if (d < near_boundary_threshold())
      throw accuracy_error(
          "DirichletSolver: evaluation point is within the near-boundary band; "
          "use the boundary data directly");
  }

  PlanarDomain dom_;
  int n_;
  std::vector<double> t_;
  std::vector<cplx> gamma_, dgamma_;
  double max_spacing_ = 0;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
};

}  // namespace dbar
