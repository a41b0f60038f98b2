#include "qstar/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qstar/errors.hpp"

namespace qstar {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(int n, double x) {
  double p_prev = 1.0;
  double p = x;
  for (int l = 2; l <= n; ++l) {
    const double next = ((2.0 * l - 1.0) * x * p - (l - 1.0) * p_prev) / l;
    p_prev = p;
    p = next;
  }
  const double dp = n * (x * p - p_prev) / (x * x - 1.0);
  return {p, dp};
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

SphereQuadrature::SphereQuadrature(int n_theta, int n_psi) : n_theta_(n_theta), n_psi_(n_psi) {
  if (n_theta < 1 || n_psi < 1) {
    throw DomainError("sphere quadrature needs positive node counts, got (" +
                      std::to_string(n_theta) + ", " + std::to_string(n_psi) + ")");
  }
  degree_ = std::min(2 * n_theta - 1, n_psi - 1);
  const GaussLegendreRule gl = gauss_legendre(n_theta);
  const double two_pi = 2.0 * std::numbers::pi;
  nodes_.reserve(static_cast<std::size_t>(n_theta) * n_psi);
  weights_.reserve(nodes_.capacity());
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(std::clamp(gl.nodes[i], -1.0, 1.0));
    for (int j = 0; j < n_psi; ++j) {
      nodes_.push_back({theta, two_pi * j / n_psi});
      weights_.push_back(0.5 * gl.weights[i] / n_psi);
    }
  }
}

SphereQuadrature build_sphere_quadrature(int n_theta, int n_psi) {
  return SphereQuadrature(n_theta, n_psi);
}

SphereQuadrature default_sphere_quadrature() {
  return SphereQuadrature(kDefaultQuadratureTheta, kDefaultQuadraturePsi);
}

}  // namespace qstar
