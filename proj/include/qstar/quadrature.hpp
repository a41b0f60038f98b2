#pragma once

#include <vector>

namespace qstar {

struct SphereNode {
  double theta = 0.0;  // polar angle in [0, pi]
  double psi = 0.0;    // azimuth in [0, 2 pi)
};

/// Product rule on the unit sphere for the normalized measure dOmega / (4 pi).
///
/// Nodes are Gauss-Legendre points in u = cos(theta) times a uniform grid in
/// psi. A spherical harmonic of degree l and order k integrates exactly when
/// l <= 2 n_theta - 1 (for k = 0) and |k| < n_psi (for k != 0), so the rule is
/// exact for all harmonics up to degree min(2 n_theta - 1, n_psi - 1).
class SphereQuadrature {
 public:
  SphereQuadrature(int n_theta, int n_psi);

  const std::vector<SphereNode>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return nodes_.size(); }
  int n_theta() const { return n_theta_; }
  int n_psi() const { return n_psi_; }
  /// Highest spherical-harmonic degree integrated exactly.
  int exactness_degree() const { return degree_; }

  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) acc += weights_[i] * f(nodes_[i]);
    return acc;
  }

 private:
  int n_theta_;
  int n_psi_;
  int degree_;
  std::vector<SphereNode> nodes_;
  std::vector<double> weights_;
};

SphereQuadrature build_sphere_quadrature(int n_theta, int n_psi);

inline constexpr int kDefaultQuadratureTheta = 3;
inline constexpr int kDefaultQuadraturePsi = 8;

/// The (3, 8) rule used when callers do not choose one.
SphereQuadrature default_sphere_quadrature();

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1] via Newton iteration on P_n.
GaussLegendreRule gauss_legendre(int n);

}  // namespace qstar
