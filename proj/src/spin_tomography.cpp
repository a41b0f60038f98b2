#include "qstar/spin_tomography.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

namespace qstar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Direction::Direction(double theta_, double psi_, std::optional<double> phi_)
    : theta(theta_), psi(psi_), phi(phi_) {
  if (!std::isfinite(theta) || !std::isfinite(psi) || (phi && !std::isfinite(*phi))) {
    throw DomainError("direction angles must be finite");
  }
  if (theta < -kEqualityTol || theta > std::numbers::pi + kEqualityTol) {
    throw DomainError("polar angle must lie in [0, pi], got " + std::to_string(theta));
  }
  theta = std::clamp(theta, 0.0, std::numbers::pi);
  psi = std::fmod(psi, kTwoPi);
  if (psi < 0.0) psi += kTwoPi;
}

Eigen::Vector3d Direction::unit_vector() const {
  return {std::sin(theta) * std::sin(psi), std::sin(theta) * std::cos(psi), std::cos(theta)};
}

Matrix2c su2_matrix(double theta, double phi, double psi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Matrix2c u;
  u << c * std::polar(1.0, 0.5 * (phi + psi)), s * std::polar(1.0, 0.5 * (phi - psi)),
      -s * std::polar(1.0, 0.5 * (psi - phi)), c * std::polar(1.0, -0.5 * (phi + psi));
  return u;
}

Matrix2c axis_matrix(const Direction& d) {
  const double ct = std::cos(d.theta);
  const double st = std::sin(d.theta);
  Matrix2c m;
  m << ct, st * std::polar(1.0, -d.psi), st * std::polar(1.0, d.psi), -ct;
  return m;
}

Matrix2c dequantizer(SpinProjection m, const Direction& d) {
  return 0.5 * Matrix2c::Identity() + spin_value(m) * axis_matrix(d);
}

Matrix2c dequantizer_from_su2(SpinProjection m, const Direction& d) {
  const Matrix2c u = su2_matrix(d.theta, d.phi.value_or(0.0), d.psi);
  const int row = m == SpinProjection::Up ? 0 : 1;
  // U^dagger |m><m| U = (row m of U)^dagger (row m of U)
  return u.row(row).adjoint() * u.row(row);
}

Matrix2c quantizer(SpinProjection m, const Direction& d) {
  return 0.5 * Matrix2c::Identity() + 3.0 * spin_value(m) * axis_matrix(d);
}

double tomogram(const DensityMatrix& rho, SpinProjection m, const Direction& d) {
  if (rho.dim() != 2) throw ShapeError("tomogram: expected a 2x2 state");
  const double w = trace_product(rho.matrix(), dequantizer(m, d)).real();
#ifndef NDEBUG
  assert(std::abs(w - tomogram_closed_form(bloch_from_density(rho), m, d)) <= 1e-10);
#endif
  return w;
}

double tomogram_closed_form(const BlochVector& r, SpinProjection m, const Direction& d) {
  const double st = std::sin(d.theta);
  const double proj =
      r.z * std::cos(d.theta) + r.x * st * std::cos(d.psi) - r.y * st * std::sin(d.psi);
  return 0.5 + spin_value(m) * proj;
}

Tomogram::Tomogram(DensityMatrix state) : state_(std::move(state)) {
  if (state_.dim() != 2) throw ShapeError("Tomogram: expected a 2x2 state");
}

TwoQubitOperators two_qubit_scheme_operators(SpinProjection m1, SpinProjection m2,
                                             const Direction& d1, const Direction& d2) {
  return {tensor_product(dequantizer(m1, d1), dequantizer(m2, d2)),
          tensor_product(quantizer(m1, d1), quantizer(m2, d2))};
}

double two_qubit_tomogram(const DensityMatrix& rho12, SpinProjection m1, SpinProjection m2,
                          const Direction& d1, const Direction& d2) {
  if (rho12.dim() != 4) throw ShapeError("two_qubit_tomogram: expected a 4x4 state");
  const ComplexMatrix q = tensor_product(dequantizer(m1, d1), dequantizer(m2, d2));
  return trace_product(rho12.matrix(), q).real();
}

DensityMatrix density_from_tomogram(const TomogramFn& w, const SphereQuadrature& q) {
  if (q.exactness_degree() < 2) {
    throw QuadratureError("tomographic reconstruction needs a rule exact to degree 2, got degree " +
                          std::to_string(q.exactness_degree()));
  }
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  for (SpinProjection m : kSpinProjections) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Direction d(q.nodes()[i].theta, q.nodes()[i].psi);
      rho += (q.weights()[i] * w(m, d)) * quantizer(m, d);
    }
  }
  return validate_density(rho);
}

}  // namespace qstar
