#include "qstar/wigner.hpp"

#include <cmath>
#include <string>

namespace qstar {

namespace {

constexpr double kNormalizationTol = 1e-10;

}  // namespace

double WignerFunction::sum() const {
  return values_[0] + values_[1] + values_[2] + values_[3];
}

WignerFunction wigner(const DensityMatrix& rho, Variant variant) {
  if (rho.dim() != 2) throw ShapeError("wigner: expected a 2x2 state");
  std::array<double, 4> v{};
  for (const PhasePoint& p : phase_points()) {
    v[p.index()] = 0.5 * trace_product(rho.matrix(), phase_point_matrix(p, variant)).real();
  }
  return {variant, v};
}

WignerFunction wigner_closed_form(const BlochVector& r, Variant variant) {
  const double x = r.x;
  const double y = r.y;
  const double z = r.z;
  if (variant == Variant::A) {
    return {variant,
            {(1 + z + x - y) / 4, (1 + z - x + y) / 4, (1 - z + x + y) / 4, (1 - z - x - y) / 4}};
  }
  return {variant,
          {(1 + z + x + y) / 4, (1 + z - x - y) / 4, (1 - z + x - y) / 4, (1 - z - x + y) / 4}};
}

DensityMatrix WignerReconstruction::state() const {
  if (!physical) {
    throw PositivityError("Wigner quadruple is not physical (min eigenvalue " +
                          std::to_string(min_eigenvalue) + ")");
  }
  return validate_density(matrix);
}

WignerReconstruction density_from_wigner(const WignerFunction& w) {
  if (std::abs(w.sum() - 1.0) > kNormalizationTol) {
    throw DomainError("Wigner values sum to " + std::to_string(w.sum()) + " instead of 1");
  }
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  for (const PhasePoint& p : phase_points()) rho += w(p) * phase_point_matrix(p, w.variant());
  WignerReconstruction out;
  out.min_eigenvalue = hermitian_eigenvalues(rho).minCoeff();
  out.physical = out.min_eigenvalue >= -kPsdTol;
  out.matrix = std::move(rho);
  return out;
}

WignerFunction convert_basis(const WignerFunction& w, Variant target) {
  if (w.variant() == target) return w;
  std::array<double, 4> v{};
  for (const PhasePoint& a : phase_points()) {
    const Matrix2c ta = phase_point_matrix(a, target);
    double acc = 0.0;
    for (const PhasePoint& b : phase_points()) {
      acc += w(b) * trace_product(ta, phase_point_matrix(b, w.variant())).real();
    }
    v[a.index()] = 0.5 * acc;
  }
  return {target, v};
}

double purity_from_wigner(const WignerFunction& w) {
  double acc = 0.0;
  for (double v : w.values()) acc += v * v;
  return 2.0 * acc;
}

}  // namespace qstar
