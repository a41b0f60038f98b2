#pragma once

#include <array>

#include "qstar/linalg.hpp"
#include "qstar/phase_space.hpp"

namespace qstar {

/// Discrete Wigner function of one qubit: four real values on the 2x2 phase
/// space, tagged with the operator family they were computed against.
/// Values may be negative; for physical states they lie in
/// [(1 - sqrt 3)/4, (1 + sqrt 3)/4] and sum to 1.
class WignerFunction {
 public:
  WignerFunction(Variant variant, std::array<double, 4> values)
      : variant_(variant), values_(values) {}

  Variant variant() const { return variant_; }
  const std::array<double, 4>& values() const { return values_; }
  double operator()(const PhasePoint& p) const { return values_[p.index()]; }
  double operator()(int j, int k) const { return values_[2 * j + k]; }

  double sum() const;

 private:
  Variant variant_;
  std::array<double, 4> values_;
};

/// W(j, k) = Tr(rho O_{jk}) / 2 with O = A or B.
WignerFunction wigner(const DensityMatrix& rho, Variant variant);

/// Printed closed forms in Bloch coordinates, e.g. W^A(0,0) = (1 + z + x - y)/4.
WignerFunction wigner_closed_form(const BlochVector& r, Variant variant);

/// Result of sum_{jk} W(j,k) O_{jk}. Always Hermitian with unit trace; the
/// quadruple is physical only when the matrix is also positive semidefinite.
struct WignerReconstruction {
  ComplexMatrix matrix;
  bool physical = false;
  double min_eigenvalue = 0.0;

  /// The validated state; throws PositivityError for non-physical quadruples.
  DensityMatrix state() const;
};

/// Throws DomainError when the values do not sum to 1 within 1e-10.
WignerReconstruction density_from_wigner(const WignerFunction& w);

/// W^t(alpha) = 1/2 sum_beta W^s(beta) Tr(O^t_alpha O^s_beta).
WignerFunction convert_basis(const WignerFunction& w, Variant target);

/// 2 sum_alpha W(alpha)^2, which equals Tr(rho^2).
double purity_from_wigner(const WignerFunction& w);

}  // namespace qstar
