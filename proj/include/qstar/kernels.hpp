#pragma once

#include "qstar/phase_space.hpp"
#include "qstar/quadrature.hpp"
#include "qstar/spin_tomography.hpp"
#include "qstar/wigner.hpp"

namespace qstar {

/// Kernels between spin tomograms and discrete Wigner functions:
///   Ker(m, n; j, k)  = Tr(Q(m, n) O_{jk})      (dual = false)
///   ~Ker(m, n; j, k) = Tr(D(m, n) O_{jk}) / 2  (dual = true)
/// with O = A or B. Always evaluated from the operator definitions.
double kernel_value(Variant variant, bool dual, SpinProjection m, const Direction& d,
                    const PhasePoint& p);

class KernelTable {
 public:
  KernelTable(Variant variant, bool dual) : variant_(variant), dual_(dual) {}

  Variant variant() const { return variant_; }
  bool dual() const { return dual_; }

  double operator()(SpinProjection m, const Direction& d, const PhasePoint& p) const {
    return kernel_value(variant_, dual_, m, d, p);
  }

 private:
  Variant variant_;
  bool dual_;
};

/// w(m, n) = sum_{jk} Ker(m, n; j, k) W(j, k), using the kernel of W's variant.
double tomogram_from_wigner(const WignerFunction& w, SpinProjection m, const Direction& d);

/// W(j, k) = sum_m integral dOmega/(4 pi) w(m, n) ~Ker(m, n; j, k), evaluated
/// with the sphere rule q in node order. Throws QuadratureError below degree 2.
WignerFunction wigner_from_tomogram(const TomogramFn& w, Variant variant,
                                    const SphereQuadrature& q);

}  // namespace qstar
