#include "qstar/kernels.hpp"

#include <string>

namespace qstar {

double kernel_value(Variant variant, bool dual, SpinProjection m, const Direction& d,
                    const PhasePoint& p) {
  const Matrix2c o = phase_point_matrix(p, variant);
  if (dual) return 0.5 * trace_product(quantizer(m, d), o).real();
  return trace_product(dequantizer(m, d), o).real();
}

double tomogram_from_wigner(const WignerFunction& w, SpinProjection m, const Direction& d) {
  const Matrix2c q = dequantizer(m, d);
  double acc = 0.0;
  for (const PhasePoint& p : phase_points()) {
    acc += trace_product(q, phase_point_matrix(p, w.variant())).real() * w(p);
  }
  return acc;
}

WignerFunction wigner_from_tomogram(const TomogramFn& w, Variant variant,
                                    const SphereQuadrature& q) {
  if (q.exactness_degree() < 2) {
    throw QuadratureError("Wigner-from-tomogram integral needs a rule exact to degree 2, got degree " +
                          std::to_string(q.exactness_degree()));
  }
  std::array<Matrix2c, 4> ops;
  for (const PhasePoint& p : phase_points()) ops[p.index()] = phase_point_matrix(p, variant);

  std::array<double, 4> acc{};
  for (SpinProjection m : kSpinProjections) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Direction d(q.nodes()[i].theta, q.nodes()[i].psi);
      const double wq = q.weights()[i] * w(m, d);
      const Matrix2c dq = quantizer(m, d);
      for (int a = 0; a < 4; ++a) acc[a] += wq * 0.5 * trace_product(dq, ops[a]).real();
    }
  }
  return {variant, acc};
}

}  // namespace qstar
