#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "qstar/linalg.hpp"
#include "qstar/quadrature.hpp"

namespace qstar {

/// Spin projection m = +1/2 (Up) or -1/2 (Down).
enum class SpinProjection { Up, Down };

inline double spin_value(SpinProjection m) { return m == SpinProjection::Up ? 0.5 : -0.5; }
inline constexpr std::array<SpinProjection, 2> kSpinProjections{SpinProjection::Up,
                                                                SpinProjection::Down};

/// Quantization axis n = (sin t sin psi, sin t cos psi, cos t).
///
/// phi is only used when building the full SU(2) matrix; the tomographic
/// operators do not depend on it.
struct Direction {
  double theta = 0.0;
  double psi = 0.0;
  std::optional<double> phi;

  Direction() = default;
  Direction(double theta_, double psi_, std::optional<double> phi_ = std::nullopt);

  Eigen::Vector3d unit_vector() const;
};

/// The SU(2) matrix
///   [[ cos(t/2) e^{i(phi+psi)/2},   sin(t/2) e^{i(phi-psi)/2}],
///    [-sin(t/2) e^{i(psi-phi)/2},   cos(t/2) e^{-i(phi+psi)/2}]].
Matrix2c su2_matrix(double theta, double phi, double psi);

/// M(t, psi) = [[cos t, sin t e^{-i psi}], [sin t e^{i psi}, -cos t]], the
/// traceless part shared by the tomographic dequantizer and quantizer.
Matrix2c axis_matrix(const Direction& d);

/// Q(m, n) = I/2 + m M(t, psi); a rank-1 projector.
Matrix2c dequantizer(SpinProjection m, const Direction& d);

/// Q(m, n) = U^dagger |m><m| U built from su2_matrix (phi defaults to 0).
Matrix2c dequantizer_from_su2(SpinProjection m, const Direction& d);

/// D(m, n) = I/2 + 3 m M(t, psi).
Matrix2c quantizer(SpinProjection m, const Direction& d);

/// w(m, n) = Tr(rho Q(m, n)).
double tomogram(const DensityMatrix& rho, SpinProjection m, const Direction& d);

/// 1/2 (1 +- (z cos t + x sin t cos psi - y sin t sin psi)).
double tomogram_closed_form(const BlochVector& r, SpinProjection m, const Direction& d);

/// Anything that can be evaluated as w(m, n).
using TomogramFn = std::function<double(SpinProjection, const Direction&)>;

/// Tomogram of a fixed one-qubit state.
class Tomogram {
 public:
  explicit Tomogram(DensityMatrix state);

  double operator()(SpinProjection m, const Direction& d) const {
    return tomogram(state_, m, d);
  }
  const DensityMatrix& state() const { return state_; }

 private:
  DensityMatrix state_;
};

struct TwoQubitOperators {
  ComplexMatrix dequantizer;  // Q1 (x) Q2
  ComplexMatrix quantizer;    // D1 (x) D2
};

TwoQubitOperators two_qubit_scheme_operators(SpinProjection m1, SpinProjection m2,
                                             const Direction& d1, const Direction& d2);

/// Joint probability Tr(rho12 (Q1 (x) Q2)).
double two_qubit_tomogram(const DensityMatrix& rho12, SpinProjection m1, SpinProjection m2,
                          const Direction& d1, const Direction& d2);

/// rho = sum_m sum_nodes weight w(m, node) D(m, node) with weights normalized
/// to dOmega / (4 pi). Throws QuadratureError if the rule is not exact to degree 2.
DensityMatrix density_from_tomogram(const TomogramFn& w, const SphereQuadrature& q);

}  // namespace qstar
