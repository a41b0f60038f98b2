#include "qstar/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qstar {

namespace {

// std::uniform_real_distribution output differs between standard libraries;
// build doubles straight from the 64-bit engine instead.
double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double standard_normal(Rng& rng) {
  // Box-Muller; u1 in (0, 1].
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

BlochVector random_bloch_ball(Rng& rng) {
  const double u = 2.0 * uniform01(rng) - 1.0;
  const double az = 2.0 * std::numbers::pi * uniform01(rng);
  const double r = std::cbrt(uniform01(rng));
  const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
  return {r * s * std::cos(az), r * s * std::sin(az), r * u};
}

Direction random_direction(Rng& rng) {
  const double u = 2.0 * uniform01(rng) - 1.0;
  const double psi = 2.0 * std::numbers::pi * uniform01(rng);
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  return Direction(std::acos(u), psi, phi);
}

DensityMatrix random_qubit_state(Rng& rng) { return density_from_bloch(random_bloch_ball(rng)); }

ComplexMatrix random_operator(Rng& rng, Eigen::Index dim) {
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      const double re = standard_normal(rng);
      const double im = standard_normal(rng);
      m(i, k) = Complex(re, im);
    }
  }
  return m;
}

ComplexMatrix random_hermitian(Rng& rng, Eigen::Index dim) {
  const ComplexMatrix a = random_operator(rng, dim);
  return 0.5 * (a + a.adjoint());
}

DensityMatrix random_mixed_state(Rng& rng, Eigen::Index dim) {
  const ComplexMatrix g = random_operator(rng, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  // Exact Hermitian symmetry after the division.
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return validate_density(rho);
}

}  // namespace qstar
