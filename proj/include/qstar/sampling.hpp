#pragma once

#include <cstdint>
#include <random>

#include "qstar/linalg.hpp"
#include "qstar/spin_tomography.hpp"

namespace qstar {

/// Fixed-algorithm generator so seeded draws are reproducible everywhere.
using Rng = std::mt19937_64;

/// Uniform point in the closed Bloch ball (radius r = u^{1/3}).
BlochVector random_bloch_ball(Rng& rng);

/// Uniform direction on the sphere with phi drawn in [0, 2 pi).
Direction random_direction(Rng& rng);

/// Random qubit state, uniform in the Bloch ball.
DensityMatrix random_qubit_state(Rng& rng);

/// Random mixed state of dimension dim (2 or 4) as G G^dagger / Tr(G G^dagger).
DensityMatrix random_mixed_state(Rng& rng, Eigen::Index dim);

/// Matrix with independent standard normal real and imaginary parts.
ComplexMatrix random_operator(Rng& rng, Eigen::Index dim);

/// Random Hermitian matrix (A + A^dagger)/2.
ComplexMatrix random_hermitian(Rng& rng, Eigen::Index dim);

}  // namespace qstar
