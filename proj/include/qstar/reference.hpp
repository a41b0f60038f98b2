#pragma once

#include <array>

#include "qstar/linalg.hpp"
#include "qstar/phase_space.hpp"
#include "qstar/spin_tomography.hpp"

// Reference values entered by hand. They do not depend on the operator
// construction in phase_space or kernels and serve only as regression oracles
// for the tests and `qstar verify`.

namespace qstar::reference {

/// The explicit 2x2 phase-point operators A_{jk} and B_{jk}.
Matrix2c phase_point_matrix(const PhasePoint& p, Variant variant);

/// Closed-form kernel value, e.g. Ker^A(1/2; 0,0) = (1 + cos t + sin t (cos psi + sin psi))/2.
///
/// The Ker^A(-1/2; 1,0) entry of the source table lacks its trailing /2; this
/// returns the corrected value. See kernel_uncorrected for the original one.
double kernel(Variant variant, bool dual, SpinProjection m, const Direction& d, const PhasePoint& p);

/// Same as kernel() but keeps the uncorrected Ker^A(-1/2; 1,0) entry, which is
/// twice the true value.
double kernel_uncorrected(Variant variant, bool dual, SpinProjection m, const Direction& d,
                         const PhasePoint& p);

/// True for the single entry that kernel() corrects.
bool kernel_entry_corrected(Variant variant, bool dual, SpinProjection m, const PhasePoint& p);

}  // namespace qstar::reference
