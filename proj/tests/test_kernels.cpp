#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qstar/errors.hpp"
#include "qstar/kernels.hpp"
#include "qstar/reference.hpp"
#include "qstar/sampling.hpp"

using namespace qstar;
using enum SpinProjection;

namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("kernel value examples") {
  CHECK(std::abs(kernel_value(Variant::A, false, Up, Direction(0, 0), {0, 0}) - 1.0) < 1e-15);
  CHECK(std::abs(kernel_value(Variant::A, true, Up, Direction(0, 0), {0, 0}) - 1.0) < 1e-15);
  CHECK(std::abs(kernel_value(Variant::B, false, Up, Direction(kPi / 2, 0), {0, 0}) - 1.0) < 1e-15);
  const KernelTable t(Variant::B, true);
  CHECK(t.variant() == Variant::B);
  CHECK(t.dual());
  CHECK(t(Down, Direction(1.0, 2.0), {1, 1}) == kernel_value(Variant::B, true, Down, Direction(1.0, 2.0), {1, 1}));
}

TEST_CASE("trace kernels match the transcribed closed forms") {
  Rng rng(808);
  double worst = 0.0;
  double worst_ker = 0.0;
  double worst_dual = 0.0;
  for (int n = 0; n < 200; ++n) {
    const Direction d = random_direction(rng);
    for (Variant v : {Variant::A, Variant::B}) {
      for (bool dual : {false, true}) {
        for (SpinProjection m : kSpinProjections) {
          for (const PhasePoint& p : phase_points()) {
            const double k = kernel_value(v, dual, m, d, p);
            worst = std::max(worst, std::abs(k - reference::kernel(v, dual, m, d, p)));
            (dual ? worst_dual : worst_ker) = std::max(dual ? worst_dual : worst_ker, std::abs(k));
          }
        }
      }
    }
  }
  CHECK(worst <= 1e-12);
  CHECK(worst_ker <= 1.91);
  CHECK(worst_dual <= 2.6);
}

TEST_CASE("uncorrected kernel table differs only at the corrected entry") {
  Rng rng(909);
  int flagged = 0;
  for (Variant v : {Variant::A, Variant::B}) {
    for (bool dual : {false, true}) {
      for (SpinProjection m : kSpinProjections) {
        for (const PhasePoint& p : phase_points()) {
          const bool corrected = reference::kernel_entry_corrected(v, dual, m, p);
          flagged += corrected ? 1 : 0;
          for (int n = 0; n < 20; ++n) {
            const Direction d = random_direction(rng);
            const double traced = kernel_value(v, dual, m, d, p);
            const double uncorrected = reference::kernel_uncorrected(v, dual, m, d, p);
            if (corrected) {
              CHECK(std::abs(traced - uncorrected / 2.0) <= 1e-12);
            } else {
              CHECK(std::abs(traced - uncorrected) <= 1e-12);
            }
          }
        }
      }
    }
  }
  CHECK(flagged == 1);
  CHECK(reference::kernel_entry_corrected(Variant::A, false, Down, {1, 0}));
  // Corrected closed form of that entry.
  const Direction d(0.7, 1.9);
  const double expected =
      (1.0 + std::cos(d.theta) - std::sin(d.theta) * (std::cos(d.psi) - std::sin(d.psi))) / 2.0;
  CHECK(std::abs(kernel_value(Variant::A, false, Down, d, {1, 0}) - expected) <= 1e-15);
}

TEST_CASE("tomogram_from_wigner examples") {
  const WignerFunction uniform(Variant::A, {0.25, 0.25, 0.25, 0.25});
  Rng rng(3);
  for (int n = 0; n < 10; ++n) {
    const Direction d = random_direction(rng);
    CHECK(std::abs(tomogram_from_wigner(uniform, Up, d) - 0.5) < 1e-15);
  }
  const WignerFunction w0(Variant::A, {0.5, 0.5, 0.0, 0.0});
  CHECK(std::abs(tomogram_from_wigner(w0, Up, Direction(0, 0)) - 1.0) < 1e-15);
}

TEST_CASE("tomogram_from_wigner through both variants") {
  Rng rng(4242);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const DensityMatrix rho = random_qubit_state(rng);
    const Direction d = random_direction(rng);
    for (SpinProjection m : kSpinProjections) {
      const double direct = tomogram(rho, m, d);
      const double via_a = tomogram_from_wigner(wigner(rho, Variant::A), m, d);
      const double via_b = tomogram_from_wigner(wigner(rho, Variant::B), m, d);
      worst = std::max({worst, std::abs(via_a - direct), std::abs(via_b - direct),
                        std::abs(via_a - via_b)});
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("wigner_from_tomogram examples") {
  const SphereQuadrature q = default_sphere_quadrature();
  const TomogramFn half = [](SpinProjection, const Direction&) { return 0.5; };
  CHECK(max_diff(wigner_from_tomogram(half, Variant::A, q).values(), {0.25, 0.25, 0.25, 0.25}) <
        1e-14);
  const Tomogram t0(density_from_bloch(0, 0, 1));
  const WignerFunction w = wigner_from_tomogram(t0, Variant::A, q);
  CHECK(w.variant() == Variant::A);
  CHECK(max_diff(w.values(), {0.5, 0.5, 0.0, 0.0}) <= 1e-12);
}

TEST_CASE("wigner_from_tomogram reproduces the Wigner function for 1000 states") {
  Rng rng(6060);
  const SphereQuadrature q25(2, 5);
  const SphereQuadrature q38(3, 8);
  double worst = 0.0;
  double cross = 0.0;
  double norm = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const DensityMatrix rho = random_qubit_state(rng);
    const Tomogram t(rho);
    for (Variant v : {Variant::A, Variant::B}) {
      const WignerFunction direct = wigner(rho, v);
      const WignerFunction a = wigner_from_tomogram(t, v, q25);
      const WignerFunction b = wigner_from_tomogram(t, v, q38);
      worst = std::max({worst, max_diff(a.values(), direct.values()),
                        max_diff(b.values(), direct.values())});
      cross = std::max(cross, max_diff(a.values(), b.values()));
      norm = std::max(norm, std::abs(b.sum() - 1.0));
    }
  }
  CHECK(worst <= 1e-10);
  CHECK(cross <= 1e-12);
  CHECK(norm <= 1e-12);
}

TEST_CASE("wigner_from_tomogram inverts tomogram_from_wigner on quadruples") {
  const SphereQuadrature q = default_sphere_quadrature();
  // Includes a quadruple outside the state space: the maps are linear.
  for (const std::array<double, 4>& vals :
       {std::array<double, 4>{0.1, 0.2, 0.3, 0.4}, std::array<double, 4>{1.0, 1.0, -0.5, -0.5}}) {
    for (Variant v : {Variant::A, Variant::B}) {
      const WignerFunction w(v, vals);
      const TomogramFn t = [&](SpinProjection m, const Direction& d) {
        return tomogram_from_wigner(w, m, d);
      };
      CHECK(max_diff(wigner_from_tomogram(t, v, q).values(), vals) <= 1e-10);
    }
  }
}

TEST_CASE("wigner_from_tomogram rejects a low-degree rule") {
  const Tomogram t(density_from_bloch(0, 0, 1));
  CHECK_THROWS_AS(wigner_from_tomogram(t, Variant::A, SphereQuadrature(1, 1)), QuadratureError);
  CHECK_THROWS_AS(wigner_from_tomogram(t, Variant::B, SphereQuadrature(4, 2)), QuadratureError);
}
