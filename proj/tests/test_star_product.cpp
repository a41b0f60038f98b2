#include <doctest.h>

#include <cmath>

#include "qstar/errors.hpp"
#include "qstar/kernels.hpp"
#include "qstar/sampling.hpp"
#include "qstar/star_product.hpp"
#include "qstar/wigner.hpp"

using namespace qstar;
using enum SpinProjection;

namespace {

Matrix2c mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix2c m;
  m << a, b, c, d;
  return m;
}

double max_abs(const Eigen::VectorXcd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

const SchemePtr& tomo() {
  static const SchemePtr s = tomographic_scheme(default_sphere_quadrature());
  return s;
}

std::vector<SchemePtr> all_schemes() {
  return {wigner_scheme(Variant::A), wigner_scheme(Variant::B), tomo()};
}

}  // namespace

TEST_CASE("wigner scheme operators") {
  const SchemePtr s = wigner_scheme(Variant::A);
  REQUIRE(s->size() == 4);
  CHECK(s->dimension() == 2);
  const Matrix2c a00 = phase_point_matrix({0, 0}, Variant::A);
  CHECK(max_abs_diff(s->dequantizer(0), ComplexMatrix(a00 / 2.0)) == 0.0);
  CHECK(max_abs_diff(s->quantizer(0), ComplexMatrix(a00)) == 0.0);
  CHECK(s->weight(0) == 1.0);
  CHECK(s->point(3).index == std::vector<int>{1, 1});
}

TEST_CASE("scheme consistency residuals") {
  CHECK(wigner_scheme(Variant::A)->consistency_residual() <= 1e-12);
  CHECK(wigner_scheme(Variant::B)->consistency_residual() <= 1e-12);
  CHECK(tomo()->consistency_residual() <= 1e-10);
  CHECK(tomographic_scheme(SphereQuadrature(2, 5))->consistency_residual() <= 1e-10);
  CHECK(two_qubit_tomographic_scheme(SphereQuadrature(2, 3))->consistency_residual() <= 1e-10);
}

TEST_CASE("tomographic scheme layout and operators") {
  const SchemePtr& s = tomo();
  const SphereQuadrature q = default_sphere_quadrature();
  REQUIRE(s->size() == 2 * q.size());
  double up_weight = 0.0;
  double down_weight = 0.0;
  for (std::size_t i = 0; i < s->size(); ++i) {
    const SchemePoint& pt = s->point(i);
    const SpinProjection m = pt.index[0] == 0 ? Up : Down;
    const Direction d(pt.nodes[0].theta, pt.nodes[0].psi);
    CHECK(max_abs_diff(s->dequantizer(i), ComplexMatrix(dequantizer(m, d))) == 0.0);
    CHECK(max_abs_diff(s->quantizer(i), ComplexMatrix(quantizer(m, d))) == 0.0);
    (m == Up ? up_weight : down_weight) += pt.weight;
  }
  CHECK(std::abs(up_weight - 1.0) <= 1e-14);
  CHECK(std::abs(down_weight - 1.0) <= 1e-14);
  CHECK(max_abs_diff(dequantizer(Up, Direction(0, 0)), mat2(1, 0, 0, 0)) == 0.0);
  CHECK(max_abs_diff(quantizer(Up, Direction(0, 0)), mat2(2, 0, 0, -1)) == 0.0);
}

TEST_CASE("tomographic scheme rejects an insufficient rule") {
  CHECK_THROWS_AS(tomographic_scheme(SphereQuadrature(1, 1)), SchemeConsistencyError);
  CHECK_THROWS_AS(tomographic_scheme(SphereQuadrature(3, 2)), SchemeConsistencyError);
}

TEST_CASE("scheme constructor validation") {
  const std::vector<ComplexMatrix> half{ComplexMatrix::Identity(2, 2) / 2.0};
  CHECK_THROWS_AS(Scheme("bad", {SchemePoint{{0}, {}, 1.0}}, half, {}, 1e-10), ShapeError);
  CHECK_THROWS_AS(Scheme("bad", {SchemePoint{{0}, {}, -1.0}}, half, half, 1e-10,
                         Scheme::Check::Skip),
                  DomainError);
  // A single point with D = Q = I/2 does not reconstruct traceless operators.
  CHECK_THROWS_AS(Scheme("single", {SchemePoint{{0}, {}, 1.0}}, half, half, 1e-10),
                  SchemeConsistencyError);
}

TEST_CASE("star kernel examples") {
  // One point, D = Q = 1/2 on a one-dimensional space: the kernel is the scalar 1/8.
  const std::vector<ComplexMatrix> scalar{ComplexMatrix::Constant(1, 1, 0.5)};
  const Scheme single("scalar", {SchemePoint{{0}, {}, 1.0}}, scalar, scalar, 1e-10,
                      Scheme::Check::Skip);
  CHECK(std::abs(star_kernel(single, 0, 0, 0) - 0.125) < 1e-16);
  // The same operators on a qubit pick up the trace of the identity.
  const std::vector<ComplexMatrix> half{ComplexMatrix::Identity(2, 2) / 2.0};
  const Scheme qubit("half", {SchemePoint{{0}, {}, 1.0}}, half, half, 1e-10, Scheme::Check::Skip);
  CHECK(std::abs(star_kernel(qubit, 0, 0, 0) - 0.25) < 1e-16);

  const SchemePtr s = wigner_scheme(Variant::A);
  const Matrix2c a = phase_point_matrix({0, 0}, Variant::A);
  const Complex expected = (a * a * a / 2.0).trace();
  CHECK(std::abs(star_kernel(*s, 0, 0, 0) - expected) < 1e-15);

  // Brute force against a dense product for every triple of the Wigner scheme.
  for (std::size_t x1 = 0; x1 < 4; ++x1) {
    for (std::size_t x2 = 0; x2 < 4; ++x2) {
      for (std::size_t x = 0; x < 4; ++x) {
        const Complex k = (s->quantizer(x1) * s->quantizer(x2) * s->dequantizer(x)).trace();
        CHECK(std::abs(star_kernel(*s, x1, x2, x) - k) < 1e-15);
      }
    }
  }
}

TEST_CASE("star kernel summed against the dequantizer weights") {
  // Summing K(x1, x2, x) against the dual symbol of A gives Tr(D(x1) D(x2) A).
  Rng rng(17);
  for (const SchemePtr& s : all_schemes()) {
    for (int n = 0; n < 5; ++n) {
      const ComplexMatrix a = random_operator(rng, 2);
      const Symbol fa = dual_symbol(a, s);
      const std::size_t x1 = static_cast<std::size_t>(n) % s->size();
      const std::size_t x2 = (x1 * 7 + 3) % s->size();
      Complex acc = 0.0;
      for (std::size_t x = 0; x < s->size(); ++x) acc += s->weight(x) * star_kernel(*s, x1, x2, x) * fa[x];
      const Complex direct = (s->quantizer(x1) * s->quantizer(x2) * a).trace();
      CHECK(std::abs(acc - direct) < 1e-10);
    }
  }
}

TEST_CASE("symbol examples") {
  const SchemePtr wa = wigner_scheme(Variant::A);
  const Symbol fi = symbol(ComplexMatrix::Identity(2, 2), wa);
  CHECK(max_abs(fi.values() - Eigen::VectorXcd::Constant(4, 0.5)) < 1e-15);
  CHECK(!fi.dual());

  const Symbol fmix = symbol(ComplexMatrix::Identity(2, 2) / 2.0, tomo());
  CHECK(max_abs(fmix.values() - Eigen::VectorXcd::Constant(int(tomo()->size()), 0.5)) < 1e-15);

  // Symbol at an axis-aligned point equals the tomogram there.
  CHECK(tomogram(density_from_bloch(0, 0, 1), Up, Direction(0, 0)) == doctest::Approx(1.0));
  Rng rng(2);
  const DensityMatrix rho = random_qubit_state(rng);
  const Symbol ft = symbol(rho.matrix(), tomo());
  for (std::size_t i = 0; i < tomo()->size(); ++i) {
    const SchemePoint& pt = tomo()->point(i);
    const Direction d(pt.nodes[0].theta, pt.nodes[0].psi);
    CHECK(std::abs(ft[i] - tomogram(rho, pt.index[0] == 0 ? Up : Down, d)) < 1e-15);
  }
}

TEST_CASE("dual symbol examples") {
  const SchemePtr wa = wigner_scheme(Variant::A);
  const Symbol di = dual_symbol(ComplexMatrix::Identity(2, 2), wa);
  CHECK(di.dual());
  CHECK(max_abs(di.values() - Eigen::VectorXcd::Constant(4, 1.0)) < 1e-15);

  const Symbol dmix = dual_symbol(ComplexMatrix::Identity(2, 2) / 2.0, tomo());
  CHECK(max_abs(dmix.values() - Eigen::VectorXcd::Constant(int(tomo()->size()), 0.5)) < 1e-15);

  Rng rng(6);
  const DensityMatrix rho = random_qubit_state(rng);
  const Symbol dr = dual_symbol(rho.matrix(), wa);
  const WignerFunction w = wigner(rho, Variant::A);
  for (int a = 0; a < 4; ++a) CHECK(std::abs(dr[a] - 2.0 * w.values()[a]) < 1e-15);
}

TEST_CASE("reconstruct examples") {
  const SchemePtr wa = wigner_scheme(Variant::A);
  const Symbol uniform(wa, Eigen::VectorXcd::Constant(4, 0.25), false);
  CHECK(max_abs_diff(reconstruct(uniform), ComplexMatrix::Identity(2, 2) / 2.0) < 1e-15);

  const ComplexMatrix rho0 = mat2(1, 0, 0, 0);
  CHECK(max_abs_diff(reconstruct(symbol(rho0, wa)), rho0) == 0.0);

  Rng rng(10);
  for (int n = 0; n < 20; ++n) {
    const DensityMatrix rho = random_qubit_state(rng);
    CHECK(max_abs_diff(reconstruct(symbol(rho.matrix(), tomo())), rho.matrix()) <= 1e-10);
  }
}

TEST_CASE("symbol with wrong length or mismatched operator") {
  const SchemePtr wa = wigner_scheme(Variant::A);
  CHECK_THROWS_AS(Symbol(wa, Eigen::VectorXcd::Zero(3), false), ShapeError);
  CHECK_THROWS_AS(symbol(ComplexMatrix::Identity(4, 4), wa), ShapeError);
}

TEST_CASE("reconstruction and linearity on random operators") {
  Rng rng(55);
  for (const SchemePtr& s : all_schemes()) {
    CAPTURE(s->name());
    for (int n = 0; n < 50; ++n) {
      const ComplexMatrix a = random_operator(rng, 2);
      const ComplexMatrix b = random_operator(rng, 2);
      CHECK(max_abs_diff(reconstruct(symbol(a, s)), a) <= 1e-10);
      CHECK(max_abs_diff(reconstruct(dual_symbol(a, s)), a) <= 1e-10);
      const Complex al(0.3, -1.2);
      const Complex be(-0.7, 0.4);
      const Eigen::VectorXcd lhs = symbol(al * a + be * b, s).values();
      const Eigen::VectorXcd rhs = al * symbol(a, s).values() + be * symbol(b, s).values();
      CHECK(max_abs(lhs - rhs) <= 1e-14);
    }
  }
}

TEST_CASE("two-qubit scheme reconstruction") {
  const SchemePtr s = two_qubit_tomographic_scheme(SphereQuadrature(2, 3));
  CHECK(s->dimension() == 4);
  Rng rng(71);
  for (int n = 0; n < 10; ++n) {
    const DensityMatrix rho = random_mixed_state(rng, 4);
    CHECK(max_abs_diff(reconstruct(symbol(rho.matrix(), s)), rho.matrix()) <= 1e-10);
  }
}

TEST_CASE("intertwining kernel examples") {
  const SchemePtr wa = wigner_scheme(Variant::A);
  const IntertwiningKernel self = intertwining_kernel(wa, wa);
  CHECK(max_abs_diff(self.values(), Eigen::MatrixXcd::Identity(4, 4)) < 1e-15);

  const IntertwiningKernel k = intertwining_kernel(wa, tomo());
  CHECK(kernel_value(Variant::A, false, Up, Direction(0, 0), {0, 0}) == doctest::Approx(1.0));
  for (std::size_t y = 0; y < tomo()->size(); ++y) {
    const SchemePoint& pt = tomo()->point(y);
    const Direction d(pt.nodes[0].theta, pt.nodes[0].psi);
    for (const PhasePoint& p : phase_points()) {
      CHECK(std::abs(k(y, p.index()) -
                     kernel_value(Variant::A, false, pt.index[0] == 0 ? Up : Down, d, p)) < 1e-15);
    }
  }

  Rng rng(13);
  for (int n = 0; n < 20; ++n) {
    const DensityMatrix rho = random_qubit_state(rng);
    const Symbol moved = k.apply(symbol(rho.matrix(), wa));
    CHECK(max_abs(moved.values() - symbol(rho.matrix(), tomo()).values()) <= 1e-12);
  }
}

TEST_CASE("intertwining kernels between every pair of schemes") {
  Rng rng(14);
  const auto schemes = all_schemes();
  for (const SchemePtr& from : schemes) {
    for (const SchemePtr& to : schemes) {
      const IntertwiningKernel k = intertwining_kernel(from, to);
      CHECK(k.values().rows() == static_cast<Eigen::Index>(to->size()));
      CHECK(k.values().cols() == static_cast<Eigen::Index>(from->size()));
      for (int n = 0; n < 10; ++n) {
        const ComplexMatrix a = random_operator(rng, 2);
        CHECK(max_abs(k.apply(symbol(a, from)).values() - symbol(a, to).values()) <= 1e-10);
      }
    }
  }
}

TEST_CASE("intertwining kernel errors") {
  const SchemePtr wa = wigner_scheme(Variant::A);
  const SchemePtr two = two_qubit_tomographic_scheme(SphereQuadrature(2, 3));
  CHECK_THROWS(intertwining_kernel(wa, two));
  const IntertwiningKernel k = intertwining_kernel(wa, tomo());
  CHECK_THROWS(k.apply(symbol(ComplexMatrix::Identity(2, 2), wigner_scheme(Variant::A))));
  CHECK_THROWS(k.apply(dual_symbol(ComplexMatrix::Identity(2, 2), wa)));
}

TEST_CASE("star product examples") {
  for (const SchemePtr& s : all_schemes()) {
    CAPTURE(s->name());
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const Symbol fi = symbol(id, s);
    CHECK(max_abs(star_multiply(fi, fi).values() - fi.values()) <= 1e-10);

    const Symbol f0 = symbol(mat2(1, 0, 0, 0), s);
    CHECK(max_abs(star_multiply(f0, f0).values() - f0.values()) <= 1e-10);
  }
}

TEST_CASE("star product is a homomorphism and associative") {
  Rng rng(101);
  for (const SchemePtr& s : all_schemes()) {
    CAPTURE(s->name());
    const int pairs = s->size() > 4 ? 20 : 100;
    double worst = 0.0;
    for (int n = 0; n < pairs; ++n) {
      const ComplexMatrix a = random_operator(rng, 2);
      const ComplexMatrix b = random_operator(rng, 2);
      worst = std::max(worst, max_abs(star_multiply(symbol(a, s), symbol(b, s)).values() -
                                      symbol(a * b, s).values()));
    }
    CHECK(worst <= 1e-10);
    for (int n = 0; n < 5; ++n) {
      const Symbol fa = symbol(random_operator(rng, 2), s);
      const Symbol fb = symbol(random_operator(rng, 2), s);
      const Symbol fc = symbol(random_operator(rng, 2), s);
      const Symbol left = star_multiply(star_multiply(fa, fb), fc);
      const Symbol right = star_multiply(fa, star_multiply(fb, fc));
      CHECK(max_abs(left.values() - right.values()) <= 1e-10);
    }
  }
}

TEST_CASE("star product of symbols from different schemes is rejected") {
  const Symbol fa = symbol(ComplexMatrix::Identity(2, 2), wigner_scheme(Variant::A));
  const Symbol fb = symbol(ComplexMatrix::Identity(2, 2), wigner_scheme(Variant::B));
  CHECK_THROWS(star_multiply(fa, fb));
}

TEST_CASE("mean value examples") {
  const SchemePtr wa = wigner_scheme(Variant::A);
  const ComplexMatrix z = pauli_z();
  const ComplexMatrix x = pauli_x();
  for (const SchemePtr& s : all_schemes()) {
    CHECK(std::abs(mean_value(density_from_bloch(0.1, 0.2, 0.3), ComplexMatrix::Identity(2, 2), s) -
                   1.0) < 1e-12);
    CHECK(std::abs(mean_value(density_from_bloch(0, 0, 1), z, s) - 1.0) < 1e-12);
    CHECK(std::abs(mean_value(density_from_bloch(0, 0, 0), x, s)) < 1e-12);
  }
  CHECK_THROWS_AS(mean_value(density_from_bloch(0, 0, 0), ComplexMatrix(mat2(0, 1, 0, 0)), wa),
                  DomainError);
}

TEST_CASE("mean value equals the trace for random pairs") {
  Rng rng(5150);
  for (const SchemePtr& s : all_schemes()) {
    for (int n = 0; n < 100; ++n) {
      const DensityMatrix rho = random_qubit_state(rng);
      const ComplexMatrix obs = random_hermitian(rng, 2);
      CHECK(std::abs(mean_value(rho, obs, s) - trace_product(rho.matrix(), obs).real()) <= 1e-10);
    }
  }
}
