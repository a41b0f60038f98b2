#include "qstar/verification.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "qstar/kernels.hpp"
#include "qstar/phase_space.hpp"
#include "qstar/reference.hpp"
#include "qstar/sampling.hpp"
#include "qstar/spin_tomography.hpp"
#include "qstar/star_product.hpp"
#include "qstar/wigner.hpp"

namespace qstar {

namespace {

struct CheckSpec {
  const char* id;
  const char* identity;
  double tolerance;
};

// Order here is the report order.
constexpr CheckSpec kChecks[] = {
    {"phase_space.operators_A", "A_a = sum_{lines L through a} Q(L) - I equals the reference A_jk", 1e-14},
    {"phase_space.operators_B", "B_a = A_a^T equals the reference B_jk", 1e-14},
    {"phase_space.lines", "3 lines per point; 2 distinct points share 1 line; cross-striation lines meet once", 0.0},
    {"phase_space.mutually_unbiased", "|<e|f>|^2 = 1/2 for bases of different striations", 1e-12},
    {"phase_space.unit_trace", "Tr A_a = Tr B_a = 1", 1e-12},
    {"phase_space.completeness", "sum_a A_a = sum_a B_a = 2 I", 1e-14},
    {"phase_space.orthogonality", "Tr(A_a A_b) = Tr(B_a B_b) = 2 delta_ab", 1e-12},
    {"phase_space.spectrum", "eigenvalues of A_a and B_a are (1 +- sqrt 3)/2", 1e-12},
    {"density.parametrizations", "[[a, c e^{i xi}], [c e^{-i xi}, b]] = 1/2 [[1+z, x+iy], [x-iy, 1-z]] with a=(1+z)/2, c e^{i xi}=(x+iy)/2", 1e-12},
    {"scheme.consistency.wigner_A", "sum_x' w(x') Tr(Q(x) D(x')) Tr(A Q(x')) = Tr(A Q(x)), Wigner scheme A", 1e-10},
    {"scheme.consistency.wigner_B", "same, Wigner scheme B", 1e-10},
    {"scheme.consistency.tomographic", "same, spin tomographic scheme with the (3, 8) sphere rule", 1e-10},
    {"scheme.consistency.two_qubit", "same, two-qubit tomographic scheme Q1 (x) Q2, D1 (x) D2 with the (2, 3) rule", 1e-10},
    {"scheme.reconstruction", "A = sum_x w f_A(x) D(x) = sum_x w f_A^d(x) Q(x)", 1e-10},
    {"scheme.symbol_linearity", "f_{aA + bB} = a f_A + b f_B", 1e-14},
    {"scheme.intertwining", "F_A(y) = sum_x w K(y, x) f_A(x) with K(y, x) = Tr(Q~(y) D(x)), both directions", 1e-10},
    {"scheme.star_product", "(f_A * f_B)(x) = sum w w f_A f_B Tr(D(x') D(x'') Q(x)) = f_{AB}(x)", 1e-10},
    {"scheme.star_associativity", "(f_A * f_B) * f_C = f_A * (f_B * f_C)", 1e-10},
    {"scheme.mean_value", "Tr(rho A) = sum_x w w_rho(x) f_A^d(x)", 1e-10},
    {"tomography.su2_dequantizer", "U^dagger |m><m| U = I/2 + m M(theta, psi) for every phi", 1e-12},
    {"tomography.projector", "Q(m)^2 = Q(m), Q(1/2) + Q(-1/2) = I", 1e-12},
    {"tomography.quantizer", "D(m) = I/2 + 3 m M(theta, psi): D - I/2 = 3 (Q - I/2), Tr D = 1", 1e-12},
    {"tomography.closed_form", "Tr(rho Q(m, n)) = 1/2 +- [(a-b)/2 cos t + c sin t cos(psi + xi)] = 1/2 (1 +- (z cos t + x sin t cos psi - y sin t sin psi))", 1e-12},
    {"tomography.probability", "w(m, n) >= 0 and w(1/2, n) + w(-1/2, n) = 1", 1e-12},
    {"tomography.reconstruction", "rho = sum_m int dOmega/4pi w(m, n) D(m, n)", 1e-10},
    {"two_qubit.operators", "Q(m1, m2) = Q1 (x) Q2, D(m1, m2) = D1 (x) D2; sum Q = I, Tr D = 1", 1e-12},
    {"two_qubit.tomogram", "joint tomogram: normalization, product factorization, marginals, Bell z-z statistics", 1e-12},
    {"wigner.closed_form_A", "Tr(rho A_jk)/2 = (1+z+x-y)/4, (1+z-x+y)/4, (1-z+x+y)/4, (1-z-x-y)/4", 1e-12},
    {"wigner.closed_form_B", "Tr(rho B_jk)/2 = (1+z+x+y)/4, (1+z-x-y)/4, (1-z+x-y)/4, (1-z-x+y)/4", 1e-12},
    {"wigner.scheme_symbol", "W(j, k) equals the symbol of rho on the Wigner scheme", 1e-14},
    {"wigner.reconstruction", "rho = sum_jk W^A(j,k) A_jk = sum_jk W^B(j,k) B_jk", 1e-12},
    {"wigner.basis_change", "W^A(i,j) = 1/2 sum_lk W^B(l,k) Tr(A_ij B_lk), and back", 1e-12},
    {"wigner.purity", "2 sum_a W(a)^2 = Tr(rho^2)", 1e-12},
    {"kernels.closed_form_A", "Tr(Q(m, n) A_jk) equals the reference Ker^A (Ker^A(-1/2; 1,0) with its /2 restored)", 1e-12},
    {"kernels.closed_form_A_dual", "Tr(D(m, n) A_jk)/2 equals the reference dual Ker^A", 1e-12},
    {"kernels.closed_form_B", "Tr(Q(m, n) B_jk) equals the reference Ker^B", 1e-12},
    {"kernels.closed_form_B_dual", "Tr(D(m, n) B_jk)/2 equals the reference dual Ker^B", 1e-12},
    {"kernels.tomogram_from_wigner", "w(m, n) = sum_jk Ker^A W^A = sum_jk Ker^B W^B", 1e-12},
    {"kernels.wigner_from_tomogram", "W(j,k) = 1/4pi sum_m int w ~Ker sin t dt dpsi with (2, 5) and (3, 8) rules", 1e-10},
};

constexpr double kInf = std::numeric_limits<double>::infinity();

double mat_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs_diff(a, b); }

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) : rng_(options.seed), n_(options.samples) {}

  std::vector<CheckResult> run() {
    std::vector<CheckResult> out;
    const std::vector<std::function<std::pair<double, std::size_t>()>> bodies{
        [&] { return operators_fixture(Variant::A); },
        [&] { return operators_fixture(Variant::B); },
        [&] { return lines(); },
        [&] { return mutually_unbiased(); },
        [&] { return unit_trace(); },
        [&] { return completeness(); },
        [&] { return orthogonality(); },
        [&] { return spectrum(); },
        [&] { return parametrizations(); },
        [&] { return std::pair{wigner_scheme(Variant::A)->consistency_residual(), std::size_t{16}}; },
        [&] { return std::pair{wigner_scheme(Variant::B)->consistency_residual(), std::size_t{16}}; },
        [&] {
          return std::pair{tomographic_scheme(default_sphere_quadrature())->consistency_residual(),
                           std::size_t{48}};
        },
        [&] {
          return std::pair{
              two_qubit_tomographic_scheme(build_sphere_quadrature(2, 3))->consistency_residual(),
              std::size_t{144}};
        },
        [&] { return scheme_reconstruction(); },
        [&] { return symbol_linearity(); },
        [&] { return intertwining(); },
        [&] { return star_product(); },
        [&] { return star_associativity(); },
        [&] { return mean_value_check(); },
        [&] { return su2_dequantizer(); },
        [&] { return projector(); },
        [&] { return quantizer_relation(); },
        [&] { return tomogram_closed_form_check(); },
        [&] { return probability(); },
        [&] { return tomographic_reconstruction(); },
        [&] { return two_qubit_operators(); },
        [&] { return two_qubit_tomogram_check(); },
        [&] { return wigner_closed(Variant::A); },
        [&] { return wigner_closed(Variant::B); },
        [&] { return wigner_scheme_symbol(); },
        [&] { return wigner_reconstruction(); },
        [&] { return basis_change(); },
        [&] { return purity(); },
        [&] { return kernel_closed(Variant::A, false); },
        [&] { return kernel_closed(Variant::A, true); },
        [&] { return kernel_closed(Variant::B, false); },
        [&] { return kernel_closed(Variant::B, true); },
        [&] { return tomogram_from_wigner_check(); },
        [&] { return wigner_from_tomogram_check(); },
    };
    static_assert(std::size(kChecks) == 39);
    for (std::size_t i = 0; i < bodies.size(); ++i) {
      CheckResult r;
      r.id = kChecks[i].id;
      r.identity = kChecks[i].identity;
      r.tolerance = kChecks[i].tolerance;
      try {
        const auto [residual, samples] = bodies[i]();
        r.residual = residual;
        r.samples = samples;
        r.passed = residual <= r.tolerance;
      } catch (const std::exception& e) {
        r.residual = kInf;
        r.passed = false;
        r.error = e.what();
      }
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  using Result = std::pair<double, std::size_t>;

  Result operators_fixture(Variant v) {
    double worst = 0.0;
    for (const PhasePoint& p : phase_points()) {
      worst = std::max(worst, mat_diff(phase_point_matrix(p, v), reference::phase_point_matrix(p, v)));
    }
    return {worst, 4};
  }

  Result lines() {
    double bad = 0.0;
    const auto pts = phase_points();
    for (const PhasePoint& p : pts) {
      const auto ls = lines_through(p);
      for (const Line& l : ls) bad += l.contains(p) ? 0.0 : 1.0;
    }
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        int shared = 0;
        for (const Line& l : lines_through(pts[a])) shared += l.contains(pts[b]) ? 1 : 0;
        bad += shared == 1 ? 0.0 : 1.0;
      }
    }
    const auto st = striations();
    for (std::size_t s = 0; s < st.size(); ++s) {
      for (std::size_t t = 0; t < st.size(); ++t) {
        for (const Line& l1 : st[s].lines) {
          for (const Line& l2 : st[t].lines) {
            int common = 0;
            for (const PhasePoint& p : l1.points) common += l2.contains(p) ? 1 : 0;
            const int expected = s != t ? 1 : (l1 == l2 ? 2 : 0);
            bad += common == expected ? 0.0 : 1.0;
          }
        }
      }
    }
    return {bad, 4 + 6 + 36};
  }

  Result mutually_unbiased() {
    double worst = 0.0;
    const auto st = striations();
    for (std::size_t s = 0; s < st.size(); ++s) {
      for (std::size_t t = 0; t < st.size(); ++t) {
        for (int i = 0; i < 2; ++i) {
          for (int k = 0; k < 2; ++k) {
            const double overlap = std::norm(st[s].basis[i].dot(st[t].basis[k]));
            const double expected = s != t ? 0.5 : (i == k ? 1.0 : 0.0);
            worst = std::max(worst, std::abs(overlap - expected));
          }
        }
      }
    }
    return {worst, 36};
  }

  Result unit_trace() {
    double worst = 0.0;
    for (Variant v : {Variant::A, Variant::B}) {
      for (const PhasePoint& p : phase_points()) {
        worst = std::max(worst, std::abs(phase_point_matrix(p, v).trace() - 1.0));
      }
    }
    return {worst, 8};
  }

  Result completeness() {
    double worst = 0.0;
    for (Variant v : {Variant::A, Variant::B}) {
      Matrix2c sum = Matrix2c::Zero();
      for (const PhasePoint& p : phase_points()) sum += phase_point_matrix(p, v);
      worst = std::max(worst, mat_diff(sum, 2.0 * Matrix2c::Identity()));
    }
    return {worst, 2};
  }

  Result orthogonality() {
    double worst = 0.0;
    for (Variant v : {Variant::A, Variant::B}) {
      for (const PhasePoint& a : phase_points()) {
        for (const PhasePoint& b : phase_points()) {
          const Complex t = trace_product(phase_point_matrix(a, v), phase_point_matrix(b, v));
          worst = std::max(worst, std::abs(t - (a == b ? 2.0 : 0.0)));
        }
      }
    }
    return {worst, 32};
  }

  Result spectrum() {
    double worst = 0.0;
    const double lo = (1.0 - std::sqrt(3.0)) / 2.0;
    const double hi = (1.0 + std::sqrt(3.0)) / 2.0;
    for (Variant v : {Variant::A, Variant::B}) {
      for (const PhasePoint& p : phase_points()) {
        const Eigen::VectorXd ev = hermitian_eigenvalues(phase_point_matrix(p, v));
        worst = std::max({worst, std::abs(ev(0) - lo), std::abs(ev(1) - hi)});
      }
    }
    return {worst, 8};
  }

  Result parametrizations() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const BlochVector r = random_bloch_ball(rng_);
      const double a = 0.5 * (1.0 + r.z);
      const Complex off = 0.5 * Complex(r.x, r.y);
      const DensityMatrix polar = density_from_polar(a, std::abs(off), std::arg(off));
      worst = std::max(worst, mat_diff(polar.matrix(), density_from_bloch(r).matrix()));
    }
    return {worst, n_};
  }

  std::vector<SchemePtr> schemes() {
    return {wigner_scheme(Variant::A), wigner_scheme(Variant::B),
            tomographic_scheme(default_sphere_quadrature())};
  }

  Result scheme_reconstruction() {
    double worst = 0.0;
    for (const SchemePtr& s : schemes()) {
      for (std::size_t i = 0; i < n_ / 4; ++i) {
        const ComplexMatrix a = random_operator(rng_, 2);
        worst = std::max(worst, mat_diff(reconstruct(symbol(a, s)), a));
        worst = std::max(worst, mat_diff(reconstruct(dual_symbol(a, s)), a));
      }
    }
    return {worst, 3 * (n_ / 4)};
  }

  Result symbol_linearity() {
    double worst = 0.0;
    for (const SchemePtr& s : schemes()) {
      for (std::size_t i = 0; i < n_ / 4; ++i) {
        const ComplexMatrix a = random_operator(rng_, 2);
        const ComplexMatrix b = random_operator(rng_, 2);
        const Complex alpha(0.7, -0.3);
        const Complex beta(-1.1, 0.4);
        const Symbol lhs = symbol(alpha * a + beta * b, s);
        const Eigen::VectorXcd rhs = alpha * symbol(a, s).values() + beta * symbol(b, s).values();
        worst = std::max(worst, (lhs.values() - rhs).cwiseAbs().maxCoeff());
      }
    }
    return {worst, 3 * (n_ / 4)};
  }

  Result intertwining() {
    double worst = 0.0;
    const SchemePtr tomo = tomographic_scheme(default_sphere_quadrature());
    for (Variant v : {Variant::A, Variant::B}) {
      const SchemePtr wig = wigner_scheme(v);
      const IntertwiningKernel forward = intertwining_kernel(wig, tomo);
      const IntertwiningKernel backward = intertwining_kernel(tomo, wig);
      for (std::size_t i = 0; i < n_ / 4; ++i) {
        const ComplexMatrix a = random_operator(rng_, 2);
        worst = std::max(worst, (forward.apply(symbol(a, wig)).values() - symbol(a, tomo).values())
                                    .cwiseAbs()
                                    .maxCoeff());
        worst = std::max(worst, (backward.apply(symbol(a, tomo)).values() - symbol(a, wig).values())
                                    .cwiseAbs()
                                    .maxCoeff());
      }
    }
    return {worst, 2 * (n_ / 4)};
  }

  Result star_product() {
    double worst = 0.0;
    std::size_t count = 0;
    for (const SchemePtr& s : schemes()) {
      const std::size_t reps = s->size() > 8 ? 5 : n_ / 4;
      for (std::size_t i = 0; i < reps; ++i) {
        const ComplexMatrix a = random_operator(rng_, 2);
        const ComplexMatrix b = random_operator(rng_, 2);
        const Symbol prod = star_multiply(symbol(a, s), symbol(b, s));
        worst = std::max(worst, (prod.values() - symbol(a * b, s).values()).cwiseAbs().maxCoeff());
        ++count;
      }
    }
    return {worst, count};
  }

  Result star_associativity() {
    double worst = 0.0;
    std::size_t count = 0;
    for (const SchemePtr& s : schemes()) {
      const std::size_t reps = s->size() > 8 ? 2 : n_ / 4;
      for (std::size_t i = 0; i < reps; ++i) {
        const Symbol fa = symbol(random_operator(rng_, 2), s);
        const Symbol fb = symbol(random_operator(rng_, 2), s);
        const Symbol fc = symbol(random_operator(rng_, 2), s);
        const Symbol left = star_multiply(star_multiply(fa, fb), fc);
        const Symbol right = star_multiply(fa, star_multiply(fb, fc));
        worst = std::max(worst, (left.values() - right.values()).cwiseAbs().maxCoeff());
        ++count;
      }
    }
    return {worst, count};
  }

  Result mean_value_check() {
    double worst = 0.0;
    for (const SchemePtr& s : schemes()) {
      for (std::size_t i = 0; i < n_ / 4; ++i) {
        const DensityMatrix rho = random_qubit_state(rng_);
        const ComplexMatrix obs = random_hermitian(rng_, 2);
        worst = std::max(worst, std::abs(mean_value(rho, obs, s) -
                                         trace_product(rho.matrix(), obs).real()));
      }
    }
    return {worst, 3 * (n_ / 4)};
  }

  Result su2_dequantizer() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const Direction d = random_direction(rng_);
      const Matrix2c u = su2_matrix(d.theta, *d.phi, d.psi);
      worst = std::max(worst, mat_diff(u.adjoint() * u, Matrix2c::Identity()));
      for (SpinProjection m : kSpinProjections) {
        worst = std::max(worst, mat_diff(dequantizer_from_su2(m, d), dequantizer(m, d)));
      }
    }
    return {worst, n_};
  }

  Result projector() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const Direction d = random_direction(rng_);
      const Matrix2c up = dequantizer(SpinProjection::Up, d);
      const Matrix2c down = dequantizer(SpinProjection::Down, d);
      worst = std::max({worst, mat_diff(up * up, up), mat_diff(down * down, down),
                        mat_diff(up + down, Matrix2c::Identity())});
    }
    return {worst, n_};
  }

  Result quantizer_relation() {
    double worst = 0.0;
    const Matrix2c half = 0.5 * Matrix2c::Identity();
    for (std::size_t i = 0; i < n_; ++i) {
      const Direction d = random_direction(rng_);
      for (SpinProjection m : kSpinProjections) {
        const Matrix2c q = dequantizer(m, d);
        const Matrix2c dq = quantizer(m, d);
        worst = std::max({worst, mat_diff(dq - half, 3.0 * (q - half)),
                          std::abs(dq.trace() - 1.0), hermiticity_defect(dq)});
      }
    }
    return {worst, n_};
  }

  Result tomogram_closed_form_check() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const BlochVector r = random_bloch_ball(rng_);
      const DensityMatrix rho = density_from_bloch(r);
      const Direction d = random_direction(rng_);
      const double a = 0.5 * (1.0 + r.z);
      const double b = 1.0 - a;
      const double c = 0.5 * std::hypot(r.x, r.y);
      const double xi = std::atan2(r.y, r.x);
      const double polar_form =
          (a - b) / 2.0 * std::cos(d.theta) + c * std::sin(d.theta) * std::cos(d.psi + xi);
      for (SpinProjection m : kSpinProjections) {
        const double w = tomogram(rho, m, d);
        const double sign = m == SpinProjection::Up ? 1.0 : -1.0;
        worst = std::max({worst, std::abs(w - tomogram_closed_form(r, m, d)),
                          std::abs(w - (0.5 + sign * polar_form))});
      }
    }
    return {worst, n_};
  }

  Result probability() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const DensityMatrix rho = random_qubit_state(rng_);
      const Direction d = random_direction(rng_);
      const double up = tomogram(rho, SpinProjection::Up, d);
      const double down = tomogram(rho, SpinProjection::Down, d);
      worst = std::max({worst, std::abs(up + down - 1.0), std::max(0.0, -up), std::max(0.0, -down)});
    }
    return {worst, n_};
  }

  Result tomographic_reconstruction() {
    double worst = 0.0;
    const SphereQuadrature q = default_sphere_quadrature();
    for (std::size_t i = 0; i < n_; ++i) {
      const DensityMatrix rho = random_qubit_state(rng_);
      const DensityMatrix back = density_from_tomogram(Tomogram(rho), q);
      worst = std::max(worst, mat_diff(back.matrix(), rho.matrix()));
    }
    return {worst, n_};
  }

  Result two_qubit_operators() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_ / 4; ++i) {
      const Direction d1 = random_direction(rng_);
      const Direction d2 = random_direction(rng_);
      ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
      for (SpinProjection m1 : kSpinProjections) {
        for (SpinProjection m2 : kSpinProjections) {
          const TwoQubitOperators ops = two_qubit_scheme_operators(m1, m2, d1, d2);
          sum += ops.dequantizer;
          worst = std::max(worst, std::abs(ops.quantizer.trace() - 1.0));
          // Entry (2 i1 + i2, 2 k1 + k2) of a Kronecker product.
          const Matrix2c q1 = dequantizer(m1, d1);
          const Matrix2c q2 = dequantizer(m2, d2);
          for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
              worst = std::max(worst, std::abs(ops.dequantizer(r, c) - q1(r / 2, c / 2) * q2(r % 2, c % 2)));
            }
          }
        }
      }
      worst = std::max(worst, mat_diff(sum, ComplexMatrix::Identity(4, 4)));
    }
    return {worst, n_ / 4};
  }

  Result two_qubit_tomogram_check() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_ / 4; ++i) {
      const DensityMatrix ra = random_qubit_state(rng_);
      const DensityMatrix rb = random_qubit_state(rng_);
      const DensityMatrix product = validate_density(tensor_product(ra.matrix(), rb.matrix()));
      const DensityMatrix mixed = random_mixed_state(rng_, 4);
      const DensityMatrix reduced = validate_density(partial_trace_second(mixed.matrix()));
      const Direction d1 = random_direction(rng_);
      const Direction d2 = random_direction(rng_);
      double total = 0.0;
      for (SpinProjection m1 : kSpinProjections) {
        double marginal = 0.0;
        for (SpinProjection m2 : kSpinProjections) {
          total += two_qubit_tomogram(mixed, m1, m2, d1, d2);
          marginal += two_qubit_tomogram(mixed, m1, m2, d1, d2);
          worst = std::max(worst, std::abs(two_qubit_tomogram(product, m1, m2, d1, d2) -
                                           tomogram(ra, m1, d1) * tomogram(rb, m2, d2)));
        }
        worst = std::max(worst, std::abs(marginal - tomogram(reduced, m1, d1)));
      }
      worst = std::max(worst, std::abs(total - 1.0));
    }
    // Bell state (|00> + |11>)/sqrt 2 measured along z on both qubits.
    ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    const DensityMatrix phi = validate_density(bell);
    const Direction z(0.0, 0.0);
    using enum SpinProjection;
    worst = std::max({worst, std::abs(two_qubit_tomogram(phi, Up, Up, z, z) - 0.5),
                      std::abs(two_qubit_tomogram(phi, Up, Down, z, z)),
                      std::abs(two_qubit_tomogram(phi, Down, Up, z, z)),
                      std::abs(two_qubit_tomogram(phi, Down, Down, z, z) - 0.5)});
    return {worst, n_ / 4 + 1};
  }

  Result wigner_closed(Variant v) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const BlochVector r = random_bloch_ball(rng_);
      const WignerFunction w = wigner(density_from_bloch(r), v);
      const WignerFunction c = wigner_closed_form(r, v);
      for (int a = 0; a < 4; ++a) worst = std::max(worst, std::abs(w.values()[a] - c.values()[a]));
    }
    return {worst, n_};
  }

  Result wigner_scheme_symbol() {
    double worst = 0.0;
    for (Variant v : {Variant::A, Variant::B}) {
      const SchemePtr s = wigner_scheme(v);
      for (std::size_t i = 0; i < n_ / 2; ++i) {
        const DensityMatrix rho = random_qubit_state(rng_);
        const WignerFunction w = wigner(rho, v);
        const Symbol f = symbol(rho.matrix(), s);
        for (std::size_t a = 0; a < 4; ++a) {
          worst = std::max(worst, std::abs(f[a] - w.values()[a]));
        }
      }
    }
    return {worst, n_};
  }

  Result wigner_reconstruction() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const DensityMatrix rho = random_qubit_state(rng_);
      for (Variant v : {Variant::A, Variant::B}) {
        const WignerReconstruction rec = density_from_wigner(wigner(rho, v));
        worst = std::max(worst, mat_diff(rec.matrix, rho.matrix()));
        if (!rec.physical) worst = kInf;
      }
    }
    return {worst, n_};
  }

  Result basis_change() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const DensityMatrix rho = random_qubit_state(rng_);
      const WignerFunction wa = wigner(rho, Variant::A);
      const WignerFunction wb = wigner(rho, Variant::B);
      const WignerFunction a_from_b = convert_basis(wb, Variant::A);
      const WignerFunction b_from_a = convert_basis(wa, Variant::B);
      for (int a = 0; a < 4; ++a) {
        worst = std::max({worst, std::abs(a_from_b.values()[a] - wa.values()[a]),
                          std::abs(b_from_a.values()[a] - wb.values()[a])});
      }
    }
    return {worst, n_};
  }

  Result purity() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const DensityMatrix rho = random_qubit_state(rng_);
      for (Variant v : {Variant::A, Variant::B}) {
        worst = std::max(worst, std::abs(purity_from_wigner(wigner(rho, v)) - rho.purity()));
      }
    }
    return {worst, n_};
  }

  Result kernel_closed(Variant v, bool dual) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const Direction d = random_direction(rng_);
      for (SpinProjection m : kSpinProjections) {
        for (const PhasePoint& p : phase_points()) {
          worst = std::max(worst, std::abs(kernel_value(v, dual, m, d, p) -
                                           reference::kernel(v, dual, m, d, p)));
        }
      }
    }
    return {worst, n_};
  }

  Result tomogram_from_wigner_check() {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const DensityMatrix rho = random_qubit_state(rng_);
      const Direction d = random_direction(rng_);
      const WignerFunction wa = wigner(rho, Variant::A);
      const WignerFunction wb = wigner(rho, Variant::B);
      for (SpinProjection m : kSpinProjections) {
        const double direct = tomogram(rho, m, d);
        worst = std::max({worst, std::abs(tomogram_from_wigner(wa, m, d) - direct),
                          std::abs(tomogram_from_wigner(wb, m, d) - direct)});
      }
    }
    return {worst, n_};
  }

  Result wigner_from_tomogram_check() {
    double worst = 0.0;
    const SphereQuadrature small = build_sphere_quadrature(2, 5);
    const SphereQuadrature dflt = default_sphere_quadrature();
    for (std::size_t i = 0; i < n_; ++i) {
      const DensityMatrix rho = random_qubit_state(rng_);
      const Tomogram t(rho);
      for (Variant v : {Variant::A, Variant::B}) {
        const WignerFunction direct = wigner(rho, v);
        const WignerFunction w1 = wigner_from_tomogram(t, v, small);
        const WignerFunction w2 = wigner_from_tomogram(t, v, dflt);
        for (int a = 0; a < 4; ++a) {
          worst = std::max({worst, std::abs(w1.values()[a] - direct.values()[a]),
                            std::abs(w2.values()[a] - direct.values()[a])});
        }
      }
    }
    return {worst, n_};
  }

  Rng rng_;
  std::size_t n_;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  return Runner(options).run();
}

std::vector<std::string> verification_check_ids() {
  std::vector<std::string> out;
  for (const CheckSpec& c : kChecks) out.emplace_back(c.id);
  return out;
}

}  // namespace qstar
