#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qstar/errors.hpp"
#include "qstar/quadrature.hpp"

using namespace qstar;

namespace {

double weight_sum(const SphereQuadrature& q) {
  double s = 0.0;
  for (double w : q.weights()) s += w;
  return s;
}

}  // namespace

TEST_CASE("gauss_legendre nodes and weights") {
  const GaussLegendreRule r2 = gauss_legendre(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  const GaussLegendreRule r3 = gauss_legendre(3);
  CHECK(std::abs(r3.nodes[1]) < 1e-15);
  CHECK(r3.nodes[2] == doctest::Approx(std::sqrt(0.6)).epsilon(1e-15));
  CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));

  // Exact for polynomials up to degree 2n-1.
  for (int n = 1; n <= 8; ++n) {
    const GaussLegendreRule r = gauss_legendre(n);
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double acc = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) acc += r.weights[i] * std::pow(r.nodes[i], deg);
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      CHECK(std::abs(acc - exact) < 1e-14);
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("build_sphere_quadrature (1,1)") {
  const SphereQuadrature q = build_sphere_quadrature(1, 1);
  REQUIRE(q.size() == 1);
  CHECK(q.nodes()[0].theta == doctest::Approx(std::numbers::pi / 2));
  CHECK(q.weights()[0] == doctest::Approx(1.0));
  CHECK(q.integrate([](const SphereNode&) { return 3.5; }) == doctest::Approx(3.5));
  CHECK(q.exactness_degree() == 0);
}

TEST_CASE("(2,5) integrates cos^2 to one third") {
  const SphereQuadrature q = build_sphere_quadrature(2, 5);
  const double v = q.integrate([](const SphereNode& n) { return std::pow(std::cos(n.theta), 2); });
  CHECK(std::abs(v - 1.0 / 3.0) <= 1e-14);
  CHECK(q.exactness_degree() == 3);
}

TEST_CASE("weights are positive and sum to one") {
  for (int nt = 1; nt <= 6; ++nt) {
    for (int np = 1; np <= 9; ++np) {
      const SphereQuadrature q(nt, np);
      CHECK(q.size() == static_cast<std::size_t>(nt * np));
      CHECK(std::abs(weight_sum(q) - 1.0) <= 1e-14);
      for (double w : q.weights()) CHECK(w > 0.0);
      for (const SphereNode& n : q.nodes()) {
        CHECK(n.theta >= 0.0);
        CHECK(n.theta <= std::numbers::pi);
        CHECK(n.psi >= 0.0);
        CHECK(n.psi < 2.0 * std::numbers::pi);
      }
    }
  }
}

TEST_CASE("spherical harmonics up to the declared degree integrate to zero") {
  // Real harmonic building blocks r^l-free: cos^a(theta) sin^b(theta) trig(k psi), with
  // degree a + b and |k| <= b, b - k even.
  for (auto [nt, np] : {std::pair{2, 5}, std::pair{3, 8}, std::pair{4, 9}}) {
    const SphereQuadrature q(nt, np);
    const int deg = q.exactness_degree();
    CAPTURE(nt);
    CAPTURE(np);
    for (int l = 1; l <= deg; ++l) {
      for (int k = 0; k <= l; ++k) {
        // x^p y^r z^s monomials of total degree l with p + r = k.
        for (int p = 0; p <= k; ++p) {
          const int r = k - p;
          const int s = l - k;
          auto f = [&](const SphereNode& n) {
            const double x = std::sin(n.theta) * std::sin(n.psi);
            const double y = std::sin(n.theta) * std::cos(n.psi);
            const double z = std::cos(n.theta);
            return std::pow(x, p) * std::pow(y, r) * std::pow(z, s);
          };
          // Exact sphere averages of monomials: zero unless every exponent is even.
          double exact = 0.0;
          if (p % 2 == 0 && r % 2 == 0 && s % 2 == 0) {
            auto dfact = [](int n) {
              double v = 1.0;
              for (int i = n; i > 1; i -= 2) v *= i;
              return v;
            };
            exact = dfact(p - 1) * dfact(r - 1) * dfact(s - 1) / dfact(l + 1);
          }
          CHECK(std::abs(q.integrate(f) - exact) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("exactness degree") {
  CHECK(SphereQuadrature(3, 8).exactness_degree() == 5);
  CHECK(SphereQuadrature(2, 5).exactness_degree() == 3);
  CHECK(SphereQuadrature(1, 1).exactness_degree() == 0);
  CHECK(SphereQuadrature(1, 8).exactness_degree() == 1);
  CHECK(SphereQuadrature(5, 3).exactness_degree() == 2);
  CHECK(default_sphere_quadrature().n_theta() == 3);
  CHECK(default_sphere_quadrature().n_psi() == 8);
}

TEST_CASE("nonpositive counts are rejected") {
  CHECK_THROWS_AS(SphereQuadrature(0, 4), DomainError);
  CHECK_THROWS_AS(build_sphere_quadrature(3, 0), DomainError);
  CHECK_THROWS_AS(build_sphere_quadrature(-1, 2), DomainError);
}

TEST_CASE("node order is deterministic") {
  const SphereQuadrature a(3, 8);
  const SphereQuadrature b(3, 8);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.nodes()[i].theta == b.nodes()[i].theta);
    CHECK(a.nodes()[i].psi == b.nodes()[i].psi);
    CHECK(a.weights()[i] == b.weights()[i]);
  }
}
