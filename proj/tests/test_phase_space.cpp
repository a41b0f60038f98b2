#include <doctest.h>

#include <cmath>
#include <set>

#include "qstar/errors.hpp"
#include "qstar/io.hpp"
#include "qstar/phase_space.hpp"
#include "qstar/reference.hpp"

using namespace qstar;

namespace {

const Complex kI{0.0, 1.0};

Matrix2c mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix2c m;
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("four distinct phase points in row-major order") {
  const auto pts = phase_points();
  std::set<int> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].index() == static_cast<int>(i));
    CHECK(phase_point_at(static_cast<int>(i)) == pts[i]);
    seen.insert(pts[i].index());
  }
  CHECK(seen.size() == 4);
  CHECK(pts[2].label() == "10");
  CHECK_THROWS_AS(phase_point_at(4), DomainError);
}

TEST_CASE("variant parsing") {
  CHECK(parse_variant("A") == Variant::A);
  CHECK(parse_variant("b") == Variant::B);
  CHECK(variant_name(Variant::B) == 'B');
  CHECK_THROWS_AS(parse_variant("C"), DomainError);
}

TEST_CASE("lines_through (0,0)") {
  const auto lines = lines_through({0, 0});
  CHECK(lines[0] == make_line(StriationKind::Rows, 0));
  CHECK(lines[1] == make_line(StriationKind::Columns, 0));
  CHECK(lines[2] == make_line(StriationKind::Diagonals, 0));
}

TEST_CASE("every point lies on exactly one line of each striation") {
  for (const PhasePoint& p : phase_points()) {
    const auto lines = lines_through(p);
    for (const Line& l : lines) CHECK(l.contains(p));
    for (const Striation& s : striations()) {
      const int hits = (s.lines[0].contains(p) ? 1 : 0) + (s.lines[1].contains(p) ? 1 : 0);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("striation geometry") {
  const auto ss = striations();
  CHECK(ss.size() == 3);
  for (const Striation& s : ss) {
    for (const Line& l : s.lines) CHECK(!(l.points[0] == l.points[1]));
    for (const PhasePoint& p : s.lines[0].points) CHECK(!s.lines[1].contains(p));
  }
  for (std::size_t a = 0; a < ss.size(); ++a) {
    for (std::size_t b = 0; b < ss.size(); ++b) {
      if (a == b) continue;
      for (const Line& la : ss[a].lines) {
        for (const Line& lb : ss[b].lines) {
          int common = 0;
          for (const PhasePoint& p : la.points) common += lb.contains(p) ? 1 : 0;
          CHECK(common == 1);
        }
      }
    }
  }
}

TEST_CASE("striation bases are orthonormal and mutually unbiased") {
  const auto ss = striations();
  for (std::size_t a = 0; a < ss.size(); ++a) {
    CHECK(std::abs(ss[a].basis[0].dot(ss[a].basis[1])) < 1e-15);
    for (const auto& v : ss[a].basis) CHECK(std::abs(v.norm() - 1.0) < 1e-15);
    for (std::size_t b = a + 1; b < ss.size(); ++b) {
      for (const auto& e : ss[a].basis) {
        for (const auto& f : ss[b].basis) CHECK(std::abs(std::norm(e.dot(f)) - 0.5) < 1e-12);
      }
    }
  }
}

TEST_CASE("line_state examples") {
  CHECK(max_abs_diff(line_state(make_line(StriationKind::Rows, 0)), mat2(1, 0, 0, 0)) == 0.0);
  CHECK(max_abs_diff(line_state(make_line(StriationKind::Columns, 0)), mat2(0.5, 0.5, 0.5, 0.5)) ==
        0.0);
  CHECK(max_abs_diff(line_state(make_line(StriationKind::Diagonals, 0)),
                     mat2(0.5, -0.5 * kI, 0.5 * kI, 0.5)) == 0.0);
  for (const Striation& s : striations()) {
    for (const Line& l : s.lines) {
      const Matrix2c q = line_state(l);
      CHECK(max_abs_diff(q * q, q) < 1e-15);
      CHECK(std::abs(q.trace() - 1.0) < 1e-15);
    }
  }
}

TEST_CASE("phase_point_operator examples") {
  CHECK(max_abs_diff(phase_point_matrix({0, 0}, Variant::A),
                     mat2(1, (1.0 - kI) / 2.0, (1.0 + kI) / 2.0, 0)) <= 1e-14);
  CHECK(max_abs_diff(phase_point_matrix({1, 1}, Variant::A),
                     mat2(0, (-1.0 - kI) / 2.0, (-1.0 + kI) / 2.0, 1)) <= 1e-14);
  CHECK(max_abs_diff(phase_point_matrix({0, 0}, Variant::B),
                     mat2(1, (1.0 + kI) / 2.0, (1.0 - kI) / 2.0, 0)) <= 1e-14);
  const PhasePointOperator op = phase_point_operator({1, 0}, Variant::B);
  CHECK(op.point == PhasePoint{1, 0});
  CHECK(op.variant == Variant::B);
}

TEST_CASE("B is the transpose of A") {
  for (const PhasePoint& p : phase_points()) {
    CHECK(max_abs_diff(phase_point_matrix(p, Variant::B),
                       Matrix2c(phase_point_matrix(p, Variant::A).transpose())) == 0.0);
  }
}

TEST_CASE("constructed operators reproduce the fixture file and the transcribed table") {
  const auto fixtures = io::load_operator_fixtures(std::string(QSTAR_DATA_DIR) +
                                                   "/phase_point_operators.json");
  REQUIRE(fixtures.size() == 8);
  for (const io::OperatorFixture& f : fixtures) {
    CAPTURE(f.point.label());
    CHECK(max_abs_diff(phase_point_matrix(f.point, f.variant), f.matrix) <= 1e-14);
    CHECK(max_abs_diff(reference::phase_point_matrix(f.point, f.variant), f.matrix) == 0.0);
  }
}

TEST_CASE("operator algebra") {
  for (Variant v : {Variant::A, Variant::B}) {
    Matrix2c sum = Matrix2c::Zero();
    for (const PhasePoint& a : phase_points()) {
      const Matrix2c ma = phase_point_matrix(a, v);
      CHECK(is_hermitian(ma));
      CHECK(std::abs(ma.trace() - 1.0) <= 1e-12);
      sum += ma;
      for (const PhasePoint& b : phase_points()) {
        const double expected = a == b ? 2.0 : 0.0;
        CHECK(std::abs(trace_product(ma, phase_point_matrix(b, v)) - expected) <= 1e-12);
      }
      const Eigen::VectorXd ev = hermitian_eigenvalues(ma);
      CHECK(std::abs(ev(0) - (1.0 - std::sqrt(3.0)) / 2.0) <= 1e-12);
      CHECK(std::abs(ev(1) - (1.0 + std::sqrt(3.0)) / 2.0) <= 1e-12);
    }
    CHECK(max_abs_diff(sum, Matrix2c(2.0 * Matrix2c::Identity())) <= 1e-14);
  }
}
