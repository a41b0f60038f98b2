#include "qstar/phase_space.hpp"

#include <cmath>

namespace qstar {

std::array<PhasePoint, 4> phase_points() {
  return {PhasePoint{0, 0}, PhasePoint{0, 1}, PhasePoint{1, 0}, PhasePoint{1, 1}};
}

PhasePoint phase_point_at(int index) {
  if (index < 0 || index > 3) throw DomainError("phase point index must be in 0..3");
  return PhasePoint{index / 2, index % 2};
}

char variant_name(Variant v) { return v == Variant::A ? 'A' : 'B'; }

Variant parse_variant(const std::string& s) {
  if (s == "A" || s == "a") return Variant::A;
  if (s == "B" || s == "b") return Variant::B;
  throw DomainError("unknown variant '" + s + "' (expected A or B)");
}

std::string striation_name(StriationKind kind) {
  switch (kind) {
    case StriationKind::Rows:
      return "rows";
    case StriationKind::Columns:
      return "columns";
    case StriationKind::Diagonals:
      return "diagonals";
  }
  return "?";
}

Line make_line(StriationKind kind, int index) {
  if (index != 0 && index != 1) throw DomainError("line index must be 0 or 1");
  Line line{kind, index, {}};
  switch (kind) {
    case StriationKind::Rows:
      line.points = {PhasePoint{index, 0}, PhasePoint{index, 1}};
      break;
    case StriationKind::Columns:
      line.points = {PhasePoint{0, index}, PhasePoint{1, index}};
      break;
    case StriationKind::Diagonals:
      // j xor k == index
      line.points = {PhasePoint{0, index}, PhasePoint{1, 1 - index}};
      break;
  }
  return line;
}

std::array<Line, 3> lines_through(const PhasePoint& p) {
  return {make_line(StriationKind::Rows, p.j), make_line(StriationKind::Columns, p.k),
          make_line(StriationKind::Diagonals, p.j ^ p.k)};
}

Eigen::Vector2cd line_vector(const Line& line) {
  const double s = 1.0 / std::sqrt(2.0);
  const double sign = line.index == 0 ? 1.0 : -1.0;
  Eigen::Vector2cd v;
  switch (line.striation) {
    case StriationKind::Rows:
      v << (line.index == 0 ? 1.0 : 0.0), (line.index == 0 ? 0.0 : 1.0);
      break;
    case StriationKind::Columns:
      v << s, sign * s;
      break;
    case StriationKind::Diagonals:
      v << s, Complex(0.0, sign * s);
      break;
  }
  return v;
}

std::array<Striation, 3> striations() {
  std::array<Striation, 3> out;
  const std::array<StriationKind, 3> kinds{StriationKind::Rows, StriationKind::Columns,
                                           StriationKind::Diagonals};
  for (std::size_t s = 0; s < kinds.size(); ++s) {
    out[s].kind = kinds[s];
    for (int i = 0; i < 2; ++i) {
      out[s].lines[i] = make_line(kinds[s], i);
      out[s].basis[i] = line_vector(out[s].lines[i]);
    }
  }
  return out;
}

Matrix2c line_state(const Line& line) {
  // Written out entrywise so the projector entries are exact halves.
  Matrix2c q;
  const double sign = line.index == 0 ? 1.0 : -1.0;
  switch (line.striation) {
    case StriationKind::Rows:
      q.setZero();
      q(line.index, line.index) = 1.0;
      break;
    case StriationKind::Columns:
      q << 0.5, 0.5 * sign, 0.5 * sign, 0.5;
      break;
    case StriationKind::Diagonals:
      q << 0.5, Complex(0.0, -0.5 * sign), Complex(0.0, 0.5 * sign), 0.5;
      break;
  }
  return q;
}

PhasePointOperator phase_point_operator(const PhasePoint& p, Variant variant) {
  if (p.j < 0 || p.j > 1 || p.k < 0 || p.k > 1) throw DomainError("phase point out of range");
  Matrix2c a = -Matrix2c::Identity();
  for (const Line& line : lines_through(p)) a += line_state(line);
  if (variant == Variant::B) a.transposeInPlace();
  return {p, variant, a};
}

Matrix2c phase_point_matrix(const PhasePoint& p, Variant variant) {
  return phase_point_operator(p, variant).matrix;
}

}  // namespace qstar
