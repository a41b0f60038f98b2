#pragma once

#include <array>
#include <string>

#include "qstar/linalg.hpp"

namespace qstar {

/// Point alpha = (j, k) of the 2x2 discrete phase space. j labels rows, k columns.
struct PhasePoint {
  int j = 0;
  int k = 0;

  /// Row-major position 2j + k, used to index four-value tables.
  int index() const { return 2 * j + k; }
  std::string label() const { return std::to_string(j) + std::to_string(k); }

  friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

/// All four points in row-major order (0,0), (0,1), (1,0), (1,1).
std::array<PhasePoint, 4> phase_points();
PhasePoint phase_point_at(int index);

/// Which family of phase-point operators: A, or B = transpose of A.
enum class Variant { A, B };

char variant_name(Variant v);
Variant parse_variant(const std::string& s);

enum class StriationKind {
  Rows,       // j fixed, computational basis
  Columns,    // k fixed, X basis
  Diagonals,  // j xor k fixed, Y basis
};

std::string striation_name(StriationKind kind);

struct Line {
  StriationKind striation = StriationKind::Rows;
  int index = 0;
  std::array<PhasePoint, 2> points{};

  bool contains(const PhasePoint& p) const { return points[0] == p || points[1] == p; }
  friend bool operator==(const Line&, const Line&) = default;
};

struct Striation {
  StriationKind kind = StriationKind::Rows;
  std::array<Line, 2> lines{};
  /// basis[i] is the state attached to lines[i].
  std::array<Eigen::Vector2cd, 2> basis{};
};

Line make_line(StriationKind kind, int index);

/// The three lines through p, one per striation (rows, columns, diagonals).
std::array<Line, 3> lines_through(const PhasePoint& p);

std::array<Striation, 3> striations();

/// Basis vector attached to a line: rows -> |j>, columns -> |+>/|->,
/// diagonals -> |+i>/|-i> with |+-i> = (|0> +- i|1>)/sqrt(2).
Eigen::Vector2cd line_vector(const Line& line);

/// Rank-1 projector onto line_vector(line).
Matrix2c line_state(const Line& line);

struct PhasePointOperator {
  PhasePoint point;
  Variant variant = Variant::A;
  Matrix2c matrix;
};

/// A_alpha = sum over lines through alpha of the line projectors, minus I.
/// Variant B is the transpose of variant A.
PhasePointOperator phase_point_operator(const PhasePoint& p, Variant variant);

/// Shorthand for phase_point_operator(p, variant).matrix.
Matrix2c phase_point_matrix(const PhasePoint& p, Variant variant);

}  // namespace qstar
