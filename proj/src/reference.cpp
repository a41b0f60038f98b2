#include "qstar/reference.hpp"

#include <cmath>

namespace qstar::reference {

namespace {

const Complex kI{0.0, 1.0};

// Which azimuthal combination multiplies sin(theta).
enum class Trig { Plus, Minus };  // cos psi + sin psi, cos psi - sin psi

struct KernelRow {
  Variant variant;
  int j, k;
  SpinProjection m;
  int cos_sign;
  int sin_sign;
  Trig trig;
};

using enum SpinProjection;

// Ker entries in print order. The dual kernels share the same sign table with
// 3 cos / 3 sin and an overall /4 in place of /2.
constexpr std::array<KernelRow, 16> kKernelRows{{
    {Variant::A, 0, 0, Up, +1, +1, Trig::Plus},
    {Variant::A, 0, 0, Down, -1, -1, Trig::Plus},
    {Variant::A, 0, 1, Up, +1, -1, Trig::Plus},
    {Variant::A, 0, 1, Down, -1, +1, Trig::Plus},
    {Variant::A, 1, 0, Up, -1, +1, Trig::Minus},
    {Variant::A, 1, 0, Down, +1, -1, Trig::Minus},
    {Variant::A, 1, 1, Up, -1, -1, Trig::Minus},
    {Variant::A, 1, 1, Down, +1, +1, Trig::Minus},
    {Variant::B, 0, 0, Up, +1, +1, Trig::Minus},
    {Variant::B, 0, 0, Down, -1, -1, Trig::Minus},
    {Variant::B, 0, 1, Up, +1, -1, Trig::Minus},
    {Variant::B, 0, 1, Down, -1, +1, Trig::Minus},
    {Variant::B, 1, 0, Up, -1, +1, Trig::Plus},
    {Variant::B, 1, 0, Down, +1, -1, Trig::Plus},
    {Variant::B, 1, 1, Up, -1, -1, Trig::Plus},
    {Variant::B, 1, 1, Down, +1, +1, Trig::Plus},
}};

const KernelRow& find_row(Variant variant, SpinProjection m, const PhasePoint& p) {
  for (const KernelRow& row : kKernelRows) {
    if (row.variant == variant && row.j == p.j && row.k == p.k && row.m == m) return row;
  }
  throw DomainError("no reference kernel row for the requested arguments");
}

}  // namespace

Matrix2c phase_point_matrix(const PhasePoint& p, Variant variant) {
  Matrix2c a;
  const int idx = p.index();
  if (idx == 0) {
    a << 1.0, (1.0 - kI) / 2.0, (1.0 + kI) / 2.0, 0.0;
  } else if (idx == 1) {
    a << 1.0, (-1.0 + kI) / 2.0, (-1.0 - kI) / 2.0, 0.0;
  } else if (idx == 2) {
    a << 0.0, (1.0 + kI) / 2.0, (1.0 - kI) / 2.0, 1.0;
  } else if (idx == 3) {
    a << 0.0, (-1.0 - kI) / 2.0, (-1.0 + kI) / 2.0, 1.0;
  } else {
    throw DomainError("phase point out of range");
  }
  if (variant == Variant::A) return a;
  // B_{jk} entries of the reference table.
  Matrix2c b;
  if (idx == 0) {
    b << 1.0, (1.0 + kI) / 2.0, (1.0 - kI) / 2.0, 0.0;
  } else if (idx == 1) {
    b << 1.0, (-1.0 - kI) / 2.0, (-1.0 + kI) / 2.0, 0.0;
  } else if (idx == 2) {
    b << 0.0, (1.0 - kI) / 2.0, (1.0 + kI) / 2.0, 1.0;
  } else {
    b << 0.0, (-1.0 + kI) / 2.0, (-1.0 - kI) / 2.0, 1.0;
  }
  return b;
}

bool kernel_entry_corrected(Variant variant, bool dual, SpinProjection m, const PhasePoint& p) {
  return variant == Variant::A && !dual && m == SpinProjection::Down && p.j == 1 && p.k == 0;
}

double kernel(Variant variant, bool dual, SpinProjection m, const Direction& d,
              const PhasePoint& p) {
  const KernelRow& row = find_row(variant, m, p);
  const double trig = row.trig == Trig::Plus ? std::cos(d.psi) + std::sin(d.psi)
                                             : std::cos(d.psi) - std::sin(d.psi);
  const double scale = dual ? 3.0 : 1.0;
  const double numerator =
      1.0 + scale * (row.cos_sign * std::cos(d.theta) + row.sin_sign * std::sin(d.theta) * trig);
  return dual ? numerator / 4.0 : numerator / 2.0;
}

double kernel_uncorrected(Variant variant, bool dual, SpinProjection m, const Direction& d,
                         const PhasePoint& p) {
  const double v = kernel(variant, dual, m, d, p);
  return kernel_entry_corrected(variant, dual, m, p) ? 2.0 * v : v;
}

}  // namespace qstar::reference
