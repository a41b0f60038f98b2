#include "qstar/linalg.hpp"

#include <cmath>
#include <sstream>

namespace qstar {

namespace {

const Complex kI{0.0, 1.0};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Matrix2c pauli_x() {
  Matrix2c m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Matrix2c pauli_y() {
  Matrix2c m;
  m << 0.0, -kI, kI, 0.0;
  return m;
}

Matrix2c pauli_z() {
  Matrix2c m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("hermitian_eigenvalues: matrix is not square");
  if (m.rows() == 2) {
    // Hermitian part only; the caller has already bounded the defect.
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    Eigen::VectorXd ev(2);
    ev << mean - radius, mean + radius;
    return ev;
  }
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix2c partial_trace_second(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw ShapeError("partial_trace_second: expected 4x4");
  Matrix2c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    }
  }
  return out;
}

Matrix2c partial_trace_first(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw ShapeError("partial_trace_first: expected 4x4");
  Matrix2c out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = m(i, j) + m(2 + i, 2 + j);
    }
  }
  return out;
}

double DensityMatrix::purity() const { return trace_product(matrix_, matrix_).real(); }

DensityMatrix validate_density(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
    throw ShapeError("density matrix must be 2x2 or 4x4, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
  if (!m.allFinite()) throw DomainError("density matrix has non-finite entries");

  const double defect = hermiticity_defect(m);
  if (defect > kEqualityTol) {
    throw HermiticityError("matrix is not Hermitian (defect " + fmt(defect) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kEqualityTol) {
    throw TraceError("trace is " + fmt(tr.real()) + " instead of 1");
  }
  const double lowest = hermitian_eigenvalues(m).minCoeff();
  if (lowest < -kPsdTol) {
    throw PositivityError("matrix has negative eigenvalue " + fmt(lowest));
  }
  return DensityMatrix(m, std::nullopt);
}

DensityMatrix density_from_bloch(double x, double y, double z) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw DomainError("Bloch coordinates must be finite");
  }
  const BlochVector r{x, y, z};
  if (r.norm() > 1.0 + kEqualityTol) {
    throw DomainError("Bloch vector norm " + fmt(r.norm()) + " exceeds 1");
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (1.0 + z);
  m(0, 1) = 0.5 * Complex(x, y);
  m(1, 0) = 0.5 * Complex(x, -y);
  m(1, 1) = 0.5 * (1.0 - z);
  return DensityMatrix(std::move(m), r);
}

DensityMatrix density_from_polar(double a, double c, double xi) {
  if (!std::isfinite(a) || !std::isfinite(c) || !std::isfinite(xi)) {
    throw DomainError("polar parameters must be finite");
  }
  if (a < 0.0 || a > 1.0) throw DomainError("polar parameter a must lie in [0, 1]");
  if (c < 0.0) throw DomainError("polar parameter c must be non-negative");
  if (c * c > a * (1.0 - a) + kEqualityTol) {
    throw DomainError("c^2 = " + fmt(c * c) + " exceeds a(1-a) = " + fmt(a * (1.0 - a)) +
                      "; state is not positive semidefinite");
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = std::polar(c, xi);
  m(1, 0) = std::polar(c, -xi);
  m(1, 1) = 1.0 - a;
  return validate_density(m);
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw ShapeError("bloch_from_density: expected a 2x2 state");
  if (rho.bloch()) return *rho.bloch();
  const Complex off = rho(0, 1);
  return {2.0 * off.real(), 2.0 * off.imag(), (rho(0, 0) - rho(1, 1)).real()};
}

}  // namespace qstar
