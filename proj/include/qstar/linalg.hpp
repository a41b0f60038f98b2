#pragma once

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <optional>
#include <string>

#include "qstar/errors.hpp"

namespace qstar {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

/// Absolute tolerance used by the equality checks on small matrices.
inline constexpr double kEqualityTol = 1e-12;
/// Smallest eigenvalue accepted as "non-negative".
inline constexpr double kPsdTol = 1e-10;

/// Tr(A B) = sum_{i,k} A(i,k) B(k,i), without forming the product.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar trace_product(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows() || b.cols() != a.rows()) {
    throw ShapeError("trace_product: incompatible shapes " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
  typename DerivedA::Scalar acc{0};
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      acc += a(i, k) * b(k, i);
    }
  }
  return acc;
}

/// Kronecker product of two square matrices.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> tensor_product(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw ShapeError("tensor_product: inputs must be square");
  }
  const Eigen::Index n = a.rows();
  const Eigen::Index m = b.rows();
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n * m, n * m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out.block(i * m, j * m, m, m) = a(i, j) * b;
    }
  }
  return out;
}

/// max |M(i,j) - conj(M(j,i))|.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kEqualityTol) {
  return hermiticity_defect(m) <= tol;
}

template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

Matrix2c pauli_x();
Matrix2c pauli_y();
Matrix2c pauli_z();

/// Eigenvalues of a Hermitian matrix in ascending order (closed form for 2x2).
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);

/// Reduced states of a 4x4 two-qubit operator.
Matrix2c partial_trace_second(const ComplexMatrix& m);
Matrix2c partial_trace_first(const ComplexMatrix& m);

/// Bloch coordinates in the convention rho = 1/2 [[1+z, x+iy], [x-iy, 1-z]].
///
/// The off-diagonal (0,1) entry carries x + iy, which is the opposite sign of y
/// compared to the usual rho = (I + r.sigma)/2 convention.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// A 2x2 or 4x4 matrix that passed validate_density.
///
/// Instances only come out of the validating factories below, so holding one
/// is proof the invariants were checked.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  /// Set when the state was built from Bloch coordinates.
  const std::optional<BlochVector>& bloch() const { return bloch_; }

  Complex operator()(Eigen::Index i, Eigen::Index j) const { return matrix_(i, j); }

  double purity() const;

 private:
  DensityMatrix(ComplexMatrix m, std::optional<BlochVector> b)
      : matrix_(std::move(m)), bloch_(b) {}

  friend DensityMatrix validate_density(const ComplexMatrix& m);
  friend DensityMatrix density_from_bloch(double x, double y, double z);

  ComplexMatrix matrix_;
  std::optional<BlochVector> bloch_;
};

/// Checks all three density-matrix conditions and throws the matching
/// HermiticityError / TraceError / PositivityError on the first failure.
DensityMatrix validate_density(const ComplexMatrix& m);

DensityMatrix density_from_bloch(double x, double y, double z);
inline DensityMatrix density_from_bloch(const BlochVector& r) {
  return density_from_bloch(r.x, r.y, r.z);
}

/// rho = [[a, c e^{i xi}], [c e^{-i xi}, 1 - a]].
DensityMatrix density_from_polar(double a, double c, double xi);

BlochVector bloch_from_density(const DensityMatrix& rho);

}  // namespace qstar
