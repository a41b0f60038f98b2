#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qstar/linalg.hpp"
#include "qstar/phase_space.hpp"
#include "qstar/quadrature.hpp"

namespace qstar {

/// Coordinate x of a scheme: a discrete label plus, for tomographic schemes,
/// one sphere node per qubit, and the measure weight attached to x.
struct SchemePoint {
  std::vector<int> index;
  std::vector<SphereNode> nodes;
  double weight = 1.0;
};

/// A finite family of (dequantizer Q(x), quantizer D(x)) pairs with weights
/// w(x). Continuous measures enter as quadrature weights, so every integral
/// over x is the ordered sum over points().
///
/// Construction verifies the self-consistency condition
///   sum_{x'} w(x') Tr(Q(x) D(x')) Tr(A Q(x')) = Tr(A Q(x))
/// over a Pauli operator basis and throws SchemeConsistencyError otherwise.
class Scheme {
 public:
  enum class Check { Verify, Skip };

  Scheme(std::string name, std::vector<SchemePoint> points, std::vector<ComplexMatrix> dequantizers,
         std::vector<ComplexMatrix> quantizers, double tolerance, Check check = Check::Verify);

  const std::string& name() const { return name_; }
  Eigen::Index dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  double tolerance() const { return tolerance_; }

  const SchemePoint& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return points_[i].weight; }
  const ComplexMatrix& dequantizer(std::size_t i) const { return dequantizers_[i]; }
  const ComplexMatrix& quantizer(std::size_t i) const { return quantizers_[i]; }

  /// Worst residual of the self-consistency condition over the Pauli basis.
  double consistency_residual() const;

 private:
  std::string name_;
  Eigen::Index dimension_ = 0;
  double tolerance_;
  std::vector<SchemePoint> points_;
  std::vector<ComplexMatrix> dequantizers_;
  std::vector<ComplexMatrix> quantizers_;
};

using SchemePtr = std::shared_ptr<const Scheme>;

/// {I, sigma_x, sigma_y, sigma_z}^{(x) n} for dimension 2^n (n = 1, 2).
std::vector<ComplexMatrix> pauli_operator_basis(Eigen::Index dimension);

/// Four-point scheme with dequantizer A_{jk}/2 and quantizer A_{jk}, unit weights.
SchemePtr wigner_scheme(Variant variant);

/// One-qubit tomographic scheme over {+1/2, -1/2} x quadrature nodes.
/// Throws SchemeConsistencyError when the rule is not exact to degree 2.
SchemePtr tomographic_scheme(const SphereQuadrature& q);

/// Two-qubit tomographic scheme with tensor-product dequantizers/quantizers.
SchemePtr two_qubit_tomographic_scheme(const SphereQuadrature& q);

/// Values of an operator on a scheme: Tr(A Q(x)) (symbol) or Tr(A D(x)) (dual).
class Symbol {
 public:
  Symbol(SchemePtr scheme, Eigen::VectorXcd values, bool dual);

  const SchemePtr& scheme() const { return scheme_; }
  const Eigen::VectorXcd& values() const { return values_; }
  bool dual() const { return dual_; }
  Complex operator[](std::size_t i) const { return values_(static_cast<Eigen::Index>(i)); }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

 private:
  SchemePtr scheme_;
  Eigen::VectorXcd values_;
  bool dual_;
};

Symbol symbol(const ComplexMatrix& op, const SchemePtr& scheme);
Symbol dual_symbol(const ComplexMatrix& op, const SchemePtr& scheme);

/// sum_x w(x) f(x) D(x) for a symbol, sum_x w(x) f(x) Q(x) for a dual symbol.
ComplexMatrix reconstruct(const Symbol& f);

/// K(y, x) = Tr(Q_to(y) D_from(x)), dense with rows y and columns x.
class IntertwiningKernel {
 public:
  IntertwiningKernel(SchemePtr from, SchemePtr to, Eigen::MatrixXcd values);

  const SchemePtr& from() const { return from_; }
  const SchemePtr& to() const { return to_; }
  const Eigen::MatrixXcd& values() const { return values_; }
  Complex operator()(std::size_t y, std::size_t x) const {
    return values_(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x));
  }

  /// F(y) = sum_x w(x) K(y, x) f(x).
  Symbol apply(const Symbol& f) const;

 private:
  SchemePtr from_;
  SchemePtr to_;
  Eigen::MatrixXcd values_;
};

IntertwiningKernel intertwining_kernel(const SchemePtr& from, const SchemePtr& to);

/// K(x', x'', x) = Tr(D(x') D(x'') Q(x)).
Complex star_kernel(const Scheme& s, std::size_t x1, std::size_t x2, std::size_t x);

/// (fA * fB)(x) = sum_{x', x''} w(x') w(x'') fA(x') fB(x'') K(x', x'', x).
Symbol star_multiply(const Symbol& fa, const Symbol& fb);

/// <A> = sum_x w(x) w_rho(x) f_A^d(x).
double mean_value(const DensityMatrix& rho, const ComplexMatrix& observable,
                  const SchemePtr& scheme);

}  // namespace qstar
