#include "qstar/star_product.hpp"

#include <cmath>
#include <sstream>

#include "qstar/spin_tomography.hpp"

namespace qstar {

namespace {

// Schemes whose measure is a finite exact sum.
constexpr double kExactSchemeTol = 1e-12;
// Schemes whose measure is a quadrature rule.
constexpr double kQuadratureSchemeTol = 1e-10;

// Tr(A B C) without temporaries.
Complex trace_triple(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  const Eigen::Index n = a.rows();
  Complex acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      Complex ab{0.0, 0.0};
      for (Eigen::Index l = 0; l < n; ++l) ab += a(i, l) * b(l, k);
      acc += ab * c(k, i);
    }
  }
  return acc;
}

void require_same_dimension(const ComplexMatrix& op, const Scheme& s, const char* what) {
  if (op.rows() != s.dimension() || op.cols() != s.dimension()) {
    throw ShapeError(std::string(what) + ": operator is " + std::to_string(op.rows()) + "x" +
                     std::to_string(op.cols()) + " but scheme '" + s.name() + "' acts on dimension " +
                     std::to_string(s.dimension()));
  }
}

}  // namespace

Scheme::Scheme(std::string name, std::vector<SchemePoint> points,
               std::vector<ComplexMatrix> dequantizers, std::vector<ComplexMatrix> quantizers,
               double tolerance, Check check)
    : name_(std::move(name)),
      tolerance_(tolerance),
      points_(std::move(points)),
      dequantizers_(std::move(dequantizers)),
      quantizers_(std::move(quantizers)) {
  if (points_.empty()) throw ShapeError("scheme '" + name_ + "' has no points");
  if (dequantizers_.size() != points_.size() || quantizers_.size() != points_.size()) {
    throw ShapeError("scheme '" + name_ + "': operator count does not match point count");
  }
  dimension_ = dequantizers_.front().rows();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& q = dequantizers_[i];
    const auto& d = quantizers_[i];
    if (q.rows() != dimension_ || q.cols() != dimension_ || d.rows() != dimension_ ||
        d.cols() != dimension_) {
      throw ShapeError("scheme '" + name_ + "': operators of mixed dimension");
    }
    if (!(points_[i].weight > 0.0)) {
      throw DomainError("scheme '" + name_ + "': weights must be positive");
    }
  }
  if (check == Check::Verify) {
    const double residual = consistency_residual();
    if (!(residual <= tolerance_)) {
      std::ostringstream os;
      os.precision(3);
      os << "scheme '" << name_ << "' violates the quantizer/dequantizer consistency condition "
         << "(residual " << residual << " > " << tolerance_ << ")";
      throw SchemeConsistencyError(os.str());
    }
  }
}

double Scheme::consistency_residual() const {
  const std::vector<ComplexMatrix> basis = pauli_operator_basis(dimension_);
  const auto n = static_cast<Eigen::Index>(points_.size());

  // overlap(x, x') = w(x') Tr(Q(x) D(x'))
  Eigen::MatrixXcd overlap(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index xp = 0; xp < n; ++xp) {
      overlap(x, xp) = points_[xp].weight * trace_product(dequantizers_[x], quantizers_[xp]);
    }
  }
  double worst = 0.0;
  for (const ComplexMatrix& a : basis) {
    Eigen::VectorXcd sym(n);
    for (Eigen::Index x = 0; x < n; ++x) sym(x) = trace_product(a, dequantizers_[x]);
    const Eigen::VectorXcd lhs = overlap * sym;
    worst = std::max(worst, (lhs - sym).cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<ComplexMatrix> pauli_operator_basis(Eigen::Index dimension) {
  const std::vector<ComplexMatrix> single{Matrix2c::Identity(), pauli_x(), pauli_y(), pauli_z()};
  if (dimension == 2) return single;
  if (dimension == 4) {
    std::vector<ComplexMatrix> out;
    out.reserve(16);
    for (const auto& a : single) {
      for (const auto& b : single) out.push_back(tensor_product(a, b));
    }
    return out;
  }
  throw ShapeError("pauli_operator_basis: unsupported dimension " + std::to_string(dimension));
}

SchemePtr wigner_scheme(Variant variant) {
  std::vector<SchemePoint> points;
  std::vector<ComplexMatrix> deq;
  std::vector<ComplexMatrix> quant;
  for (const PhasePoint& p : phase_points()) {
    const Matrix2c a = phase_point_matrix(p, variant);
    points.push_back({{p.j, p.k}, {}, 1.0});
    deq.emplace_back(0.5 * a);
    quant.emplace_back(a);
  }
  return std::make_shared<const Scheme>(std::string("wigner-") + variant_name(variant),
                                        std::move(points), std::move(deq), std::move(quant),
                                        kExactSchemeTol);
}

SchemePtr tomographic_scheme(const SphereQuadrature& q) {
  if (q.exactness_degree() < 2) {
    throw SchemeConsistencyError(
        "tomographic scheme needs a sphere rule exact to degree 2, got degree " +
        std::to_string(q.exactness_degree()));
  }
  std::vector<SchemePoint> points;
  std::vector<ComplexMatrix> deq;
  std::vector<ComplexMatrix> quant;
  for (SpinProjection m : kSpinProjections) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      const SphereNode& node = q.nodes()[i];
      const Direction d(node.theta, node.psi);
      points.push_back({{m == SpinProjection::Up ? 0 : 1}, {node}, q.weights()[i]});
      deq.emplace_back(dequantizer(m, d));
      quant.emplace_back(quantizer(m, d));
    }
  }
  return std::make_shared<const Scheme>(
      "tomographic(" + std::to_string(q.n_theta()) + "," + std::to_string(q.n_psi()) + ")",
      std::move(points), std::move(deq), std::move(quant), kQuadratureSchemeTol);
}

SchemePtr two_qubit_tomographic_scheme(const SphereQuadrature& q) {
  if (q.exactness_degree() < 2) {
    throw SchemeConsistencyError(
        "two-qubit tomographic scheme needs a sphere rule exact to degree 2, got degree " +
        std::to_string(q.exactness_degree()));
  }
  std::vector<SchemePoint> points;
  std::vector<ComplexMatrix> deq;
  std::vector<ComplexMatrix> quant;
  for (SpinProjection m1 : kSpinProjections) {
    for (SpinProjection m2 : kSpinProjections) {
      for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t k = 0; k < q.size(); ++k) {
          const SphereNode& n1 = q.nodes()[i];
          const SphereNode& n2 = q.nodes()[k];
          TwoQubitOperators ops = two_qubit_scheme_operators(
              m1, m2, Direction(n1.theta, n1.psi), Direction(n2.theta, n2.psi));
          points.push_back({{m1 == SpinProjection::Up ? 0 : 1, m2 == SpinProjection::Up ? 0 : 1},
                            {n1, n2},
                            q.weights()[i] * q.weights()[k]});
          deq.push_back(std::move(ops.dequantizer));
          quant.push_back(std::move(ops.quantizer));
        }
      }
    }
  }
  return std::make_shared<const Scheme>(
      "two-qubit-tomographic(" + std::to_string(q.n_theta()) + "," + std::to_string(q.n_psi()) + ")",
      std::move(points), std::move(deq), std::move(quant), kQuadratureSchemeTol);
}

Symbol::Symbol(SchemePtr scheme, Eigen::VectorXcd values, bool dual)
    : scheme_(std::move(scheme)), values_(std::move(values)), dual_(dual) {
  if (!scheme_) throw ShapeError("symbol without a scheme");
  if (static_cast<std::size_t>(values_.size()) != scheme_->size()) {
    throw ShapeError("symbol has " + std::to_string(values_.size()) + " values but scheme '" +
                     scheme_->name() + "' has " + std::to_string(scheme_->size()) + " points");
  }
}

Symbol symbol(const ComplexMatrix& op, const SchemePtr& scheme) {
  require_same_dimension(op, *scheme, "symbol");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(scheme->size()));
  for (std::size_t i = 0; i < scheme->size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = trace_product(op, scheme->dequantizer(i));
  }
  return Symbol(scheme, std::move(v), false);
}

Symbol dual_symbol(const ComplexMatrix& op, const SchemePtr& scheme) {
  require_same_dimension(op, *scheme, "dual_symbol");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(scheme->size()));
  for (std::size_t i = 0; i < scheme->size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = trace_product(op, scheme->quantizer(i));
  }
  return Symbol(scheme, std::move(v), true);
}

ComplexMatrix reconstruct(const Symbol& f) {
  const Scheme& s = *f.scheme();
  ComplexMatrix out = ComplexMatrix::Zero(s.dimension(), s.dimension());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const ComplexMatrix& op = f.dual() ? s.dequantizer(i) : s.quantizer(i);
    out += (s.weight(i) * f[i]) * op;
  }
  return out;
}

IntertwiningKernel::IntertwiningKernel(SchemePtr from, SchemePtr to, Eigen::MatrixXcd values)
    : from_(std::move(from)), to_(std::move(to)), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.rows()) != to_->size() ||
      static_cast<std::size_t>(values_.cols()) != from_->size()) {
    throw ShapeError("intertwining kernel table has the wrong shape");
  }
}

Symbol IntertwiningKernel::apply(const Symbol& f) const {
  if (f.scheme() != from_) {
    throw ShapeError("intertwining kernel applied to a symbol of scheme '" + f.scheme()->name() +
                     "', expected '" + from_->name() + "'");
  }
  if (f.dual()) throw DomainError("intertwining kernel expects a symbol, not a dual symbol");
  Eigen::VectorXcd weighted(f.values().size());
  for (std::size_t x = 0; x < from_->size(); ++x) {
    weighted(static_cast<Eigen::Index>(x)) = from_->weight(x) * f[x];
  }
  return Symbol(to_, values_ * weighted, false);
}

IntertwiningKernel intertwining_kernel(const SchemePtr& from, const SchemePtr& to) {
  if (from->dimension() != to->dimension()) {
    throw ShapeError("intertwining kernel between schemes of different dimension");
  }
  Eigen::MatrixXcd k(static_cast<Eigen::Index>(to->size()), static_cast<Eigen::Index>(from->size()));
  for (std::size_t y = 0; y < to->size(); ++y) {
    for (std::size_t x = 0; x < from->size(); ++x) {
      k(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) =
          trace_product(to->dequantizer(y), from->quantizer(x));
    }
  }
  return IntertwiningKernel(from, to, std::move(k));
}

Complex star_kernel(const Scheme& s, std::size_t x1, std::size_t x2, std::size_t x) {
  if (x1 >= s.size() || x2 >= s.size() || x >= s.size()) {
    throw DomainError("star_kernel: point index out of range");
  }
  return trace_triple(s.quantizer(x1), s.quantizer(x2), s.dequantizer(x));
}

Symbol star_multiply(const Symbol& fa, const Symbol& fb) {
  if (fa.scheme() != fb.scheme()) throw DomainError("star_multiply: symbols of different schemes");
  if (fa.dual() || fb.dual()) throw DomainError("star_multiply: expects symbols, not dual symbols");
  const Scheme& s = *fa.scheme();
  const std::size_t n = s.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) {
    Complex acc{0.0, 0.0};
    for (std::size_t x1 = 0; x1 < n; ++x1) {
      const Complex a = s.weight(x1) * fa[x1];
      if (a == Complex{0.0, 0.0}) continue;
      Complex inner{0.0, 0.0};
      for (std::size_t x2 = 0; x2 < n; ++x2) {
        inner += s.weight(x2) * fb[x2] * star_kernel(s, x1, x2, x);
      }
      acc += a * inner;
    }
    out(static_cast<Eigen::Index>(x)) = acc;
  }
  return Symbol(fa.scheme(), std::move(out), false);
}

double mean_value(const DensityMatrix& rho, const ComplexMatrix& observable,
                  const SchemePtr& scheme) {
  if (!is_hermitian(observable)) throw DomainError("mean_value: observable is not Hermitian");
  const Symbol w = symbol(rho.matrix(), scheme);
  const Symbol f = dual_symbol(observable, scheme);
  Complex acc{0.0, 0.0};
  for (std::size_t x = 0; x < scheme->size(); ++x) acc += scheme->weight(x) * w[x] * f[x];
  return acc.real();
}

}  // namespace qstar
