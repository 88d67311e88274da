#include "renyilab/states.hpp"

#include <cmath>
#include <sstream>

namespace renyilab {

StateFunctional::StateFunctional(HermitianMatrix density, double support_tol)
    : density_(std::move(density)) {
  // psd_spectrum throws NotPSD on significantly negative eigenvalues.
  (void)psd_spectrum(density_, support_tol);
  normalized_ = std::abs(trace() - 1.0) <= kTolerances.normalization;
}

StateFunctional StateFunctional::from_matrix(const ComplexMatrix& density) {
  return StateFunctional(HermitianMatrix(density));
}

StateFunctional StateFunctional::maximally_mixed(Index n) {
  return StateFunctional(HermitianMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n)));
}

StateFunctional StateFunctional::pure(const ComplexVector& psi) {
  const ComplexVector unit = psi / psi.norm();
  return StateFunctional(HermitianMatrix(unit * unit.adjoint()));
}

double StateFunctional::trace() const { return density_.matrix().trace().real(); }

StateFunctional StateFunctional::normalize() const {
  const double t = trace();
  if (!(t > 0.0)) throw Error(ErrorCode::NotPSD, "cannot normalize a functional with zero trace");
  return StateFunctional(HermitianMatrix(density_.matrix() / t));
}

VectorState::VectorState(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.cols() < 1) throw Error(ErrorCode::ShapeMismatch, "empty reshape matrix");
}

VectorState VectorState::from_flat(const ComplexVector& v, Index left_dim, Index right_dim) {
  if (v.size() != left_dim * right_dim) {
    throw Error(ErrorCode::ShapeMismatch, "flat vector length does not match the bipartition");
  }
  ComplexMatrix m(left_dim, right_dim);
  for (Index i = 0; i < left_dim; ++i) {
    for (Index j = 0; j < right_dim; ++j) m(i, j) = v(i * right_dim + j);
  }
  return VectorState(std::move(m));
}

ComplexVector VectorState::flat() const {
  ComplexVector v(m_.size());
  for (Index i = 0; i < m_.rows(); ++i) {
    for (Index j = 0; j < m_.cols(); ++j) v(i * m_.cols() + j) = m_(i, j);
  }
  return v;
}

cplx inner(const VectorState& a, const VectorState& b) {
  if (a.left_dim() != b.left_dim() || a.right_dim() != b.right_dim()) {
    throw Error(ErrorCode::ShapeMismatch, "inner product of vectors in different spaces");
  }
  return (a.reshape_matrix().adjoint() * b.reshape_matrix()).trace();
}

ComplexMatrix SpatialDerivative::power(cplx z) const { return mat_power(spectrum, z); }

VectorState SpatialDerivative::apply_power(cplx z, const VectorState& xi) const {
  if (xi.left_dim() != left_dim() || xi.right_dim() != right_dim()) {
    throw Error(ErrorCode::ShapeMismatch, "vector does not live on the spatial derivative's space");
  }
  return VectorState::from_flat(power(z) * xi.flat(), left_dim(), right_dim());
}

VectorState purify(const StateFunctional& rho) {
  return VectorState(real_power(rho.density(), 0.5).matrix());
}

StateFunctional functional_of_vector(const VectorState& xi) {
  const ComplexMatrix& m = xi.reshape_matrix();
  return StateFunctional(HermitianMatrix(m * m.adjoint()));
}

StateFunctional commutant_functional(const VectorState& xi) {
  const ComplexMatrix& m = xi.reshape_matrix();
  return StateFunctional(HermitianMatrix((m.adjoint() * m).transpose()));
}

bool supported_on(const StateFunctional& rho, const StateFunctional& sigma, double support_tol) {
  if (rho.dim() != sigma.dim()) throw Error(ErrorCode::ShapeMismatch, "functionals on different algebras");
  const ComplexMatrix p = support_projector(sigma.density(), support_tol).matrix();
  const ComplexMatrix& d = rho.matrix();
  const double scale = std::max(1.0, max_abs(d));
  return max_abs(p * d * p - d) <= 100.0 * support_tol * scale;
}

ExtReal dominance_constant(const StateFunctional& rho, const StateFunctional& sigma, double support_tol) {
  if (!supported_on(rho, sigma, support_tol)) return ExtReal::infinity();
  const ComplexMatrix s = real_power(sigma.density(), -0.5, support_tol).matrix();
  const HermitianMatrix sandwich(s * rho.matrix() * s, kInfinity);
  return eig_hermitian(sandwich).eigenvalues.maxCoeff();
}

SpatialDerivative spatial_derivative(const VectorState& omega, const StateFunctional& sigma) {
  if (omega.left_dim() != sigma.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "ω⃗ and σ live on different algebras");
  }
  StateFunctional omega_c = commutant_functional(omega);
  HermitianMatrix base(kron(real_power(sigma.density(), -1.0).matrix(), omega_c.matrix()), kInfinity);
  SpectralDecomposition spectrum = eig_hermitian(base);
  return SpatialDerivative{std::move(base), std::move(omega_c), sigma, std::move(spectrum)};
}

SpatialDerivative spatial_derivative(const StateFunctional& omega, const StateFunctional& sigma) {
  return spatial_derivative(purify(omega), sigma);
}

ComplexMatrix relation_operator(const VectorState& xi, const StateFunctional& sigma) {
  if (xi.left_dim() != sigma.dim()) throw Error(ErrorCode::ShapeMismatch, "ξ and σ live on different algebras");
  const ComplexMatrix b = real_power(sigma.density(), -0.5).matrix() * xi.reshape_matrix();
  return b.transpose();
}

ComplexMatrix relation_operator_full(const VectorState& xi, const StateFunctional& sigma) {
  return kron(ComplexMatrix::Identity(sigma.dim(), sigma.dim()), relation_operator(xi, sigma));
}

VectorState apply_left(const ComplexMatrix& x, const VectorState& xi) {
  if (x.cols() != xi.left_dim()) throw Error(ErrorCode::ShapeMismatch, "operator does not act on the left leg");
  return VectorState(x * xi.reshape_matrix());
}

}  // namespace renyilab
