#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "renyilab/config.hpp"
#include "renyilab/errors.hpp"

namespace renyilab {

using cplx = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Square complex matrix that is Hermitian within `Tolerances::hermiticity`.
///
/// The stored entries are the exact Hermitian part (A + A†)/2 of the input,
/// so downstream spectral code never sees the residual skew part.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& a, double tol = kTolerances.hermiticity);

  static HermitianMatrix identity(Index n);
  static HermitianMatrix diagonal(const RealVector& d);

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  cplx operator()(Index i, Index j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, const HermitianMatrix& a);

struct SpectralDecomposition {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // columns

  ComplexMatrix reconstruct() const;
  double operator_norm() const;
};

SpectralDecomposition eig_hermitian(const HermitianMatrix& a);

/// Pseudo-power Σ λᵢ^z Pᵢ over eigenvalues above `support_tol·‖A‖_∞`.
/// Throws NotPSD when an eigenvalue is below −support_tol·‖A‖_∞.
ComplexMatrix mat_power(const HermitianMatrix& a, cplx z, double support_tol = kTolerances.support);
ComplexMatrix mat_power(const SpectralDecomposition& eig, cplx z,
                        double support_tol = kTolerances.support);

/// Real pseudo-power, returned as a Hermitian matrix.
HermitianMatrix real_power(const HermitianMatrix& a, double exponent,
                           double support_tol = kTolerances.support);
HermitianMatrix real_power(const SpectralDecomposition& eig, double exponent,
                           double support_tol = kTolerances.support);

/// f applied to the strictly positive part of the spectrum; zero elsewhere.
HermitianMatrix mat_fn(const HermitianMatrix& a, const std::function<double(double)>& f,
                       double support_tol = kTolerances.support);

HermitianMatrix support_projector(const HermitianMatrix& a,
                                  double support_tol = kTolerances.support);

/// Eigenvalues of a PSD matrix with the sub-cutoff part set to exactly zero.
RealVector psd_spectrum(const HermitianMatrix& a, double support_tol = kTolerances.support);

RealVector singular_values(const ComplexMatrix& m);

/// Schatten p-norm for p ∈ [1, ∞]; p = kInfinity gives the operator norm.
double schatten_norm(const ComplexMatrix& m, double p);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
cplx trace(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);

/// Contracts tensor factor `leg` (0-based) of a square operator on ⊗ᵢ C^{dims[i]}.
ComplexMatrix partial_trace(const ComplexMatrix& a, const std::vector<Index>& dims, std::size_t leg);

/// Largest absolute entry.
double max_abs(const ComplexMatrix& a);

/// Polar factor W of A = W|A| (isometry on the thin SVD).
ComplexMatrix polar_unitary(const ComplexMatrix& a);

}  // namespace renyilab
