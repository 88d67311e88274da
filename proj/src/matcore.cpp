#include "renyilab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace renyilab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::BadAlpha: return "BadAlpha";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::MemoryGuard: return "MemoryGuard";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols() || a.rows() < 1) {
    std::ostringstream os;
    os << "expected a non-empty square matrix, got " << a.rows() << "x" << a.cols();
    throw Error(ErrorCode::ShapeMismatch, os.str());
  }
  const double skew = max_abs(a - a.adjoint());
  if (skew > tol) {
    std::ostringstream os;
    os << "‖A − A†‖_max = " << skew << " exceeds " << tol;
    throw Error(ErrorCode::NonHermitian, os.str());
  }
  m_ = 0.5 * (a + a.adjoint());
}

HermitianMatrix HermitianMatrix::identity(Index n) {
  return HermitianMatrix(ComplexMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  return HermitianMatrix(d.cast<cplx>().asDiagonal().toDenseMatrix());
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "sum of differently sized matrices");
  return HermitianMatrix(a.matrix() + b.matrix());
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::ShapeMismatch, "difference of differently sized matrices");
  return HermitianMatrix(a.matrix() - b.matrix());
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) { return HermitianMatrix(s * a.matrix()); }

ComplexMatrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
}

double SpectralDecomposition::operator_norm() const {
  if (eigenvalues.size() == 0) return 0.0;
  return std::max(std::abs(eigenvalues(0)), std::abs(eigenvalues(eigenvalues.size() - 1)));
}

SpectralDecomposition eig_hermitian(const HermitianMatrix& a) {
  const ComplexMatrix& m = a.matrix();
  const Index n = m.rows();
  if ((m - ComplexMatrix(m.diagonal().asDiagonal())).isZero(0.0)) {
    // Diagonal input: sort the diagonal, eigenvectors are a permutation.
    std::vector<Index> order(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&m](Index i, Index j) { return m(i, i).real() < m(j, j).real(); });
    SpectralDecomposition out{RealVector(n), ComplexMatrix::Zero(n, n)};
    for (Index k = 0; k < n; ++k) {
      const Index i = order[static_cast<std::size_t>(k)];
      out.eigenvalues(k) = m(i, i).real();
      out.eigenvectors(i, k) = 1.0;
    }
    return out;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::NonHermitian, "eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

// Cutoff below which an eigenvalue is treated as zero; throws on significantly negative ones.
double support_cutoff(const SpectralDecomposition& eig, double support_tol) {
  const double scale = eig.operator_norm();
  const double cutoff = support_tol * scale;
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues(0) < -cutoff) {
    std::ostringstream os;
    os << "eigenvalue " << eig.eigenvalues(0) << " below −" << cutoff;
    throw Error(ErrorCode::NotPSD, os.str());
  }
  return cutoff;
}

template <typename F>
ComplexMatrix apply_on_support(const SpectralDecomposition& eig, double support_tol, F&& f) {
  const double cutoff = support_cutoff(eig, support_tol);
  const Index n = eig.eigenvalues.size();
  ComplexVector values(n);
  for (Index i = 0; i < n; ++i) {
    const double lambda = eig.eigenvalues(i);
    values(i) = (lambda > cutoff && lambda > 0.0) ? cplx(f(lambda)) : cplx(0.0);
  }
  return eig.eigenvectors * values.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace

ComplexMatrix mat_power(const SpectralDecomposition& eig, cplx z, double support_tol) {
  return apply_on_support(eig, support_tol,
                          [z](double lambda) { return std::exp(z * std::log(lambda)); });
}

ComplexMatrix mat_power(const HermitianMatrix& a, cplx z, double support_tol) {
  return mat_power(eig_hermitian(a), z, support_tol);
}

HermitianMatrix real_power(const SpectralDecomposition& eig, double exponent, double support_tol) {
  const ComplexMatrix m =
      apply_on_support(eig, support_tol, [exponent](double lambda) { return std::pow(lambda, exponent); });
  return HermitianMatrix(m, kInfinity);
}

HermitianMatrix real_power(const HermitianMatrix& a, double exponent, double support_tol) {
  return real_power(eig_hermitian(a), exponent, support_tol);
}

HermitianMatrix mat_fn(const HermitianMatrix& a, const std::function<double(double)>& f,
                       double support_tol) {
  const ComplexMatrix m = apply_on_support(eig_hermitian(a), support_tol, f);
  return HermitianMatrix(m, kInfinity);
}

HermitianMatrix support_projector(const HermitianMatrix& a, double support_tol) {
  return mat_fn(a, [](double) { return 1.0; }, support_tol);
}

RealVector psd_spectrum(const HermitianMatrix& a, double support_tol) {
  const SpectralDecomposition eig = eig_hermitian(a);
  const double cutoff = support_cutoff(eig, support_tol);
  RealVector out = eig.eigenvalues;
  for (Index i = 0; i < out.size(); ++i) {
    if (out(i) <= cutoff) out(i) = 0.0;
  }
  return out;
}

RealVector singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double schatten_norm(const ComplexMatrix& m, double p) {
  if (!(p >= 1.0)) {
    std::ostringstream os;
    os << "Schatten exponent " << p << " < 1";
    throw Error(ErrorCode::BadExponent, os.str());
  }
  const RealVector s = singular_values(m);
  if (s.size() == 0) return 0.0;
  const double smax = s.maxCoeff();
  if (std::isinf(p) || smax == 0.0) return smax;
  // Scaled to keep s^p representable for large p.
  double acc = 0.0;
  for (Index i = 0; i < s.size(); ++i) acc += std::pow(s(i) / smax, p);
  return smax * std::pow(acc, 1.0 / p);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

cplx trace(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::ShapeMismatch, "trace of a non-square matrix");
  return a.trace();
}

ComplexMatrix transpose(const ComplexMatrix& a) { return a.transpose(); }

ComplexMatrix partial_trace(const ComplexMatrix& a, const std::vector<Index>& dims, std::size_t leg) {
  if (leg >= dims.size()) throw Error(ErrorCode::ShapeMismatch, "partial trace leg out of range");
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw Error(ErrorCode::ShapeMismatch, "tensor factor dimension < 1");
    total *= d;
  }
  if (a.rows() != total || a.cols() != total) {
    throw Error(ErrorCode::ShapeMismatch, "operator size does not match the tensor factorization");
  }
  Index before = 1;
  for (std::size_t i = 0; i < leg; ++i) before *= dims[i];
  const Index traced = dims[leg];
  const Index after = total / (before * traced);
  const Index out_dim = before * after;
  ComplexMatrix out = ComplexMatrix::Zero(out_dim, out_dim);
  for (Index b1 = 0; b1 < before; ++b1) {
    for (Index a1 = 0; a1 < after; ++a1) {
      for (Index b2 = 0; b2 < before; ++b2) {
        for (Index a2 = 0; a2 < after; ++a2) {
          cplx acc = 0.0;
          for (Index k = 0; k < traced; ++k) {
            acc += a((b1 * traced + k) * after + a1, (b2 * traced + k) * after + a2);
          }
          out(b1 * after + a1, b2 * after + a2) = acc;
        }
      }
    }
  }
  return out;
}

ComplexMatrix polar_unitary(const ComplexMatrix& a) {
  // Entries far below the largest one are flushed: Jacobi rotations on columns
  // whose scales differ by more than ~1e150 underflow and lose orthogonality.
  const double cut = 1e-100 * max_abs(a);
  const ComplexMatrix b = a.unaryExpr([cut](const cplx& x) { return std::abs(x) < cut ? cplx(0.0) : x; });
  Eigen::JacobiSVD<ComplexMatrix> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace renyilab
