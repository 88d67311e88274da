#include "renyilab/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace renyilab {

Channel::Channel(std::vector<ComplexMatrix> kraus, double tol) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw Error(ErrorCode::ShapeMismatch, "a channel needs at least one Kraus operator");
  const Index m = kraus_.front().rows(), n = kraus_.front().cols();
  if (m < 1 || n < 1) throw Error(ErrorCode::ShapeMismatch, "empty Kraus operator");
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix& k : kraus_) {
    if (k.rows() != m || k.cols() != n) throw Error(ErrorCode::ShapeMismatch, "Kraus operators differ in shape");
    sum += k.adjoint() * k;
  }
  const double defect = max_abs(sum - ComplexMatrix::Identity(n, n));
  if (defect > tol) {
    std::ostringstream os;
    os << "‖Σ K†K − 1‖_max = " << defect << " exceeds " << tol;
    throw Error(ErrorCode::NotNormalized, os.str());
  }
}

Channel Channel::identity(Index n) { return Channel({ComplexMatrix::Identity(n, n)}); }

Channel Channel::unitary(const ComplexMatrix& u) { return Channel({u}); }

Channel Channel::depolarizing(Index d) {
  std::vector<ComplexMatrix> kraus;
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      ComplexMatrix k = ComplexMatrix::Zero(d, d);
      k(i, j) = 1.0 / std::sqrt(static_cast<double>(d));
      kraus.push_back(std::move(k));
    }
  }
  return Channel(std::move(kraus));
}

Channel Channel::measurement(const HermitianMatrix& t) {
  const Index n = t.dim();
  const SpectralDecomposition eig = eig_hermitian(t);
  if (eig.eigenvalues(0) < -kTolerances.test_operator || eig.eigenvalues(n - 1) > 1.0 + kTolerances.test_operator) {
    throw Error(ErrorCode::NotPSD, "measurement effect must satisfy 0 ≤ T ≤ 1");
  }
  RealVector lo(n), hi(n);
  for (Index i = 0; i < n; ++i) {
    const double l = std::clamp(eig.eigenvalues(i), 0.0, 1.0);
    hi(i) = std::sqrt(l);
    lo(i) = std::sqrt(1.0 - l);
  }
  const ComplexMatrix sqrt_t = eig.eigenvectors * hi.cast<cplx>().asDiagonal() * eig.eigenvectors.adjoint();
  const ComplexMatrix sqrt_c = eig.eigenvectors * lo.cast<cplx>().asDiagonal() * eig.eigenvectors.adjoint();
  std::vector<ComplexMatrix> kraus;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const ComplexMatrix& root = outcome == 0 ? sqrt_t : sqrt_c;
    for (Index i = 0; i < n; ++i) {
      ComplexMatrix k = ComplexMatrix::Zero(2, n);
      k.row(outcome) = root.row(i);
      kraus.push_back(std::move(k));
    }
  }
  return Channel(std::move(kraus));
}

Channel Channel::random(Index in_dim, Index out_dim, Index kraus_count, Rng& rng) {
  StinespringDilation dil{random_isometry(in_dim, out_dim * kraus_count, rng), out_dim, kraus_count};
  return channel_from_dilation(dil);
}

Channel Channel::padded(Index extra) const {
  std::vector<ComplexMatrix> kraus = kraus_;
  for (Index i = 0; i < extra; ++i) kraus.push_back(ComplexMatrix::Zero(out_dim(), in_dim()));
  return Channel(std::move(kraus));
}

StateFunctional apply_predual(const Channel& ch, const StateFunctional& rho) {
  if (rho.dim() != ch.in_dim()) throw Error(ErrorCode::ShapeMismatch, "state does not match the channel input");
  ComplexMatrix out = ComplexMatrix::Zero(ch.out_dim(), ch.out_dim());
  for (const ComplexMatrix& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
  return StateFunctional(HermitianMatrix(out, kInfinity));
}

ComplexMatrix apply_heisenberg(const Channel& ch, const ComplexMatrix& a) {
  if (a.rows() != ch.out_dim() || a.cols() != ch.out_dim()) {
    throw Error(ErrorCode::ShapeMismatch, "observable does not match the channel output");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.in_dim(), ch.in_dim());
  for (const ComplexMatrix& k : ch.kraus()) out += k.adjoint() * a * k;
  return out;
}

StinespringDilation stinespring(const Channel& ch) {
  const Index m = ch.out_dim(), n = ch.in_dim(), k = ch.kraus_count();
  ComplexMatrix v(m * k, n);
  for (Index i = 0; i < k; ++i) {
    for (Index a = 0; a < m; ++a) v.row(a * k + i) = ch.kraus()[i].row(a);
  }
  return {std::move(v), m, k};
}

Channel channel_from_dilation(const StinespringDilation& dil) {
  const Index m = dil.out_dim, k = dil.env_dim;
  if (dil.isometry.rows() != m * k) throw Error(ErrorCode::ShapeMismatch, "isometry does not split as m·k");
  std::vector<ComplexMatrix> kraus(k, ComplexMatrix(m, dil.in_dim()));
  for (Index i = 0; i < k; ++i) {
    for (Index a = 0; a < m; ++a) kraus[i].row(a) = dil.isometry.row(a * k + i);
  }
  return Channel(std::move(kraus));
}

VectorState embed_vector(const StinespringDilation& dil, const VectorState& xi) {
  if (xi.left_dim() != dil.in_dim()) throw Error(ErrorCode::ShapeMismatch, "vector does not match the dilation input");
  // Row (a·k + i) of VM holds the entries with algebra index a and environment index i;
  // the row-major flattening is unchanged by regrouping (k, r) into one leg.
  const ComplexMatrix vm = dil.isometry * xi.reshape_matrix();
  const Index r = xi.right_dim();
  ComplexMatrix out(dil.out_dim, dil.env_dim * r);
  for (Index a = 0; a < dil.out_dim; ++a) {
    for (Index i = 0; i < dil.env_dim; ++i) out.block(a, i * r, 1, r) = vm.row(a * dil.env_dim + i);
  }
  return VectorState(std::move(out));
}

LinearMap dilation_map(const StinespringDilation& dil, Index right_dim) {
  return {kron(dil.isometry, ComplexMatrix::Identity(right_dim, right_dim)), dil.in_dim(), right_dim,
          dil.out_dim, dil.env_dim * right_dim};
}

double dilation_sup_norm(const Channel& ch, const StateFunctional& sigma, const StateFunctional& tau) {
  const ExtReal c = dominance_constant(apply_predual(ch, sigma), tau);
  return c.is_infinite() ? kInfinity : std::sqrt(c.value());
}

DpiReport dpi_check_states(const Channel& ch, const StateFunctional& rho, const StateFunctional& sigma,
                           double alpha, double tol) {
  const StateFunctional rho_out = apply_predual(ch, rho);
  const StateFunctional sigma_out = apply_predual(ch, sigma);
  DpiReport rep;
  rep.divergence =
      Report::at_least(sandwiched(rho, sigma, alpha).value, sandwiched(rho_out, sigma_out, alpha).value, tol);
  rep.relative_entropy = Report::at_least(umegaki(rho, sigma), umegaki(rho_out, sigma_out), tol);
  rep.fidelity = Report::at_least(fidelity(rho_out, sigma_out), fidelity(rho, sigma), tol);
  rep.pass = rep.divergence.pass && rep.relative_entropy.pass && rep.fidelity.pass;
  return rep;
}

Report dpi_check_vectors(const Channel& ch, const VectorState& xi, const StateFunctional& sigma, double p,
                         double tol) {
  const VectorState out = embed_vector(stinespring(ch), xi);
  const StateFunctional tau = apply_predual(ch, sigma);
  const double lhs = vector_norm(out, tau, p);
  const double rhs = vector_norm(xi, sigma, p);
  return p >= 2.0 ? Report::at_most(lhs, rhs, tol) : Report::at_least(lhs, rhs, tol);
}

}  // namespace renyilab
