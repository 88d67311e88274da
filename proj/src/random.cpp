#include "renyilab/random.hpp"

#include <sstream>

namespace renyilab {

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(engine_);
}

ComplexMatrix Rng::ginibre(Index rows, Index cols) {
  ComplexMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) g(i, j) = complex_normal();
  }
  return g;
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a * 0x9E3779B97F4A7C15ULL + b + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

StateFunctional random_density(Index dim, Index rank, Rng& rng) {
  if (dim < 1 || rank < 1 || rank > dim) {
    std::ostringstream os;
    os << "rank " << rank << " not in [1, " << dim << "]";
    throw Error(ErrorCode::BadRank, os.str());
  }
  const ComplexMatrix g = rng.ginibre(dim, rank);
  ComplexMatrix d = g * g.adjoint();
  d /= d.trace().real();
  return StateFunctional(HermitianMatrix(d, kInfinity));
}

StateFunctional random_density(Index dim, Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

VectorState random_vector(Index left_dim, Index right_dim, Rng& rng) {
  ComplexMatrix m = rng.ginibre(left_dim, right_dim);
  m /= m.norm();
  return VectorState(std::move(m));
}

VectorState random_unit_vector(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_vector(dim, dim, rng);
}

ComplexMatrix random_isometry(Index n, Index m, Rng& rng) {
  if (n < 1 || m < n) {
    std::ostringstream os;
    os << "isometry needs m ≥ n ≥ 1, got n = " << n << ", m = " << m;
    throw Error(ErrorCode::BadRank, os.str());
  }
  const ComplexMatrix g = rng.ginibre(m, n);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, n);
  // Fix the phase freedom so the distribution is Haar rather than QR-biased.
  const ComplexMatrix r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

ComplexMatrix random_isometry(Index n, Index m, std::uint64_t seed) {
  Rng rng(seed);
  return random_isometry(n, m, rng);
}

ComplexMatrix random_unitary(Index n, Rng& rng) { return random_isometry(n, n, rng); }

RealVector random_probability(Index n, Rng& rng) {
  RealVector p(n);
  for (Index i = 0; i < n; ++i) p(i) = -std::log(rng.uniform(1e-12, 1.0));
  return p / p.sum();
}

}  // namespace renyilab
