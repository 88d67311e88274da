#pragma once

#include <cstdint>
#include <random>

#include "renyilab/states.hpp"

namespace renyilab {

/// Seeded generator passed explicitly to every sampler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform(double lo = 0.0, double hi = 1.0);
  cplx complex_normal() { return {normal(), normal()}; }
  ComplexMatrix ginibre(Index rows, Index cols);
  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// SplitMix64 finalizer; combines indices into decorrelated instance seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Trace-one density GG†/Tr(GG†) with G a dim×rank Ginibre matrix.
StateFunctional random_density(Index dim, Index rank, std::uint64_t seed);
StateFunctional random_density(Index dim, Index rank, Rng& rng);

/// Unit vector in Cⁿ ⊗ Cⁿ (n = dim) with a Ginibre reshape matrix.
VectorState random_unit_vector(Index dim, std::uint64_t seed);
VectorState random_vector(Index left_dim, Index right_dim, Rng& rng);

/// m×n isometry (V†V = 1ₙ) from the QR factor of a Ginibre matrix. Requires m ≥ n.
ComplexMatrix random_isometry(Index n, Index m, std::uint64_t seed);
ComplexMatrix random_isometry(Index n, Index m, Rng& rng);
ComplexMatrix random_unitary(Index n, Rng& rng);

/// Probability vector drawn uniformly from the open simplex.
RealVector random_probability(Index n, Rng& rng);

}  // namespace renyilab
