#include "helpers.hpp"

using namespace testing;
using doctest::Approx;

TEST_CASE("apply_predual examples") {
  const StateFunctional rho = random_density(3, 2, 1);
  CHECK(max_abs(apply_predual(Channel::identity(3), rho).matrix() - rho.matrix()) < 1e-14);
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const StateFunctional out = apply_predual(Channel::depolarizing(3), random_density(3, 1 + s % 3, s));
    CHECK(max_abs(out.matrix() - ComplexMatrix::Identity(3, 3) / 3.0) < 1e-12);
  }
  Rng rng(2);
  const ComplexMatrix u = random_unitary(2, rng);
  const HermitianMatrix t(u * diag_matrix({0.3, 0.9}) * u.adjoint());
  const Channel meas = Channel::measurement(t);
  const StateFunctional r2 = random_density(2, 2, rng);
  const double p_t = (r2.matrix() * t.matrix()).trace().real();
  CHECK(max_abs(apply_predual(meas, r2).matrix() - diag_matrix({p_t, 1.0 - p_t})) < 1e-12);
  CHECK_ERROR(Channel::measurement(HermitianMatrix(diag_matrix({1.5, 0.0}))), ErrorCode::NotPSD);
}

TEST_CASE("channel validation") {
  CHECK_ERROR(Channel({diag_matrix({1.0, 0.5})}), ErrorCode::NotNormalized);
  CHECK_ERROR(Channel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}), ErrorCode::ShapeMismatch);
  CHECK_ERROR(Channel(std::vector<ComplexMatrix>{}), ErrorCode::ShapeMismatch);
  const Channel padded = Channel::identity(2).padded(2);
  CHECK(padded.kraus_count() == 3);
  Rng rng(3);
  const Channel ch = Channel::random(3, 2, 2, rng);
  CHECK(ch.in_dim() == 3);
  CHECK(ch.out_dim() == 2);
  ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
  for (const ComplexMatrix& k : ch.kraus()) sum += k.adjoint() * k;
  CHECK(max_abs(sum - ComplexMatrix::Identity(3, 3)) < 1e-9);
  CHECK(max_abs(apply_heisenberg(ch, ComplexMatrix::Identity(2, 2)) - ComplexMatrix::Identity(3, 3)) < 1e-9);
}

TEST_CASE("stinespring examples and round trip") {
  const StinespringDilation id = stinespring(Channel::identity(2));
  CHECK(id.env_dim == 1);
  CHECK(max_abs(id.isometry - ComplexMatrix::Identity(2, 2)) < 1e-15);

  Rng rng(4);
  const ComplexMatrix u = random_unitary(2, rng);
  const StinespringDilation du = stinespring(Channel::unitary(u));
  CHECK(max_abs(du.isometry - u) < 1e-15);

  const Channel ch = Channel::random(2, 2, 2, rng);
  const StinespringDilation d = stinespring(ch);
  CHECK(max_abs(d.isometry.adjoint() * d.isometry - ComplexMatrix::Identity(2, 2)) < 1e-9);
  const Channel back = channel_from_dilation(d);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix e = ComplexMatrix::Zero(2, 2);
      e(i, j) = 1.0;
      CHECK(max_abs(apply_heisenberg(back, e) - apply_heisenberg(ch, e)) < 1e-9);
      // ℰ(a) = V†(a ⊗ 1)V
      const ComplexMatrix via_v = d.isometry.adjoint() * kron(e, ComplexMatrix::Identity(d.env_dim, d.env_dim)) * d.isometry;
      CHECK(max_abs(via_v - apply_heisenberg(ch, e)) < 1e-9);
    }
  }
}

TEST_CASE("embed_vector examples") {
  Rng rng(5);
  const VectorState xi = random_vector(2, 3, rng);
  const VectorState same = embed_vector(stinespring(Channel::identity(2)), xi);
  CHECK(max_abs(same.reshape_matrix() - xi.reshape_matrix()) < 1e-15);

  const ComplexMatrix u = random_unitary(2, rng);
  CHECK(max_abs(embed_vector(stinespring(Channel::unitary(u)), xi).reshape_matrix() - u * xi.reshape_matrix()) < 1e-12);

  const Channel ch = Channel::random(3, 2, 3, rng);
  const StateFunctional rho = random_density(3, 2, rng);
  const VectorState out = embed_vector(stinespring(ch), purify(rho));
  CHECK(out.left_dim() == 2);
  CHECK(out.right_dim() == 3 * 3);
  CHECK(max_abs(functional_of_vector(out).matrix() - apply_predual(ch, rho).matrix()) < 1e-9);
  CHECK_ERROR(embed_vector(stinespring(ch), random_vector(2, 2, rng)), ErrorCode::ShapeMismatch);

  // Re-bracketing against partial traces of the full output vector on Cᵐ ⊗ Cᵏ ⊗ Cʳ.
  const StinespringDilation d = stinespring(ch);
  const VectorState vx = random_vector(3, 2, rng);
  const ComplexVector full = kron(d.isometry, ComplexMatrix::Identity(2, 2)) * vx.flat();
  const ComplexMatrix joint = full * full.adjoint();
  const ComplexMatrix left = partial_trace(partial_trace(joint, {2, 3, 2}, 2), {2, 3}, 1);
  CHECK(max_abs(left - functional_of_vector(embed_vector(d, vx)).matrix()) < 1e-12);
}

TEST_CASE("dpi_check_states examples") {
  Rng rng(6);
  const StateFunctional rho = random_density(3, 2, rng), sigma = random_density(3, 3, rng);
  const DpiReport id = dpi_check_states(Channel::identity(3), rho, sigma, 2.0);
  CHECK(id.pass);
  CHECK(std::abs(id.divergence.slack) < 1e-10);
  const DpiReport dep = dpi_check_states(Channel::depolarizing(3), rho, sigma, 1.5);
  CHECK(dep.pass);
  CHECK(std::abs(dep.divergence.rhs) < 1e-10);
  for (int k = 0; k < 20; ++k) {
    const Channel ch = Channel::random(3, 2, 2, rng);
    for (double a : {0.5, 0.8, 1.5, kInfinity}) {
      CHECK(dpi_check_states(ch, random_density(3, 1 + k % 3, rng), random_density(3, 3, rng), a).pass);
    }
  }
}

TEST_CASE("dpi_check_vectors examples") {
  Rng rng(7);
  const StateFunctional sigma = random_density(2, 2, rng);
  const VectorState xi = random_vector(2, 3, rng);
  for (double p : {1.0, 2.0, 4.0, kInfinity}) {
    const Report r = dpi_check_vectors(Channel::identity(2), xi, sigma, p);
    CHECK(r.pass);
    CHECK(std::abs(r.lhs - r.rhs) < 1e-10);
  }
  const Channel ch = Channel::random(2, 2, 2, rng);
  const Report two = dpi_check_vectors(ch, xi, sigma, 2.0);
  CHECK(two.lhs == Approx(two.rhs));
  for (int k = 0; k < 500; ++k) {
    const Channel c = Channel::random(2, 2, 1 + k % 3, rng);
    const VectorState v = random_vector(2, 1 + k % 4, rng);
    const StateFunctional s = random_density(2, 1 + k % 2, rng);
    const double p = std::vector<double>{1.0, 1.5, 4.0, kInfinity}[static_cast<std::size_t>(k % 4)];
    const Report r = dpi_check_vectors(c, v, s, p);
    CHECK(r.pass);
  }
}

TEST_CASE("zero Kraus padding leaves weighted norms unchanged") {
  Rng rng(8);
  const StateFunctional sigma = random_density(3, 2, rng);
  const VectorState xi = random_vector(3, 2, rng);
  const StinespringDilation plain = stinespring(Channel::identity(3));
  const StinespringDilation padded = stinespring(Channel::identity(3).padded(3));
  for (double p : {1.0, 1.5, 2.0, 3.0, kInfinity}) {
    const double a = vector_norm(embed_vector(plain, xi), sigma, p);
    const double b = vector_norm(embed_vector(padded, xi), sigma, p);
    if (std::isinf(a)) {
      CHECK(std::isinf(b));
    } else {
      CHECK(std::abs(a - b) < 1e-9);
    }
  }
}

TEST_CASE("dilation sup norm") {
  Rng rng(9);
  const Channel ch = Channel::random(2, 3, 2, rng);
  const StateFunctional sigma = random_density(2, 2, rng);
  CHECK(dilation_sup_norm(ch, sigma, apply_predual(ch, sigma)) == Approx(1.0));
  const StateFunctional tau = random_density(3, 3, rng);
  const double c = std::exp(static_cast<double>(dmax(apply_predual(ch, sigma), tau)));
  CHECK(dilation_sup_norm(ch, sigma, tau) == Approx(std::sqrt(c)));
}
