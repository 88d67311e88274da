#include "helpers.hpp"

using namespace testing;
using doctest::Approx;

TEST_CASE("eig_hermitian examples") {
  const SpectralDecomposition id = eig_hermitian(HermitianMatrix::identity(2));
  CHECK(id.eigenvalues(0) == Approx(1.0));
  CHECK(id.eigenvalues(1) == Approx(1.0));

  const SpectralDecomposition d = eig_hermitian(HermitianMatrix(diag_matrix({3.0, -1.0})));
  CHECK(d.eigenvalues(0) == Approx(-1.0));
  CHECK(d.eigenvalues(1) == Approx(3.0));

  const SpectralDecomposition x = eig_hermitian(HermitianMatrix(pauli_x()));
  CHECK(x.eigenvalues(0) == Approx(-1.0));
  CHECK(x.eigenvalues(1) == Approx(1.0));
  const ComplexVector v = x.eigenvectors.col(0);
  CHECK(std::abs(v(0) + v(1)) < 1e-12);
  CHECK(std::abs(std::abs(v(0)) - 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("eig_hermitian reconstruction and orthonormality") {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const Index n = 2 + k % 5;
    const ComplexMatrix g = rng.ginibre(n, n);
    const HermitianMatrix a(g + g.adjoint());
    const SpectralDecomposition e = eig_hermitian(a);
    const double scale = 1.0 + e.operator_norm();
    CHECK(max_abs(a.matrix() - e.reconstruct()) <= 1e-9 * scale);
    CHECK(max_abs(e.eigenvectors.adjoint() * e.eigenvectors - ComplexMatrix::Identity(n, n)) <= 1e-10);
    for (Index i = 1; i < n; ++i) CHECK(e.eigenvalues(i - 1) <= e.eigenvalues(i));
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix a = pauli_x();
  a(0, 1) = 2.0;
  CHECK_ERROR(HermitianMatrix(a), ErrorCode::NonHermitian);
  CHECK_ERROR(HermitianMatrix(ComplexMatrix::Zero(2, 3)), ErrorCode::ShapeMismatch);
}

TEST_CASE("mat_power examples") {
  const cplx z(0.37, 2.0);
  CHECK(max_abs(mat_power(HermitianMatrix::identity(3), z) - ComplexMatrix::Identity(3, 3)) < 1e-12);
  CHECK(max_abs(mat_power(HermitianMatrix(diag_matrix({4.0, 0.0})), 0.5) - diag_matrix({2.0, 0.0})) < 1e-12);
  const ComplexMatrix m = mat_power(HermitianMatrix(diag_matrix({2.0})), cplx(0.0, M_PI / std::log(2.0)));
  CHECK(std::abs(m(0, 0) - cplx(-1.0, 0.0)) < 1e-12);
  CHECK_ERROR(mat_power(HermitianMatrix(diag_matrix({1.0, -0.5})), 0.5), ErrorCode::NotPSD);
}

TEST_CASE("mat_power group law and imaginary powers") {
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    const Index n = 2 + k % 4;
    const StateFunctional rho = random_density(n, 1 + k % n, rng);
    const cplx z1(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    const cplx z2(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    const HermitianMatrix& a = rho.density();
    CHECK(max_abs(mat_power(a, z1) * mat_power(a, z2) - mat_power(a, z1 + z2)) < 1e-8 * (1.0 + max_abs(mat_power(a, z1 + z2))));

    const ComplexMatrix u = mat_power(a, cplx(0.0, rng.uniform(-5.0, 5.0)));
    const ComplexMatrix p = support_projector(a).matrix();
    const ComplexVector v = rng.ginibre(n, 1);
    CHECK(std::abs((u * v).norm() - (p * v).norm()) < 1e-9);
  }
}

TEST_CASE("mat_fn examples") {
  const auto log_fn = [](double x) { return std::log(x); };
  CHECK(max_abs(mat_fn(HermitianMatrix(diag_matrix({1.0, M_E})), log_fn).matrix() - diag_matrix({0.0, 1.0})) < 1e-12);
  CHECK(max_abs(mat_fn(HermitianMatrix(diag_matrix({1.0, 0.0})), log_fn).matrix()) < 1e-12);
  CHECK(mat_fn(HermitianMatrix(diag_matrix({3.0})), [](double x) { return x * x; })(0, 0).real() == Approx(9.0));
}

TEST_CASE("schatten_norm examples and invariance") {
  CHECK(schatten_norm(ComplexMatrix::Identity(3, 3), 2.0) == Approx(std::sqrt(3.0)));
  CHECK(schatten_norm(diag_matrix({3.0, 4.0}), kInfinity) == Approx(4.0));
  CHECK(schatten_norm(diag_matrix({3.0, 4.0}), 1.0) == Approx(7.0));
  CHECK_ERROR(schatten_norm(diag_matrix({1.0}), 0.5), ErrorCode::BadExponent);

  Rng rng(3);
  for (double p : {1.0, 1.5, 2.0, 3.0, kInfinity}) {
    const ComplexMatrix a = rng.ginibre(3, 4);
    const ComplexMatrix b = random_unitary(3, rng) * a * random_unitary(4, rng);
    CHECK(std::abs(schatten_norm(b, p) - schatten_norm(a, p)) <= 1e-9 * schatten_norm(a, p));
  }
}

TEST_CASE("kron, transpose and partial trace") {
  const ComplexMatrix k = kron(diag_matrix({2.0, 5.0}), ComplexMatrix::Identity(2, 2));
  CHECK(max_abs(k - diag_matrix({2.0, 2.0, 5.0, 5.0})) < 1e-15);
  CHECK(max_abs(transpose(pauli_x()) - pauli_x()) < 1e-15);

  Rng rng(5);
  const ComplexMatrix a = rng.ginibre(2, 2), b = rng.ginibre(3, 3);
  const ComplexMatrix ab = kron(a, b);
  CHECK(max_abs(partial_trace(ab, {2, 3}, 1) - a * trace(b)) < 1e-12);
  CHECK(max_abs(partial_trace(ab, {2, 3}, 0) - b * trace(a)) < 1e-12);
  CHECK_ERROR(partial_trace(ab, {2, 2}, 0), ErrorCode::ShapeMismatch);
  CHECK_ERROR(partial_trace(ab, {2, 3}, 2), ErrorCode::ShapeMismatch);
  CHECK_ERROR(trace(rng.ginibre(2, 3)), ErrorCode::ShapeMismatch);
}

TEST_CASE("support_projector examples") {
  CHECK(max_abs(support_projector(HermitianMatrix(diag_matrix({0.3, 0.0}))).matrix() - diag_matrix({1.0, 0.0})) < 1e-12);
  const StateFunctional full = random_density(3, 3, 9);
  CHECK(max_abs(support_projector(full.density()).matrix() - ComplexMatrix::Identity(3, 3)) < 1e-10);
  const ComplexMatrix plus = plus_state().matrix();
  const ComplexMatrix p = support_projector(HermitianMatrix(plus)).matrix();
  CHECK(max_abs(p - plus) < 1e-12);
  CHECK(max_abs(p * p - p) < 1e-10);
}

TEST_CASE("random generators") {
  const StateFunctional r = random_density(2, 1, 42);
  CHECK(r.trace() == Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(psd_spectrum(r.density())(0)) < 1e-10);
  const ComplexMatrix v = random_isometry(2, 4, 42);
  CHECK(max_abs(v.adjoint() * v - ComplexMatrix::Identity(2, 2)) < 1e-10);
  CHECK(random_density(4, 2, 17).matrix() == random_density(4, 2, 17).matrix());
  CHECK(random_unit_vector(3, 8).reshape_matrix() == random_unit_vector(3, 8).reshape_matrix());
  CHECK(random_isometry(2, 3, 5) == random_isometry(2, 3, 5));
  CHECK_ERROR(random_density(2, 3, 1), ErrorCode::BadRank);
  CHECK_ERROR(random_isometry(3, 2, 1), ErrorCode::BadRank);
}

TEST_CASE("polar factor of badly scaled columns is unitary") {
  ComplexMatrix a(3, 3);
  a << 1.0, 1e-161, 0.0, 0.5, 2e-161, 0.0, 0.25, 0.0, 3.0;
  const ComplexMatrix w = polar_unitary(a);
  CHECK(max_abs(w.adjoint() * w - ComplexMatrix::Identity(3, 3)) < 1e-10);
}
