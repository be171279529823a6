#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracle.hpp"
#include "pulsent/error.hpp"
#include "pulsent/evolution.hpp"
#include "pulsent/linalg.hpp"
#include "pulsent/pauli.hpp"

using namespace pulsent;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> e(n * n);
  for (auto& z : e) z = Complex{u(rng), u(rng)};
  return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix random_hermitian(std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(rng, 4);
  return Complex{0.5} * (a + a.adjoint());
}

ComplexMatrix axis_angle_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> angle(0.0, 4.0 * std::numbers::pi);
  Vec3 n{g(rng), g(rng), g(rng)};
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  const double theta = angle(rng);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return Complex{c} * ComplexMatrix::identity(2) +
         Complex{0.0, -s / len} * (Complex{n[0]} * pauli(0) + Complex{n[1]} * pauli(1) +
                                   Complex{n[2]} * pauli(2));
}

}  // namespace

TEST_SUITE("pauli-core") {

TEST_CASE("kron of identities is the 4x4 identity") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
}

TEST_CASE("kron(sigma_z, sigma_z) is diag(1, -1, -1, 1)") {
  const std::array<double, 4> d{1, -1, -1, 1};
  CHECK(kron(pauli(2), pauli(2)) == ComplexMatrix::diagonal(d));
}

TEST_CASE("kron(sigma_x, sigma_y) entry (0,3) is -i") {
  const ComplexMatrix k = kron(pauli(0), pauli(1));
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 4);
  CHECK(k(0, 3) == Complex{0.0, -1.0});
}

TEST_CASE("matrix construction rejects a wrong entry count") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
}

TEST_CASE("kron is associative and obeys the mixed-product rule") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_matrix(rng, 2), b = random_matrix(rng, 2), c = random_matrix(rng, 2),
               d = random_matrix(rng, 2);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("eigenvalues of a diagonal matrix come back sorted") {
  const std::array<double, 4> d{0.3, 0.1, 0.4, 0.2};
  const auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal(d));
  CHECK(ev[0] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(ev[1] == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(ev[2] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(ev[3] == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("eigenvalues of (I + sy(x)sy)/4") {
  // Frozen from numpy.linalg.eigvalsh: [0, 0, 0.5, 0.5].
  const ComplexMatrix m =
      Complex{0.25} * (ComplexMatrix::identity(4) + kron(pauli(1), pauli(1)));
  const auto ev = hermitian_eigenvalues(m);
  const std::array<double, 4> expected{0.0, 0.0, 0.5, 0.5};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - expected[i]) < 1e-12);
}

TEST_CASE("eigenvalues of the partially transposed singlet") {
  const ComplexMatrix rho = assemble_density(CorrelationState::diagonal(-1, -1, -1));
  // Swap qubit-b indices by hand; this test does not use partial_transpose_b.
  std::vector<Complex> e(16);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) e[(2 * i + l) * 4 + 2 * k + j] = rho(2 * i + j, 2 * k + l);
  const auto ev = hermitian_eigenvalues(ComplexMatrix(4, 4, std::move(e)));
  const std::array<double, 4> expected{-0.5, 0.5, 0.5, 0.5};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - expected[i]) < 1e-12);
}

TEST_CASE("non-Hermitian input is rejected") {
  const ComplexMatrix m = kron(pauli(0), pauli(0)) + kron(ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}),
                                                         ComplexMatrix::identity(2));
  try {
    (void)hermitian_eigenvalues(m);
    FAIL("expected NonHermitianInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHermitianInput);
  }
  CHECK_THROWS_AS((void)hermitian_eigenvalues(ComplexMatrix::identity(2)), Error);
}

TEST_CASE("random Hermitian spectra: trace identity, unitary invariance, Eigen agreement") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const ComplexMatrix m = random_hermitian(rng);
    const auto ev = hermitian_eigenvalues(m);
    CHECK(std::is_sorted(ev.begin(), ev.end()));
    CHECK(std::abs(ev[0] + ev[1] + ev[2] + ev[3] - m.trace().real()) < 1e-9);

    const ComplexMatrix u = kron(axis_angle_su2(rng), axis_angle_su2(rng));
    CHECK(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(4)) < 1e-12);
    const auto rotated = hermitian_eigenvalues(u * m * u.adjoint());
    const auto reference = oracle::eigenvalues(oracle::to_eigen(m));
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(ev[k] - rotated[k]) < 1e-8);
      CHECK(std::abs(ev[k] - reference[k]) < 1e-10);
    }
  }
}

TEST_CASE("operator_norm of a scaled unitary is the scale") {
  const ComplexMatrix u = kron(pauli(0), pauli(1));
  CHECK(operator_norm(Complex{3.0} * u) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("standard basis satisfies the spin algebra") { CHECK(commutator_check()); }

TEST_CASE("swapping sigma_x and sigma_y breaks the algebra") {
  const auto& s = PauliBasis::standard();
  CHECK_FALSE(commutator_check({s.sigma_y, s.sigma_x, s.sigma_z, s.identity}));
}

TEST_CASE("scaling the basis by 2 breaks the algebra") {
  const auto& s = PauliBasis::standard();
  const Complex two{2.0};
  CHECK_FALSE(commutator_check({two * s.sigma_x, two * s.sigma_y, two * s.sigma_z, s.identity}));
}

TEST_CASE("rotation_matrix agrees with the matrix exponential of its generator") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int i = 0; i < 200; ++i) {
    const std::array<double, 3> w{g(rng), g(rng), g(rng)};
    const double len = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
    const double t = 3.0 * std::abs(g(rng));
    const Mat3 r = rotation_matrix({w[0] / len, w[1] / len, w[2] / len}, len * t);
    const Eigen::Matrix3d ref = oracle::rotation_from_generator(w, t);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(std::abs(r[a][b] - ref(a, b)) < 1e-12);
  }
}

}  // TEST_SUITE
