#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracle.hpp"
#include "pulsent/entanglement.hpp"
#include "pulsent/error.hpp"
#include "pulsent/pauli.hpp"

using namespace pulsent;

namespace {

ComplexMatrix bell_diagonal(double a, double b, double c) {
  return assemble_density(CorrelationState::diagonal(a, b, c));
}

std::array<double, 3> random_physical_c(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const std::array<double, 3> c{u(rng), u(rng), u(rng)};
    if (oracle::eigenvalues(oracle::bell_diagonal(c))[0] >= 0.0) return c;
  }
}

ComplexMatrix random_local_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto su2 = [&] {
    const double theta = 4 * std::numbers::pi * u(rng);
    const double phi = 2 * std::numbers::pi * u(rng);
    const double z = 2 * u(rng) - 1;
    const double r = std::sqrt(1 - z * z);
    return Complex{std::cos(theta / 2)} * ComplexMatrix::identity(2) +
           Complex{0, -std::sin(theta / 2)} *
               (Complex{r * std::cos(phi)} * pauli(0) + Complex{r * std::sin(phi)} * pauli(1) +
                Complex{z} * pauli(2));
  };
  return kron(su2(), su2());
}

}  // namespace

TEST_SUITE("entanglement") {

TEST_CASE("partial transpose examples") {
  const ComplexMatrix mixed = Complex{0.25} * ComplexMatrix::identity(4);
  CHECK(partial_transpose_b(mixed) == mixed);

  const ComplexMatrix xy = kron(pauli(0), pauli(1));
  CHECK(max_abs_diff(partial_transpose_b(xy), Complex{-1.0} * xy) == 0.0);

  const auto ev = hermitian_eigenvalues(partial_transpose_b(bell_diagonal(-1, -1, -1)));
  const std::array<double, 4> expected{-0.5, 0.5, 0.5, 0.5};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ev[i] - expected[i]) < 1e-12);
}

TEST_CASE("partial transpose is an involution and matches the index oracle") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    std::vector<Complex> e(16);
    for (auto& z : e) z = Complex{u(rng), u(rng)};
    const ComplexMatrix m(4, 4, e);
    CHECK(partial_transpose_b(partial_transpose_b(m)) == m);
    const oracle::CMat4 ref = oracle::partial_transpose(oracle::to_eigen(m));
    const ComplexMatrix pt = partial_transpose_b(m);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) CHECK(pt(r, c) == ref(r, c));
  }
}

TEST_CASE("pinned negativities") {
  CHECK(std::abs(negativity(bell_diagonal(-1, -1, -1)).value - 1.0) < 1e-12);
  const double third = -1.0 / 3.0;
  CHECK(std::abs(negativity(bell_diagonal(third, third, third)).value) < 1e-12);
  CHECK(std::abs(negativity(bell_diagonal(-0.9, -0.9, -0.9)).value - 0.85) < 1e-10);
  CHECK(std::abs(negativity(bell_diagonal(-0.9, -0.8, -0.6)).value - 0.65) < 1e-10);
  CHECK(std::abs(negativity(bell_diagonal(-0.9, -0.8, -0.7)).value - 0.70) < 1e-10);
  CHECK(negativity(bell_diagonal(0, 0, 0)).value == 0.0);
}

TEST_CASE("negativity precondition errors") {
  const ComplexMatrix bad_trace = Complex{0.5} * ComplexMatrix::identity(4);
  try {
    (void)negativity(bad_trace);
    FAIL("expected TraceNotOne");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TraceNotOne);
  }
  const ComplexMatrix skew = bell_diagonal(0, 0, 0) + Complex{0.0, 0.1} * kron(pauli(2), pauli(2));
  try {
    (void)negativity(skew);
    FAIL("expected NonHermitianInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHermitianInput);
  }
}

TEST_CASE("Bell-diagonal negativity: closed form and brute-force oracle") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 1000; ++i) {
    const auto c = random_physical_c(rng);
    const NegativityResult r = negativity(bell_diagonal(c[0], c[1], c[2]));
    CHECK(std::abs(r.value - oracle::bell_diagonal_negativity(c)) < 1e-10);
    CHECK(std::abs(r.value - oracle::negativity(oracle::bell_diagonal(c))) < 1e-10);
    CHECK(std::abs(r.eigenvalues[0] + r.eigenvalues[1] + r.eigenvalues[2] + r.eigenvalues[3] - 1.0) <
          1e-9);
    double negative = 0.0;
    for (double mu : r.eigenvalues) negative += std::min(0.0, mu);
    CHECK(std::abs(r.raw_value + 2.0 * negative) < 1e-12);
    CHECK(r.value >= 0.0);
    CHECK(r.value <= 1.0 + 1e-12);
  }
}

TEST_CASE("negativity is invariant under local unitaries") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const auto c = random_physical_c(rng);
    const ComplexMatrix rho = bell_diagonal(c[0], c[1], c[2]);
    const ComplexMatrix u = random_local_unitary(rng);
    CHECK(std::abs(negativity(rho).value - negativity(u * rho * u.adjoint()).value) < 1e-8);
  }
}

TEST_CASE("Werner line is monotone then flat") {
  double prev = 2.0;
  for (int i = 0; i <= 400; ++i) {
    const double x = -1.0 + i * (2.0 / 3.0) / 400.0;  // [-1, -1/3]
    const double e = negativity(bell_diagonal(x, x, x)).value;
    CHECK(e <= prev + 1e-12);
    prev = e;
  }
  for (int i = 0; i <= 200; ++i) {
    const double x = -1.0 / 3.0 + i * (2.0 / 3.0) / 200.0;  // [-1/3, 1/3]
    CHECK(negativity(bell_diagonal(x, x, x)).value < 1e-12);
  }
}

TEST_CASE("classify_werner") {
  CHECK(classify_werner(-1.0) == Separability::Entangled);
  CHECK(classify_werner(0.0) == Separability::Separable);
  CHECK(classify_werner(-0.5) == Separability::Entangled);
  CHECK(std::abs(negativity(bell_diagonal(-0.5, -0.5, -0.5)).value - 0.25) < 1e-12);
  CHECK(classify_werner(-1.0 / 3.0) == Separability::Separable);
  CHECK(classify_werner(1.0 / 3.0) == Separability::Separable);
  CHECK(classify_werner(0.34) == Separability::Unphysical);
  CHECK(classify_werner(-1.01) == Separability::Unphysical);
}

}  // TEST_SUITE
