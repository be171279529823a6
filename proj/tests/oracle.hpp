#pragma once

// Independent oracles for the test suites. Nothing here calls the library's
// eigensolver or rotation code.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "pulsent/linalg.hpp"

namespace oracle {

using CMat4 = Eigen::Matrix<std::complex<double>, 4, 4>;
using CMat2 = Eigen::Matrix2cd;

inline CMat4 to_eigen(const pulsent::ComplexMatrix& m) {
  CMat4 e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e(r, c) = m(r, c);
  return e;
}

inline std::array<CMat2, 3> paulis() {
  const std::complex<double> i{0, 1};
  CMat2 x, y, z;
  x << 0, 1, 1, 0;
  y << 0, -i, i, 0;
  z << 1, 0, 0, -1;
  return {x, y, z};
}

inline CMat4 kron2(const CMat2& a, const CMat2& b) {
  CMat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

/// (1/4)(I + sum c_k s_k (x) s_k) built with Eigen.
inline CMat4 bell_diagonal(const std::array<double, 3>& c) {
  const auto s = paulis();
  CMat4 rho = CMat4::Identity();
  for (int k = 0; k < 3; ++k) rho += c[k] * kron2(s[k], s[k]);
  return 0.25 * rho;
}

/// Partial transpose on qubit b by explicit index permutation.
inline CMat4 partial_transpose(const CMat4& rho) {
  CMat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + l, 2 * k + j) = rho(2 * i + j, 2 * k + l);
  return out;
}

inline std::array<double, 4> eigenvalues(const CMat4& m) {
  Eigen::SelfAdjointEigenSolver<CMat4> solver(m, Eigen::EigenvaluesOnly);
  const auto ev = solver.eigenvalues();
  std::array<double, 4> out{ev(0), ev(1), ev(2), ev(3)};
  std::sort(out.begin(), out.end());
  return out;
}

/// Brute-force negativity: dense diagonalization of the partial transpose.
inline double negativity(const CMat4& rho) {
  double sum = 0.0;
  for (double mu : eigenvalues(partial_transpose(rho))) sum += std::abs(mu);
  return std::max(0.0, sum - 1.0);
}

/// Closed form for Bell-diagonal states. The partial transpose maps c to
/// (c1, -c2, c3); Bell-diagonal eigenvalues are (1 - c1 - c2 - c3)/4 and the
/// three sign flips of two entries.
inline double bell_diagonal_negativity(const std::array<double, 3>& c) {
  const double c1 = c[0], c2 = -c[1], c3 = c[2];
  const std::array<double, 4> mu{(1 - c1 - c2 - c3) / 4, (1 - c1 + c2 + c3) / 4,
                                 (1 + c1 - c2 + c3) / 4, (1 + c1 + c2 - c3) / 4};
  double neg = 0.0;
  for (double m : mu) neg += std::min(0.0, m);
  return -2.0 * neg;
}

/// exp(t [w]x): the rotation generated by angular velocity w.
inline Eigen::Matrix3d rotation_from_generator(const std::array<double, 3>& w, double t) {
  Eigen::Matrix3d g;
  g << 0, -w[2], w[1], w[2], 0, -w[0], -w[1], w[0], 0;
  return (g * t).exp();
}

/// exp(-i t H) for a constant 2x2 H, via Eigen's matrix exponential.
inline CMat2 propagator(const CMat2& h, double t) {
  const std::complex<double> minus_i{0, -1};
  return (minus_i * t * h).exp();
}

}  // namespace oracle
