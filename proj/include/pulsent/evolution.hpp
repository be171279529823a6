#pragma once

#include <string>

#include "pulsent/linalg.hpp"
#include "pulsent/pulse.hpp"

namespace pulsent {

/// Two-qubit state in Fano form:
///   rho = (1/4)(I + sum a_k s_k(x)I + sum b_l I(x)s_l + sum C_kl s_k(x)s_l).
struct CorrelationState {
  Mat3 tensor{};
  Vec3 bloch_a{};
  Vec3 bloch_b{};

  static CorrelationState diagonal(double cxx, double cyy, double czz) {
    CorrelationState s;
    s.tensor[0][0] = cxx;
    s.tensor[1][1] = cyy;
    s.tensor[2][2] = czz;
    return s;
  }

  /// Diagonal tensor and vanishing Bloch vectors (the Bell-diagonal form).
  bool is_bell_diagonal() const noexcept;
  Vec3 diagonal_entries() const noexcept { return {tensor[0][0], tensor[1][1], tensor[2][2]}; }

  friend bool operator==(const CorrelationState&, const CorrelationState&) = default;
};

enum class InitialStateKind { BellSinglet, Werner, GeneralizedWerner };

/// Initial-state family. Werner(x) has c = (x, x, x); the Bell singlet is
/// c = (-1, -1, -1).
struct InitialState {
  InitialStateKind kind = InitialStateKind::BellSinglet;
  Vec3 c{-1.0, -1.0, -1.0};

  static InitialState bell_singlet() { return {InitialStateKind::BellSinglet, {-1, -1, -1}}; }
  static InitialState werner(double x) { return {InitialStateKind::Werner, {x, x, x}}; }
  static InitialState generalized_werner(double cxx, double cyy, double czz) {
    return {InitialStateKind::GeneralizedWerner, {cxx, cyy, czz}};
  }

  CorrelationState correlations() const { return CorrelationState::diagonal(c[0], c[1], c[2]); }

  /// "bell", "werner" or "genwerner".
  std::string_view kind_name() const noexcept;
  /// Round-trippable text form, e.g. "werner(-0.9)".
  std::string to_string() const;
  static InitialState parse(std::string_view text);

  friend bool operator==(const InitialState&, const InitialState&) = default;
};

/// Evolved state plus the largest imaginary part dropped from the correlation
/// tensor. The residue is zero in Unitary mode.
struct EvolvedState {
  CorrelationState state;
  double imag_residue = 0.0;
};

/// C~_kl = A1_k A2_l c_xx + B1_k B2_l c_yy + D1_k D2_l c_zz, i.e.
/// C~ = M1^T diag(c) M2. Complex parts are measured, then dropped.
EvolvedState evolve_correlations(const CorrelationState& c0, const CoefficientMatrix& m1,
                                 const CoefficientMatrix& m2);

ComplexMatrix assemble_density(const CorrelationState& c);

/// Inverse of assemble_density: C_kl = tr(rho s_k(x)s_l), a_k = tr(rho s_k(x)I).
CorrelationState extract_correlations(const ComplexMatrix& rho);

/// Rotating-frame propagator U(t) = exp(-i integral H dt) with
/// H(t) = (delta s_z + omega0 f(t) s_x)/2. Its Heisenberg action
/// U^dag s_k U reproduces the coefficient maps.
ComplexMatrix unitary_oracle(const PulseSpec& p, double t);

/// Classical RK4 integration of dU/dt = -i H(t) U from U(0) = I.
/// Throws StepTooLarge if step > t_end / 10.
ComplexMatrix rk4_oracle(const PulseSpec& p, double t_end, double step = 1e-3);

/// SO(3) map M_kl = (1/2) tr(U^dag s_k U s_l) of a 2x2 unitary.
Mat3 heisenberg_map(const ComplexMatrix& u);

/// Heisenberg-substituted density operator (U1(x)U2)^dag rho0 (U1(x)U2),
/// built from the propagators directly. In Unitary mode its Fano tensor
/// equals evolve_state.
ComplexMatrix conjugated_density(const CorrelationState& c0, const PulseSpec& pulse_a,
                                 const PulseSpec& pulse_b, double t);

EvolvedState evolve_state(const CorrelationState& c0, const PulseSpec& pulse_a,
                          const PulseSpec& pulse_b, double t,
                          CoefficientMode mode = CoefficientMode::Unitary);

}  // namespace pulsent
