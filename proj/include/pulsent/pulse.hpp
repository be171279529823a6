#pragma once

#include <string_view>

#include "pulsent/linalg.hpp"

namespace pulsent {

enum class PulseShape { None, Rectangular, Exponential };

/// Literal reproduces the printed Heisenberg relations term by term, complex
/// B row included. Unitary replaces the map by the exact SO(3) rotation of the
/// rotating-frame propagator; its D row is the published one.
enum class CoefficientMode { Literal, Unitary };

std::string_view to_string(PulseShape shape) noexcept;
std::string_view to_string(CoefficientMode mode) noexcept;
CoefficientMode parse_mode(std::string_view text);

/// Drive on a single qubit, in rotating-frame units. Only the detuning
/// delta = omega_atom - omega_laser enters; the optical frequencies do not.
struct PulseSpec {
  PulseShape shape = PulseShape::None;
  double omega0 = 0.0;    // Rabi frequency
  double delta = 0.0;     // detuning
  double duration = 0.0;  // T, rectangular only
  double gamma = 0.0;     // gamma_p, exponential only

  static PulseSpec none() { return {}; }
  static PulseSpec rectangular(double omega0, double delta, double duration) {
    return {PulseShape::Rectangular, omega0, delta, duration, 0.0};
  }
  static PulseSpec exponential(double omega0, double gamma) {
    return {PulseShape::Exponential, omega0, 0.0, 0.0, gamma};
  }

  /// Throws InvalidPulse on negative Rabi frequency, non-positive T or
  /// gamma_p for the matching shape, or non-finite fields.
  void validate() const;

  friend bool operator==(const PulseSpec&, const PulseSpec&) = default;
};

/// Dimensionless envelope f(t): 1 on [0, T] for rectangular, exp(-gamma t)
/// for t >= 0 for exponential, 0 otherwise.
double envelope(const PulseSpec& p, double t);

/// C+, C-, C_z of the rectangular and exponential solutions.
struct IntermediateCoefficients {
  Complex c_plus;
  Complex c_minus;
  Complex c_z;
};

/// Heisenberg map of one qubit: sigma_k(t) = sum_l row_k[l] sigma_l(0) with
/// rows A (k = x), B (k = y), D (k = z).
struct CoefficientMatrix {
  CoefficientMode mode = CoefficientMode::Unitary;
  std::array<CVec3, 3> rows{};

  const CVec3& a_row() const noexcept { return rows[0]; }
  const CVec3& b_row() const noexcept { return rows[1]; }
  const CVec3& d_row() const noexcept { return rows[2]; }

  Mat3 real_part() const noexcept;
  double max_imag() const noexcept;
  /// max |(M^T M - I)_kl| of the real part; 0 for a rotation.
  double orthogonality_defect() const noexcept;

  static CoefficientMatrix from_real(const Mat3& m, CoefficientMode mode);
};

/// Omega_1 = sqrt(Omega_0^2 + Delta^2).
double generalized_rabi(const PulseSpec& p) noexcept;

/// Accumulated exponential-pulse angle (Omega/gamma)(1 - exp(-gamma t)).
double exp_pulse_angle(const PulseSpec& p, double t);

IntermediateCoefficients rect_intermediates(const PulseSpec& p, double t);
IntermediateCoefficients exp_intermediates(const PulseSpec& p, double t);

/// Published D row (D_x, D_y, D_z) for either pulse shape.
Vec3 published_d_row(const PulseSpec& p, double t);

/// Throws OutOfWindow when t lies outside [0, T].
CoefficientMatrix rect_coefficients(const PulseSpec& p, double t,
                                    CoefficientMode mode = CoefficientMode::Unitary);

/// Resonant exponential pulse; throws ResonanceRequired if delta != 0.
CoefficientMatrix exp_coefficients(const PulseSpec& p, double t,
                                   CoefficientMode mode = CoefficientMode::Unitary);

CoefficientMatrix undriven_coefficients(CoefficientMode mode = CoefficientMode::Unitary);

/// Dispatches on the pulse shape.
CoefficientMatrix coefficients(const PulseSpec& p, double t,
                               CoefficientMode mode = CoefficientMode::Unitary);

}  // namespace pulsent
