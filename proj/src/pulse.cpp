#include "pulsent/pulse.hpp"

#include <cmath>
#include <string>

#include "pulsent/error.hpp"

namespace pulsent {

namespace {

// A and B rows from C+, C-, C_z exactly as the printed relations read,
// including B_y = i B_x and B_z = -i A_z.
CoefficientMatrix literal_map(const IntermediateCoefficients& ic, const Vec3& d_row) {
  const Complex sum = ic.c_plus + ic.c_minus;
  const Complex diff = ic.c_plus - ic.c_minus;

  const Complex a_x = 0.5 * (sum + std::conj(sum));
  const Complex a_y = 0.5 * kI * (diff - std::conj(diff));
  const Complex a_z = 0.5 * (ic.c_z + std::conj(ic.c_z));
  const Complex b_x = -0.5 * kI * (sum - std::conj(sum));
  const Complex b_y = kI * b_x;
  const Complex b_z = -kI * a_z;

  CoefficientMatrix m;
  m.mode = CoefficientMode::Literal;
  m.rows[0] = {a_x, a_y, a_z};
  m.rows[1] = {b_x, b_y, b_z};
  m.rows[2] = {d_row[0], d_row[1], d_row[2]};
  return m;
}

void require_shape(const PulseSpec& p, PulseShape shape) {
  if (p.shape != shape) {
    throw Error(ErrorCode::InvalidPulse, "expected " + std::string(to_string(shape)) +
                                             " pulse, got " + std::string(to_string(p.shape)));
  }
}

void require_window(const PulseSpec& p, double t) {
  if (!(t >= 0.0 && t <= p.duration)) {
    throw Error(ErrorCode::OutOfWindow, "t = " + std::to_string(t) + " outside [0, " +
                                            std::to_string(p.duration) + "]");
  }
}

void require_resonance(const PulseSpec& p) {
  if (p.delta != 0.0) {
    throw Error(ErrorCode::ResonanceRequired,
                "exponential pulse coefficients exist only at zero detuning");
  }
}

}  // namespace

std::string_view to_string(PulseShape shape) noexcept {
  switch (shape) {
    case PulseShape::None: return "none";
    case PulseShape::Rectangular: return "rectangular";
    case PulseShape::Exponential: return "exponential";
  }
  return "?";
}

std::string_view to_string(CoefficientMode mode) noexcept {
  return mode == CoefficientMode::Literal ? "literal" : "unitary";
}

CoefficientMode parse_mode(std::string_view text) {
  if (text == "literal") return CoefficientMode::Literal;
  if (text == "unitary") return CoefficientMode::Unitary;
  throw Error(ErrorCode::ParseError, "mode must be 'literal' or 'unitary', got '" +
                                         std::string(text) + "'");
}

void PulseSpec::validate() const {
  if (!std::isfinite(omega0) || !std::isfinite(delta) || !std::isfinite(duration) ||
      !std::isfinite(gamma)) {
    throw Error(ErrorCode::InvalidPulse, "non-finite pulse parameter");
  }
  if (omega0 < 0.0) throw Error(ErrorCode::InvalidPulse, "Rabi frequency must be >= 0");
  if (shape == PulseShape::Rectangular && !(duration > 0.0)) {
    throw Error(ErrorCode::InvalidPulse, "rectangular pulse needs duration T > 0");
  }
  if (shape == PulseShape::Exponential && !(gamma > 0.0)) {
    throw Error(ErrorCode::InvalidPulse, "exponential pulse needs gamma_p > 0");
  }
}

double envelope(const PulseSpec& p, double t) {
  switch (p.shape) {
    case PulseShape::Rectangular: return (t >= 0.0 && t <= p.duration) ? 1.0 : 0.0;
    case PulseShape::Exponential: return t >= 0.0 ? std::exp(-p.gamma * t) : 0.0;
    case PulseShape::None: return 0.0;
  }
  return 0.0;
}

Mat3 CoefficientMatrix::real_part() const noexcept {
  Mat3 m{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m[r][c] = rows[r][c].real();
  return m;
}

double CoefficientMatrix::max_imag() const noexcept {
  double worst = 0.0;
  for (const auto& row : rows)
    for (const Complex& z : row) worst = std::max(worst, std::abs(z.imag()));
  return worst;
}

double CoefficientMatrix::orthogonality_defect() const noexcept {
  const Mat3 m = real_part();
  return max_abs_diff(multiply(transpose(m), m), identity3());
}

CoefficientMatrix CoefficientMatrix::from_real(const Mat3& m, CoefficientMode mode) {
  CoefficientMatrix out;
  out.mode = mode;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.rows[r][c] = m[r][c];
  return out;
}

double generalized_rabi(const PulseSpec& p) noexcept { return std::hypot(p.omega0, p.delta); }

double exp_pulse_angle(const PulseSpec& p, double t) {
  require_shape(p, PulseShape::Exponential);
  p.validate();
  if (t < 0.0) throw Error(ErrorCode::OutOfWindow, "exponential pulse starts at t = 0");
  if (t == 0.0) return 0.0;
  return (p.omega0 / p.gamma) * -std::expm1(-p.gamma * t);
}

IntermediateCoefficients rect_intermediates(const PulseSpec& p, double t) {
  require_shape(p, PulseShape::Rectangular);
  p.validate();
  require_window(p, t);
  const double w1 = generalized_rabi(p);
  if (w1 == 0.0) return {1.0, 0.0, 0.0};

  const double r = p.omega0 / w1;
  const double d = p.delta / w1;
  const double c = std::cos(w1 * t);
  const double s = std::sin(w1 * t);
  const double w1_sq = w1 * w1;

  const Complex c_plus =
      0.5 * (r * r + ((p.delta * p.delta + w1_sq) / w1_sq) * c) + kI * (d * s);
  const Complex c_minus = 0.5 * r * r * (1.0 - c);
  const Complex c_z = (p.delta * p.omega0 / w1_sq) * (1.0 - c) - kI * (r * s);
  return {c_plus, c_minus, c_z};
}

IntermediateCoefficients exp_intermediates(const PulseSpec& p, double t) {
  require_resonance(p);
  const double lambda = exp_pulse_angle(p, t);
  return {0.5 * (1.0 + std::cos(lambda)), 0.5 * (1.0 - std::cos(lambda)),
          -kI * std::sin(lambda)};
}

Vec3 published_d_row(const PulseSpec& p, double t) {
  switch (p.shape) {
    case PulseShape::Rectangular: {
      require_window(p, t);
      p.validate();
      const double w1 = generalized_rabi(p);
      if (w1 == 0.0) return {0.0, 0.0, 1.0};
      const double c = std::cos(w1 * t);
      const double s = std::sin(w1 * t);
      const double w1_sq = w1 * w1;
      return {(p.delta * p.omega0 / w1_sq) * (1.0 - c), (p.omega0 / w1) * s,
              (p.omega0 * p.omega0 * c + p.delta * p.delta) / w1_sq};
    }
    case PulseShape::Exponential: {
      require_resonance(p);
      const double lambda = exp_pulse_angle(p, t);
      return {0.0, std::sin(lambda), std::cos(lambda)};
    }
    case PulseShape::None: return {0.0, 0.0, 1.0};
  }
  return {0.0, 0.0, 1.0};
}

CoefficientMatrix rect_coefficients(const PulseSpec& p, double t, CoefficientMode mode) {
  const IntermediateCoefficients ic = rect_intermediates(p, t);
  if (mode == CoefficientMode::Literal) return literal_map(ic, published_d_row(p, t));

  const double w1 = generalized_rabi(p);
  if (w1 == 0.0) return undriven_coefficients(mode);
  const Vec3 axis{p.omega0 / w1, 0.0, p.delta / w1};
  return CoefficientMatrix::from_real(rotation_matrix(axis, w1 * t), mode);
}

CoefficientMatrix exp_coefficients(const PulseSpec& p, double t, CoefficientMode mode) {
  require_resonance(p);
  if (mode == CoefficientMode::Literal) {
    return literal_map(exp_intermediates(p, t), published_d_row(p, t));
  }
  return CoefficientMatrix::from_real(rotation_matrix({1.0, 0.0, 0.0}, exp_pulse_angle(p, t)),
                                      mode);
}

CoefficientMatrix undriven_coefficients(CoefficientMode mode) {
  return CoefficientMatrix::from_real(identity3(), mode);
}

CoefficientMatrix coefficients(const PulseSpec& p, double t, CoefficientMode mode) {
  switch (p.shape) {
    case PulseShape::Rectangular: return rect_coefficients(p, t, mode);
    case PulseShape::Exponential: return exp_coefficients(p, t, mode);
    case PulseShape::None: return undriven_coefficients(mode);
  }
  return undriven_coefficients(mode);
}

}  // namespace pulsent
