#include "pulsent/evolution.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "pulsent/error.hpp"
#include "pulsent/pauli.hpp"

namespace pulsent {

namespace {

using Mat2 = std::array<Complex, 4>;  // row-major 2x2

Mat2 mul(const Mat2& a, const Mat2& b) noexcept {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 axpy(const Mat2& x, Complex s, const Mat2& y) noexcept {
  return {x[0] + s * y[0], x[1] + s * y[1], x[2] + s * y[2], x[3] + s * y[3]};
}

// -i H(t) with H = (delta s_z + omega0 f(t) s_x) / 2.
Mat2 generator(const PulseSpec& p, double t) {
  if (p.shape == PulseShape::None) return {};
  const double half_delta = 0.5 * p.delta;
  const double half_rabi = 0.5 * p.omega0 * envelope(p, t);
  return {-kI * half_delta, -kI * half_rabi, -kI * half_rabi, kI * half_delta};
}

// cos(theta/2) I - i sin(theta/2) (n . sigma)
ComplexMatrix spin_rotation(const Vec3& n, double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return ComplexMatrix(2, 2,
                       {Complex{c, -s * n[2]}, Complex{-s * n[1], -s * n[0]},
                        Complex{s * n[1], -s * n[0]}, Complex{c, s * n[2]}});
}

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::string format_shortest(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

bool CorrelationState::is_bell_diagonal() const noexcept {
  for (int k = 0; k < 3; ++k) {
    if (bloch_a[k] != 0.0 || bloch_b[k] != 0.0) return false;
    for (int l = 0; l < 3; ++l)
      if (k != l && tensor[k][l] != 0.0) return false;
  }
  return true;
}

std::string_view InitialState::kind_name() const noexcept {
  switch (kind) {
    case InitialStateKind::BellSinglet: return "bell";
    case InitialStateKind::Werner: return "werner";
    case InitialStateKind::GeneralizedWerner: return "genwerner";
  }
  return "?";
}

std::string InitialState::to_string() const {
  switch (kind) {
    case InitialStateKind::BellSinglet: return "bell";
    case InitialStateKind::Werner: return "werner(" + format_shortest(c[0]) + ")";
    case InitialStateKind::GeneralizedWerner:
      return "genwerner(" + format_shortest(c[0]) + "," + format_shortest(c[1]) + "," +
             format_shortest(c[2]) + ")";
  }
  return "?";
}

InitialState InitialState::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "bell") return bell_singlet();

  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw Error(ErrorCode::ParseError, "unrecognized initial state '" + std::string(text) + "'");
  }
  const std::string_view name = text.substr(0, open);
  std::string_view args = text.substr(open + 1, text.size() - open - 2);
  std::vector<double> values;
  while (true) {
    const auto comma = args.find(',');
    values.push_back(parse_double(args.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  if (name == "werner" && values.size() == 1) return werner(values[0]);
  if (name == "genwerner" && values.size() == 3)
    return generalized_werner(values[0], values[1], values[2]);
  throw Error(ErrorCode::ParseError, "unrecognized initial state '" + std::string(text) + "'");
}

EvolvedState evolve_correlations(const CorrelationState& c0, const CoefficientMatrix& m1,
                                 const CoefficientMatrix& m2) {
  if (!c0.is_bell_diagonal()) {
    throw Error(ErrorCode::NonDiagonalInput,
                "coefficient transform needs a diagonal tensor with zero Bloch vectors");
  }
  const Vec3 c = c0.diagonal_entries();
  EvolvedState out;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      Complex v = 0.0;
      for (int m = 0; m < 3; ++m) v += m1.rows[m][k] * m2.rows[m][l] * c[m];
      out.state.tensor[k][l] = v.real();
      out.imag_residue = std::max(out.imag_residue, std::abs(v.imag()));
    }
  }
  return out;
}

ComplexMatrix assemble_density(const CorrelationState& c) {
  const ComplexMatrix& id = PauliBasis::standard().identity;
  ComplexMatrix rho = ComplexMatrix::identity(4);
  for (int k = 0; k < 3; ++k) {
    if (c.bloch_a[k] != 0.0) rho = rho + Complex{c.bloch_a[k]} * kron(pauli(k), id);
    if (c.bloch_b[k] != 0.0) rho = rho + Complex{c.bloch_b[k]} * kron(id, pauli(k));
    for (int l = 0; l < 3; ++l) {
      if (c.tensor[k][l] != 0.0) rho = rho + Complex{c.tensor[k][l]} * kron(pauli(k), pauli(l));
    }
  }
  return Complex{0.25} * rho;
}

CorrelationState extract_correlations(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw Error(ErrorCode::DimensionMismatch, "two-qubit density matrix must be 4x4");
  }
  const ComplexMatrix& id = PauliBasis::standard().identity;
  CorrelationState s;
  for (int k = 0; k < 3; ++k) {
    s.bloch_a[k] = (rho * kron(pauli(k), id)).trace().real();
    s.bloch_b[k] = (rho * kron(id, pauli(k))).trace().real();
    for (int l = 0; l < 3; ++l) s.tensor[k][l] = (rho * kron(pauli(k), pauli(l))).trace().real();
  }
  return s;
}

ComplexMatrix unitary_oracle(const PulseSpec& p, double t) {
  p.validate();
  switch (p.shape) {
    case PulseShape::None: return ComplexMatrix::identity(2);
    case PulseShape::Rectangular: {
      if (!(t >= 0.0 && t <= p.duration)) {
        throw Error(ErrorCode::OutOfWindow, "t outside the rectangular pulse window");
      }
      const double w1 = generalized_rabi(p);
      if (w1 == 0.0) return ComplexMatrix::identity(2);
      return spin_rotation({p.omega0 / w1, 0.0, p.delta / w1}, w1 * t);
    }
    case PulseShape::Exponential:
      if (p.delta != 0.0) {
        throw Error(ErrorCode::ResonanceRequired, "closed-form propagator needs zero detuning");
      }
      return spin_rotation({1.0, 0.0, 0.0}, exp_pulse_angle(p, t));
  }
  return ComplexMatrix::identity(2);
}

ComplexMatrix rk4_oracle(const PulseSpec& p, double t_end, double step) {
  p.validate();
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw Error(ErrorCode::InvalidConfig, "t_end must be finite and >= 0");
  }
  if (t_end == 0.0) return ComplexMatrix::identity(2);
  if (!(step > 0.0)) throw Error(ErrorCode::InvalidConfig, "step must be > 0");
  if (step > t_end / 10.0) {
    throw Error(ErrorCode::StepTooLarge,
                "step " + std::to_string(step) + " exceeds t_end/10 = " + std::to_string(t_end / 10));
  }

  const auto n_steps = static_cast<long>(std::ceil(t_end / step - 1e-9));
  const double h = t_end / static_cast<double>(n_steps);
  Mat2 u{1.0, 0.0, 0.0, 1.0};
  for (long i = 0; i < n_steps; ++i) {
    const double t = h * static_cast<double>(i);
    // Clamp so rounding never pushes the last stage past a rectangular window's edge.
    const double t_mid = std::min(t + 0.5 * h, t_end);
    const double t_next = i + 1 == n_steps ? t_end : std::min(t + h, t_end);
    const Mat2 k1 = mul(generator(p, t), u);
    const Mat2 k2 = mul(generator(p, t_mid), axpy(u, 0.5 * h, k1));
    const Mat2 k3 = mul(generator(p, t_mid), axpy(u, 0.5 * h, k2));
    const Mat2 k4 = mul(generator(p, t_next), axpy(u, h, k3));
    for (int j = 0; j < 4; ++j) u[j] += (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
  return ComplexMatrix(2, 2, {u[0], u[1], u[2], u[3]});
}

Mat3 heisenberg_map(const ComplexMatrix& u) {
  const ComplexMatrix u_dag = u.adjoint();
  Mat3 m{};
  for (int k = 0; k < 3; ++k) {
    const ComplexMatrix evolved = u_dag * pauli(k) * u;
    for (int l = 0; l < 3; ++l) m[k][l] = 0.5 * (evolved * pauli(l)).trace().real();
  }
  return m;
}

ComplexMatrix conjugated_density(const CorrelationState& c0, const PulseSpec& pulse_a,
                                 const PulseSpec& pulse_b, double t) {
  const ComplexMatrix k = kron(unitary_oracle(pulse_a, t), unitary_oracle(pulse_b, t));
  return k.adjoint() * assemble_density(c0) * k;
}

EvolvedState evolve_state(const CorrelationState& c0, const PulseSpec& pulse_a,
                          const PulseSpec& pulse_b, double t, CoefficientMode mode) {
  pulse_a.validate();
  pulse_b.validate();
  return evolve_correlations(c0, coefficients(pulse_a, t, mode), coefficients(pulse_b, t, mode));
}

}  // namespace pulsent
