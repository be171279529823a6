#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pulsent/evolution.hpp"
#include "pulsent/pulse.hpp"

namespace pulsent {

enum class SweepFamily { RectVsArea, ExpVsTime, CombinedVsTime };
enum class DriveMode { OneQubit, BothQubits };

std::string_view to_string(SweepFamily f) noexcept;
std::string_view to_string(DriveMode d) noexcept;
SweepFamily parse_family(std::string_view text);
DriveMode parse_drive(std::string_view text);

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int points = 801;

  /// Node i = start + i (stop - start) / (points - 1); the last node is stop.
  double at(int i) const noexcept;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// One sweep in normalized units. Rectangular sweeps measure time in 1/Omega
/// (Omega = 1, grid parameter n = Omega T / 2 pi, delta = delta' Omega).
/// Exponential and combined sweeps measure time in 1/gamma_p (gamma_p = 1,
/// grid parameter T' = gamma_p t, Omega = rabi_ratio).
struct SweepConfig {
  std::string name;  // preset name, empty for custom sweeps
  SweepFamily family = SweepFamily::RectVsArea;
  DriveMode drive = DriveMode::OneQubit;
  CoefficientMode mode = CoefficientMode::Unitary;
  std::vector<InitialState> initial_states;
  std::array<double, 2> detuning_prime{0.0, 0.0};  // RectVsArea, per qubit
  std::array<double, 2> rabi_ratio{5.0, 5.0};      // Omega / gamma_p, per qubit
  double rect_omega = 1.0;                         // CombinedVsTime, qubit a
  Grid grid;

  /// Throws InvalidConfig.
  void validate() const;

  /// Pulses applied to qubits a and b at grid parameter `param`, and the
  /// evaluation time in normalized units.
  std::array<PulseSpec, 2> pulses_at(double param) const;
  double time_at(double param) const;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct SweepRow {
  double param = 0.0;
  std::vector<double> negativity;  // one per initial state
  double imag_residue = 0.0;       // max over initial states
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRow> rows;

  /// Negativity series of one initial state.
  std::vector<double> series(std::size_t state_index) const;
};

/// Evaluates every grid point; output order equals grid order and results are
/// bit-identical across runs.
SweepResult run_sweep(const SweepConfig& cfg);

/// The three figure-caption initial states: Bell singlet, Werner(-0.9),
/// generalized Werner (-0.9, -0.8, -0.7).
std::vector<InitialState> figure_initial_states();

/// fig1a, fig1b, fig2a, fig2b, fig3a, fig3b, fig4a, fig4b, fig5a..fig5d.
std::vector<SweepConfig> paper_figure_presets();

/// Throws UnknownPreset.
SweepConfig find_preset(std::string_view name);

struct Interval {
  double first = 0.0;
  double last = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Maximal runs of consecutive grid nodes where E <= 1e-9.
std::vector<Interval> detect_sudden_death(const SweepResult& result, std::size_t state_index);

/// Header `param,E_<kind>...,imag_residue`; 12 significant digits, '\n' endings.
std::string csv_header(const SweepConfig& cfg);
void write_csv(std::ostream& os, const SweepResult& result);
std::string to_csv(const SweepResult& result);

/// printf("%.12g") with negative zero folded to zero; locale independent.
std::string format_number(double v);

}  // namespace pulsent
