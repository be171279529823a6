#include "pulsent/scenarios.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include "pulsent/entanglement.hpp"
#include "pulsent/error.hpp"

namespace pulsent {

namespace {

constexpr double kDeathThreshold = 1e-9;

SweepConfig rect_preset(std::string name, DriveMode drive, double detuning_prime) {
  SweepConfig c;
  c.name = std::move(name);
  c.family = SweepFamily::RectVsArea;
  c.drive = drive;
  c.initial_states = figure_initial_states();
  c.detuning_prime = {detuning_prime, drive == DriveMode::BothQubits ? detuning_prime : 0.0};
  c.grid = {0.0, 20.0, 801};
  return c;
}

SweepConfig exp_preset(std::string name, DriveMode drive, double ratio) {
  SweepConfig c;
  c.name = std::move(name);
  c.family = SweepFamily::ExpVsTime;
  c.drive = drive;
  c.initial_states = figure_initial_states();
  c.rabi_ratio = {ratio, ratio};
  c.grid = {0.0, 10.0, 801};
  return c;
}

SweepConfig combined_preset(std::string name, double rect_omega, double ratio) {
  SweepConfig c;
  c.name = std::move(name);
  c.family = SweepFamily::CombinedVsTime;
  c.drive = DriveMode::BothQubits;
  c.initial_states = figure_initial_states();
  c.rabi_ratio = {ratio, ratio};
  c.rect_omega = rect_omega;
  c.grid = {0.0, 10.0, 801};
  return c;
}

}  // namespace

std::string_view to_string(SweepFamily f) noexcept {
  switch (f) {
    case SweepFamily::RectVsArea: return "rect_vs_area";
    case SweepFamily::ExpVsTime: return "exp_vs_time";
    case SweepFamily::CombinedVsTime: return "combined_vs_time";
  }
  return "?";
}

std::string_view to_string(DriveMode d) noexcept {
  return d == DriveMode::OneQubit ? "one" : "both";
}

SweepFamily parse_family(std::string_view text) {
  for (auto f : {SweepFamily::RectVsArea, SweepFamily::ExpVsTime, SweepFamily::CombinedVsTime})
    if (text == to_string(f)) return f;
  throw Error(ErrorCode::ParseError, "unknown sweep family '" + std::string(text) + "'");
}

DriveMode parse_drive(std::string_view text) {
  if (text == "one") return DriveMode::OneQubit;
  if (text == "both") return DriveMode::BothQubits;
  throw Error(ErrorCode::ParseError, "drive must be 'one' or 'both', got '" + std::string(text) + "'");
}

double Grid::at(int i) const noexcept {
  if (i == points - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

void SweepConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
  if (grid.points < 2) fail("grid needs at least 2 points");
  if (!(grid.start >= 0.0) || !(grid.stop > grid.start) || !std::isfinite(grid.stop)) {
    fail("grid must satisfy stop > start >= 0");
  }
  if (initial_states.empty()) fail("at least one initial state is required");
  for (double d : detuning_prime)
    if (!std::isfinite(d)) fail("detuning must be finite");
  for (double r : rabi_ratio)
    if (!(r >= 0.0) || !std::isfinite(r)) fail("rabi ratio must be finite and >= 0");
  if (!(rect_omega >= 0.0) || !std::isfinite(rect_omega)) fail("rect_omega must be >= 0");
  if (family == SweepFamily::CombinedVsTime && drive != DriveMode::BothQubits) {
    fail("combined sweeps drive both qubits");
  }
}

std::array<PulseSpec, 2> SweepConfig::pulses_at(double param) const {
  std::array<PulseSpec, 2> pulses{PulseSpec::none(), PulseSpec::none()};
  const int driven = drive == DriveMode::BothQubits ? 2 : 1;
  switch (family) {
    case SweepFamily::RectVsArea: {
      // Omega = 1, so T = 2 pi n. A zero-area pulse leaves the qubit untouched.
      const double duration = 2.0 * std::numbers::pi * param;
      if (duration == 0.0) break;
      for (int j = 0; j < driven; ++j)
        pulses[j] = PulseSpec::rectangular(1.0, detuning_prime[j], duration);
      break;
    }
    case SweepFamily::ExpVsTime:
      for (int j = 0; j < driven; ++j) pulses[j] = PulseSpec::exponential(rabi_ratio[j], 1.0);
      break;
    case SweepFamily::CombinedVsTime:
      // The rectangular window spans the whole time grid.
      pulses[0] = PulseSpec::rectangular(rect_omega, 0.0, grid.stop);
      pulses[1] = PulseSpec::exponential(rabi_ratio[1], 1.0);
      break;
  }
  return pulses;
}

double SweepConfig::time_at(double param) const {
  return family == SweepFamily::RectVsArea ? 2.0 * std::numbers::pi * param : param;
}

std::vector<double> SweepResult::series(std::size_t state_index) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.negativity.at(state_index));
  return out;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  std::vector<CorrelationState> initial;
  for (const auto& s : cfg.initial_states) initial.push_back(s.correlations());

  SweepResult result{cfg, {}};
  result.rows.reserve(static_cast<std::size_t>(cfg.grid.points));
  for (int i = 0; i < cfg.grid.points; ++i) {
    const double param = cfg.grid.at(i);
    const auto pulses = cfg.pulses_at(param);
    const double t = cfg.time_at(param);

    SweepRow row{param, {}, 0.0};
    row.negativity.reserve(initial.size());
    for (const auto& c0 : initial) {
      const EvolvedState evolved = evolve_state(c0, pulses[0], pulses[1], t, cfg.mode);
      row.negativity.push_back(negativity(evolved).value);
      row.imag_residue = std::max(row.imag_residue, evolved.imag_residue);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::vector<InitialState> figure_initial_states() {
  return {InitialState::bell_singlet(), InitialState::werner(-0.9),
          InitialState::generalized_werner(-0.9, -0.8, -0.7)};
}

std::vector<SweepConfig> paper_figure_presets() {
  return {
      rect_preset("fig1a", DriveMode::OneQubit, 0.0),
      rect_preset("fig1b", DriveMode::OneQubit, 1.0),
      rect_preset("fig2a", DriveMode::BothQubits, 0.0),
      rect_preset("fig2b", DriveMode::BothQubits, 5.0),
      exp_preset("fig3a", DriveMode::OneQubit, 5.0),
      exp_preset("fig3b", DriveMode::OneQubit, 10.0),
      exp_preset("fig4a", DriveMode::BothQubits, 5.0),
      exp_preset("fig4b", DriveMode::BothQubits, 10.0),
      combined_preset("fig5a", 1.0, 5.0),
      combined_preset("fig5b", 2.0, 5.0),
      combined_preset("fig5c", 1.0, 10.0),
      combined_preset("fig5d", 2.0, 10.0),
  };
}

SweepConfig find_preset(std::string_view name) {
  for (auto& p : paper_figure_presets())
    if (p.name == name) return p;
  throw Error(ErrorCode::UnknownPreset, "no preset named '" + std::string(name) + "'");
}

std::vector<Interval> detect_sudden_death(const SweepResult& result, std::size_t state_index) {
  std::vector<Interval> out;
  bool open = false;
  for (const auto& row : result.rows) {
    const bool dead = row.negativity.at(state_index) <= kDeathThreshold;
    if (dead && !open) {
      out.push_back({row.param, row.param});
      open = true;
    } else if (dead) {
      out.back().last = row.param;
    } else {
      open = false;
    }
  }
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_header(const SweepConfig& cfg) {
  std::string header = "param";
  std::map<std::string_view, int> seen;
  for (const auto& s : cfg.initial_states) {
    const int count = ++seen[s.kind_name()];
    header += ",E_";
    header += s.kind_name();
    if (count > 1) header += "_" + std::to_string(count);
  }
  header += ",imag_residue";
  return header;
}

void write_csv(std::ostream& os, const SweepResult& result) {
  os << csv_header(result.config) << '\n';
  for (const auto& row : result.rows) {
    os << format_number(row.param);
    for (double e : row.negativity) os << ',' << format_number(e);
    os << ',' << format_number(row.imag_residue) << '\n';
  }
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream os;
  write_csv(os, result);
  return os.str();
}

}  // namespace pulsent
