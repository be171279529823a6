#include "pulsent/manifest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "pulsent/error.hpp"

namespace pulsent {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw Error(ErrorCode::ParseError,
              "bad value for '" + std::string(key) + "': '" + std::string(value) + "'");
}

double to_double(std::string_view key, std::string_view value) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value);
  return v;
}

template <typename Int>
Int to_integer(std::string_view key, std::string_view value) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value);
  return v;
}

std::string num(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<InitialState> parse_states(std::string_view value) {
  std::vector<InitialState> states;
  while (!value.empty()) {
    const auto semi = value.find(';');
    const auto item = trim(value.substr(0, semi));
    if (!item.empty()) states.push_back(InitialState::parse(item));
    if (semi == std::string_view::npos) break;
    value.remove_prefix(semi + 1);
  }
  return states;
}

std::array<double, 3> parse_triple(std::string_view key, std::string_view value) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const auto comma = value.find(',');
    if ((i < 2) == (comma == std::string_view::npos)) bad_value(key, value);
    out[i] = to_double(key, trim(value.substr(0, comma)));
    if (comma != std::string_view::npos) value.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::Sweep: return "sweep";
    case Command::Preset: return "preset";
    case Command::Negativity: return "negativity";
    case Command::Validate: return "validate";
  }
  return "?";
}

Command parse_command(std::string_view text) {
  for (auto c : {Command::Sweep, Command::Preset, Command::Negativity, Command::Validate})
    if (text == to_string(c)) return c;
  throw Error(ErrorCode::ParseError, "unknown command '" + std::string(text) + "'");
}

RunManifest parse_manifest(std::string_view text) {
  RunManifest m;
  m.sweep.initial_states = figure_initial_states();
  SweepConfig& s = m.sweep;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));

    if (key == "command") m.command = parse_command(value);
    else if (key == "preset") m.preset = value;
    else if (key == "output") m.output = value;
    else if (key == "seed") m.seed = to_integer<std::uint64_t>(key, value);
    else if (key == "correlations") m.correlations = parse_triple(key, value);
    else if (key == "name") s.name = value;
    else if (key == "family") s.family = parse_family(value);
    else if (key == "drive") s.drive = parse_drive(value);
    else if (key == "mode") s.mode = parse_mode(value);
    else if (key == "states") s.initial_states = parse_states(value);
    else if (key == "detuning_prime_a") s.detuning_prime[0] = to_double(key, value);
    else if (key == "detuning_prime_b") s.detuning_prime[1] = to_double(key, value);
    else if (key == "rabi_ratio_a") s.rabi_ratio[0] = to_double(key, value);
    else if (key == "rabi_ratio_b") s.rabi_ratio[1] = to_double(key, value);
    else if (key == "rect_omega") s.rect_omega = to_double(key, value);
    else if (key == "grid_start") s.grid.start = to_double(key, value);
    else if (key == "grid_stop") s.grid.stop = to_double(key, value);
    else if (key == "grid_points") s.grid.points = to_integer<int>(key, value);
    else {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  return m;
}

std::string format_manifest(const RunManifest& m) {
  const SweepConfig& s = m.sweep;
  std::ostringstream out;
  out << "# pulsent run manifest\n";
  out << "command = " << to_string(m.command) << '\n';
  if (!m.preset.empty()) out << "preset = " << m.preset << '\n';
  if (!m.output.empty()) out << "output = " << m.output << '\n';
  out << "seed = " << m.seed << '\n';
  out << "correlations = " << num(m.correlations[0]) << ", " << num(m.correlations[1]) << ", "
      << num(m.correlations[2]) << '\n';
  out << "\n# sweep\n";
  if (!s.name.empty()) out << "name = " << s.name << '\n';
  out << "family = " << to_string(s.family) << '\n';
  out << "drive = " << to_string(s.drive) << '\n';
  out << "mode = " << to_string(s.mode) << '\n';
  out << "states = ";
  for (std::size_t i = 0; i < s.initial_states.size(); ++i)
    out << (i ? "; " : "") << s.initial_states[i].to_string();
  out << '\n';
  out << "detuning_prime_a = " << num(s.detuning_prime[0]) << '\n';
  out << "detuning_prime_b = " << num(s.detuning_prime[1]) << '\n';
  out << "rabi_ratio_a = " << num(s.rabi_ratio[0]) << '\n';
  out << "rabi_ratio_b = " << num(s.rabi_ratio[1]) << '\n';
  out << "rect_omega = " << num(s.rect_omega) << '\n';
  out << "grid_start = " << num(s.grid.start) << '\n';
  out << "grid_stop = " << num(s.grid.stop) << '\n';
  out << "grid_points = " << s.grid.points << '\n';
  return out.str();
}

RunManifest read_manifest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace pulsent
