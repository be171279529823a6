#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "pulsent/scenarios.hpp"

namespace pulsent {

enum class Command { Sweep, Preset, Negativity, Validate };

std::string_view to_string(Command c) noexcept;
Command parse_command(std::string_view text);

/// Everything one CLI invocation needs. Serialized as flat `key = value`
/// text with `#` comments; unknown keys are rejected.
struct RunManifest {
  Command command = Command::Sweep;
  std::string preset;                        // preset
  SweepConfig sweep;                         // sweep (and resolved preset)
  std::array<double, 3> correlations{0, 0, 0};  // negativity
  std::string output;                        // empty means standard output
  std::uint64_t seed = 1;                    // validate

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

RunManifest parse_manifest(std::string_view text);
std::string format_manifest(const RunManifest& m);

RunManifest read_manifest_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pulsent
