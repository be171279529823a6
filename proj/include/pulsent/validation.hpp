#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pulsent {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed() const noexcept { return max_error <= tolerance; }
};

struct ValidationOptions {
  std::uint64_t seed = 1;
  /// Test hook: makes every tolerance negative so each check fails.
  bool tamper_tolerance = false;
};

/// Oracle-equivalence and invariant checks run end to end. Random cases are
/// drawn from a generator seeded with `seed`; the checks themselves do not
/// depend on it.
std::vector<CheckResult> run_validation(const ValidationOptions& opts);

/// How far each preset departs from its initial negativity when run in
/// literal mode, with the two measures of that map's non-physicality.
struct LiteralDiagnostic {
  std::string preset;
  double max_departure = 0.0;         // max |E - E(0 map)| over grid and states
  double max_imag_residue = 0.0;
  double max_orthogonality_defect = 0.0;
};

std::vector<LiteralDiagnostic> literal_mode_diagnostics();

/// Writes `check,max_error,tolerance,status` lines followed by `#` notes.
void write_validation_report(std::ostream& os, const std::vector<CheckResult>& checks,
                             const std::vector<LiteralDiagnostic>& literal = {});

}  // namespace pulsent
