#include "pulsent/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "pulsent/entanglement.hpp"
#include "pulsent/error.hpp"
#include "pulsent/manifest.hpp"
#include "pulsent/scenarios.hpp"
#include "pulsent/validation.hpp"

namespace pulsent::cli {

namespace {

bool use_color(const std::ostream& err) {
  return &err == &std::cerr && std::getenv("NO_COLOR") == nullptr && ::isatty(STDERR_FILENO);
}

void report(std::ostream& err, const std::string& what) {
  if (use_color(err)) {
    err << "\033[31merror:\033[0m " << what << '\n';
  } else {
    err << "error: " << what << '\n';
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownPreset: return kUnknownPreset;
    case ErrorCode::IoError: return kIoError;
    default: return kParseFailure;
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string fixed12(double v) {
  if (v == 0.0) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

int do_sweep(RunManifest manifest, const std::optional<std::string>& mode,
             const std::optional<std::string>& out_path, const std::string& write_config,
             std::ostream& out) {
  if (mode) manifest.sweep.mode = parse_mode(*mode);
  if (out_path) manifest.output = *out_path;
  if (!write_config.empty()) write_text_file(write_config, format_manifest(manifest));
  emit(to_csv(run_sweep(manifest.sweep)), manifest.output, out);
  return kOk;
}

int do_negativity(const std::vector<std::string>& values, std::ostream& out, std::ostream& err) {
  double c[3];
  for (int i = 0; i < 3; ++i) {
    std::size_t used = 0;
    try {
      c[i] = std::stod(values[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != values[i].size()) {
      report(err, "cannot parse correlation '" + values[i] + "'");
      return kParseFailure;
    }
  }
  const ComplexMatrix rho = assemble_density(CorrelationState::diagonal(c[0], c[1], c[2]));
  if (!is_physical(rho)) {
    report(err, "UnphysicalState: density matrix has eigenvalue " +
                    format_number(min_eigenvalue(rho)));
    return kUnphysicalState;
  }
  const NegativityResult r = negativity(rho);
  for (int i = 0; i < 4; ++i) out << "mu" << (i + 1) << " = " << fixed12(r.eigenvalues[i]) << '\n';
  out << "E = " << fixed12(r.value) << '\n';
  return kOk;
}

int do_validate(std::uint64_t seed, bool tamper, std::ostream& out, std::ostream& err) {
  const auto checks = run_validation({seed, tamper});
  write_validation_report(out, checks, literal_mode_diagnostics());
  for (const auto& c : checks) {
    if (!c.passed()) {
      report(err, "validation check '" + c.name + "' failed: max_error " +
                      format_number(c.max_error) + " > tolerance " + format_number(c.tolerance));
      return kValidationFailed;
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement of a pulse-driven qubit pair: sweeps, negativity, validation",
               "pulsent"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::optional<std::string> mode;
  std::optional<std::string> out_path;
  std::string write_config;
  auto* sweep = app.add_subcommand("sweep", "Run a sweep described by a config file");
  sweep->add_option("--config", config_path, "key = value config file")->required();
  sweep->add_option("--mode", mode, "literal | unitary (overrides the config)");
  sweep->add_option("--out", out_path, "CSV output path (default: standard output)");
  sweep->add_option("--write-config", write_config, "Write the resolved manifest here");

  std::string preset_name;
  auto* preset = app.add_subcommand("preset", "Run a named figure preset");
  preset->add_option("name", preset_name, "fig1a ... fig5d")->required();
  preset->add_option("--mode", mode, "literal | unitary (default unitary)");
  preset->add_option("--out", out_path, "CSV output path (default: standard output)");
  preset->add_option("--write-config", write_config, "Write the resolved manifest here");

  std::vector<std::string> correlations;
  auto* neg = app.add_subcommand("negativity", "Negativity of a Bell-diagonal state");
  neg->add_option("correlations", correlations, "c_xx c_yy c_zz")->expected(3)->required();

  std::uint64_t seed = 1;
  bool tamper = false;
  auto* validate = app.add_subcommand("validate", "Run the oracle and invariant checks");
  validate->add_option("--seed", seed, "Seed for randomized cases");
  validate->add_flag("--tamper-tolerance", tamper)->group("");

  // CLI11 parses in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report(err, e.what());
    return kParseFailure;
  }

  try {
    if (*sweep) {
      RunManifest manifest = read_manifest_file(config_path);
      if (manifest.command != Command::Sweep) {
        throw Error(ErrorCode::InvalidConfig, "config command must be 'sweep'");
      }
      return do_sweep(std::move(manifest), mode, out_path, write_config, out);
    }
    if (*preset) {
      RunManifest manifest;
      manifest.command = Command::Sweep;
      manifest.preset = preset_name;
      manifest.sweep = find_preset(preset_name);
      return do_sweep(std::move(manifest), mode, out_path, write_config, out);
    }
    if (*neg) return do_negativity(correlations, out, err);
    if (*validate) return do_validate(seed, tamper, out, err);
  } catch (const Error& e) {
    report(err, e.what());
    return exit_code_for(e.code());
  }
  return kParseFailure;
}

}  // namespace pulsent::cli
