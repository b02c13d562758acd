#pragma once

#include "diamond/analysis.hpp"
#include "diamond/model.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace diamond {

enum class Command { spectrum, state, min, sweep, boundary, figure, selftest };

enum class OutputFormat { csv, jsonl };

// Everything the front end needs after argument parsing.  Axis specs are
// already resolved into Axis structs here so every usage error surfaces
// before any computation starts.
struct RunConfig {
  Command command = Command::state;
  ModelParams params;

  std::string out;                   // empty: stdout
  OutputFormat format = OutputFormat::csv;
  int steps = 201;                   // default resolution for axis specs
  unsigned long long seed = 1;
  bool serial = false;

  std::string pair = "all";          // spectrum: ++, +-, -+, -- or all

  std::vector<Axis> sweep_axes;      // sweep: one or two axes
  Observable observable = Observable::n1;

  Axis scan_axis;                    // boundary
  Axis root_axis;
  double epsilon = 1e-4;

  std::string preset;                // figure
  bool list_presets = false;
};

// Raised for anything that should terminate the run with exit status
// `code`.  code 0 carries help or version text rather than an error.
struct ConfigError : std::runtime_error {
  int code;
  ConfigError(const std::string &msg, int c) : std::runtime_error(msg), code(c) {}
};

// Parses command-line style arguments (program name excluded).
RunConfig parse_config(const std::vector<std::string> &args);

// Full front end: parse, dispatch, write output.  Returns the process
// exit status and reports errors on stderr.
int run_cli(int argc, const char *const *argv);

} // namespace diamond
