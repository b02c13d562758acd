#include "diamond/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace diamond {

namespace {

// "name=lo:hi" or "name=lo:hi:steps"
Axis parse_axis_spec(const std::string &spec, int default_steps, const char *opt) {
  const auto bad = [&](const std::string &why) {
    return ConfigError(std::string(opt) + ": expected name=lo:hi[:steps], got '" + spec +
                           "' (" + why + ")",
                       2);
  };
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw bad("missing name");

  Axis ax;
  ax.name = spec.substr(0, eq);

  std::vector<std::string> parts;
  std::string rest = spec.substr(eq + 1);
  std::size_t pos = 0;
  while (true) {
    const auto colon = rest.find(':', pos);
    parts.push_back(rest.substr(pos, colon - pos));
    if (colon == std::string::npos)
      break;
    pos = colon + 1;
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw bad("need two or three fields after '='");

  const auto number = [&](const std::string &s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size() || !std::isfinite(v))
        throw std::invalid_argument(s);
      return v;
    } catch (const std::exception &) {
      throw bad("malformed number '" + s + "'");
    }
  };
  ax.lo = number(parts[0]);
  ax.hi = number(parts[1]);
  ax.steps = default_steps;
  if (parts.size() == 3) {
    const double raw = number(parts[2]);
    if (raw < 2 || raw != std::floor(raw))
      throw bad("steps must be an integer >= 2");
    ax.steps = static_cast<int>(raw);
  }
  return ax;
}

} // namespace

RunConfig parse_config(const std::vector<std::string> &args) {
  RunConfig rc;

  CLI::App app{"thermal pair correlations of a decorated spin chain"};
  app.name("diamond-min");
  app.set_help_flag("--help", "print help and exit");
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "read key=value defaults from a file");

  app.add_option("--J", rc.params.J, "transverse exchange inside the dimer")
      ->capture_default_str();
  app.add_option("--J1", rc.params.J1, "node-dimer Ising coupling")->capture_default_str();
  app.add_option("--delta", rc.params.delta, "longitudinal anisotropy inside the dimer")
      ->capture_default_str();
  app.add_option("--D", rc.params.D, "antisymmetric exchange strength")->capture_default_str();
  app.add_option("--h", rc.params.h, "longitudinal field")->capture_default_str();

  const CLI::Validator positive_temperature(
      [](std::string &s) -> std::string {
        double v = 0;
        try {
          std::size_t used = 0;
          v = std::stod(s, &used);
          if (used != s.size())
            return "T must be a number";
        } catch (const std::exception &) {
          return "T must be a number";
        }
        if (!(v > 0))
          return "T must be > 0";
        return {};
      },
      "T>0");
  app.add_option("--T", rc.params.T, "temperature")
      ->capture_default_str()
      ->check(positive_temperature);

  app.add_option("--out", rc.out, "write output to this file instead of stdout");
  std::string format_name = "csv";
  app.add_option("--format", format_name, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "jsonl"}));
  app.add_option("--steps", rc.steps, "default number of grid points per axis")
      ->capture_default_str()
      ->check(CLI::Range(2, 10000000));
  app.add_option("--seed", rc.seed, "random seed for the self test")->capture_default_str();
  app.add_flag("--serial", rc.serial, "run single threaded");

  auto *cmd_spectrum =
      app.add_subcommand("spectrum", "energy levels of one plaquette at fixed node spins");
  cmd_spectrum->add_option("--pair", rc.pair, "node spin pair: ++, +-, -+, -- or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"++", "+-", "-+", "--", "all"}));

  auto *cmd_state =
      app.add_subcommand("state", "reduced dimer density matrix in the thermodynamic limit");
  auto *cmd_min = app.add_subcommand("min", "measurement disturbance measures at one point");

  auto *cmd_sweep = app.add_subcommand("sweep", "evaluate an observable over a parameter grid");
  std::vector<std::string> axis_specs;
  cmd_sweep->add_option("--axis", axis_specs,
                        "axis spec name=lo:hi[:steps]; give once or twice");
  std::string observable_spec = "N1";
  cmd_sweep->add_option("--observable", observable_spec, "quantity to evaluate")
      ->capture_default_str()
      ->check(CLI::IsMember(
          {"N1", "N2", "dN1_ddelta", "rho11", "rho22", "rho33", "rho44", "rho23_abs"}));

  auto *cmd_boundary =
      app.add_subcommand("boundary", "trace the level set N1 = epsilon in a parameter plane");
  std::string scan_spec;
  std::string root_spec;
  cmd_boundary->add_option("--scan", scan_spec, "swept axis, name=lo:hi[:steps]")->required();
  cmd_boundary->add_option("--root", root_spec, "axis bisected for the crossing, name=lo:hi[:steps]")
      ->required();
  cmd_boundary->add_option("--epsilon", rc.epsilon, "level-set threshold")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto *cmd_figure = app.add_subcommand("figure", "run a named preset grid");
  cmd_figure->add_option("preset", rc.preset, "preset name (see --list)");
  cmd_figure->add_flag("--list", rc.list_presets, "list available presets and exit");

  auto *cmd_selftest =
      app.add_subcommand("selftest", "cross-check the closed forms against slow references");

  for (auto *sub : {cmd_spectrum, cmd_state, cmd_min, cmd_sweep, cmd_boundary, cmd_figure,
                    cmd_selftest})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    throw ConfigError(app.help(), 0);
  } catch (const CLI::CallForVersion &e) {
    throw ConfigError(std::string(e.what()) + "\n", 0);
  } catch (const CLI::ParseError &e) {
    throw ConfigError(e.what(), e.get_exit_code() == 0 ? 2 : e.get_exit_code());
  }

  rc.format = format_name == "jsonl" ? OutputFormat::jsonl : OutputFormat::csv;
  if (const auto obs = observable_from_name(observable_spec))
    rc.observable = *obs;

  try {
    rc.params.validate_couplings();
    rc.params.validate_thermal();
  } catch (const std::exception &e) {
    throw ConfigError(e.what(), 2);
  }

  if (app.got_subcommand(cmd_spectrum)) {
    rc.command = Command::spectrum;
  } else if (app.got_subcommand(cmd_state)) {
    rc.command = Command::state;
  } else if (app.got_subcommand(cmd_min)) {
    rc.command = Command::min;
  } else if (app.got_subcommand(cmd_sweep)) {
    rc.command = Command::sweep;
    if (axis_specs.empty())
      throw ConfigError("sweep: missing required option --axis (name=lo:hi[:steps])", 2);
    if (axis_specs.size() > 2)
      throw ConfigError("sweep: at most two --axis options are supported", 2);
    for (const auto &spec : axis_specs)
      rc.sweep_axes.push_back(parse_axis_spec(spec, rc.steps, "--axis"));
  } else if (app.got_subcommand(cmd_boundary)) {
    rc.command = Command::boundary;
    rc.scan_axis = parse_axis_spec(scan_spec, rc.steps, "--scan");
    // the root axis only seeds the bracket search; a coarse default is fine
    rc.root_axis = parse_axis_spec(root_spec, 64, "--root");
  } else if (app.got_subcommand(cmd_figure)) {
    rc.command = Command::figure;
    if (!rc.list_presets && rc.preset.empty())
      throw ConfigError("figure: give a preset name or --list", 2);
  } else if (app.got_subcommand(cmd_selftest)) {
    rc.command = Command::selftest;
  }

  return rc;
}

} // namespace diamond
