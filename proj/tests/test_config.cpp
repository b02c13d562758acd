#include "diamond/config.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace diamond;

namespace {

RunConfig parse(std::vector<std::string> args) { return parse_config(args); }

// writes content to a scratch config file, returns its path
std::string scratch_config(const std::string &content) {
  const auto path =
      std::filesystem::temp_directory_path() / "diamond_min_cfg_test.ini";
  std::ofstream f(path);
  f << content;
  f.close();
  return path.string();
}

std::string error_text(std::vector<std::string> args, int *code = nullptr) {
  try {
    parse_config(args);
  } catch (const ConfigError &e) {
    if (code)
      *code = e.code;
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("defaults and basic dispatch") {
  const RunConfig rc = parse({"state"});
  CHECK(rc.command == Command::state);
  CHECK(rc.params.T == 0.2);
  CHECK(rc.steps == 201);
  CHECK(rc.format == OutputFormat::csv);
  CHECK_FALSE(rc.serial);

  CHECK(parse({"min"}).command == Command::min);
  CHECK(parse({"selftest", "--seed", "42"}).seed == 42);
  CHECK(parse({"--serial", "state"}).serial);
  CHECK(parse({"--format", "jsonl", "state"}).format == OutputFormat::jsonl);
}

TEST_CASE("parameters parse before or after the subcommand") {
  CHECK(parse({"--T", "0.5", "min"}).params.T == 0.5);
  CHECK(parse({"min", "--T", "0.5"}).params.T == 0.5);
  CHECK(parse({"min", "--J1", "-2.5"}).params.J1 == -2.5);
  CHECK(parse({"min", "--h", "0.75"}).params.h == 0.75);
}

TEST_CASE("temperature domain errors") {
  int code = 0;
  const std::string msg = error_text({"min", "--T", "-1"}, &code);
  CHECK(msg.find("T must be > 0") != std::string::npos);
  CHECK(code != 0);

  CHECK(error_text({"min", "--T", "0"}).find("T must be > 0") != std::string::npos);
  CHECK(error_text({"min", "--T", "abc"}).find("T must be") != std::string::npos);
}

TEST_CASE("unknown options and missing subcommand fail") {
  int code = 0;
  CHECK(!error_text({"min", "--bogus", "1"}, &code).empty());
  CHECK(code != 0);
  CHECK(!error_text({}, &code).empty());
  CHECK(code != 0);
}

TEST_CASE("help and version carry exit code zero") {
  int code = -1;
  const std::string help = error_text({"--help"}, &code);
  CHECK(code == 0);
  CHECK(help.find("Usage") != std::string::npos);
  CHECK(help.find("sweep") != std::string::npos);

  code = -1;
  const std::string sub = error_text({"sweep", "--help"}, &code);
  CHECK(code == 0);
  CHECK(sub.find("--axis") != std::string::npos);

  code = -1;
  const std::string ver = error_text({"--version"}, &code);
  CHECK(code == 0);
  CHECK(ver.find(kVersion) != std::string::npos);
}

TEST_CASE("sweep axis specs") {
  const RunConfig rc =
      parse({"sweep", "--axis", "delta=0:2:11", "--axis", "T=0.1:1"});
  REQUIRE(rc.sweep_axes.size() == 2);
  CHECK(rc.sweep_axes[0].name == "delta");
  CHECK(rc.sweep_axes[0].lo == 0.0);
  CHECK(rc.sweep_axes[0].hi == 2.0);
  CHECK(rc.sweep_axes[0].steps == 11);
  CHECK(rc.sweep_axes[1].steps == 201); // default resolution

  CHECK(parse({"--steps", "17", "sweep", "--axis", "h=0:4"}).sweep_axes[0].steps ==
        17);
  CHECK(parse({"sweep", "--axis", "delta=0:2", "--observable", "rho23_abs"})
            .observable == Observable::rho23_abs);

  // axis names are checked when the sweep runs, not at parse time
  CHECK(parse({"sweep", "--axis", "bogus=0:1"}).sweep_axes[0].name == "bogus");

  CHECK(error_text({"sweep"}).find("--axis") != std::string::npos);
  CHECK(!error_text({"sweep", "--axis", "delta"}).empty());
  CHECK(!error_text({"sweep", "--axis", "delta=0"}).empty());
  CHECK(!error_text({"sweep", "--axis", "delta=a:b"}).empty());
  CHECK(!error_text({"sweep", "--axis", "delta=0:2:2.5"}).empty());
  CHECK(!error_text({"sweep", "--axis", "delta=0:1", "--axis", "h=0:1", "--axis",
                     "T=0.1:1"})
             .empty());
  CHECK(!error_text({"sweep", "--axis", "delta=0:2", "--observable", "bogus"})
             .empty());
}

TEST_CASE("boundary axis specs") {
  const RunConfig rc =
      parse({"boundary", "--scan", "J1=-3:3:13", "--root", "T=0.05:2"});
  CHECK(rc.command == Command::boundary);
  CHECK(rc.scan_axis.name == "J1");
  CHECK(rc.scan_axis.steps == 13);
  CHECK(rc.root_axis.name == "T");
  CHECK(rc.root_axis.steps == 64); // bracket-search default
  CHECK(rc.epsilon == 1e-4);

  CHECK(parse({"boundary", "--scan", "h=0:4", "--root", "T=0.05:2", "--epsilon",
               "1e-3"})
            .epsilon == 1e-3);
  CHECK(!error_text({"boundary", "--root", "T=0.05:2"}).empty());
  CHECK(!error_text({"boundary", "--scan", "h=0:4", "--root", "T=0.05:2",
                     "--epsilon", "-1"})
             .empty());
}

TEST_CASE("figure arguments") {
  CHECK(parse({"figure", "fig3"}).preset == "fig3");
  CHECK(parse({"figure", "--list"}).list_presets);
  CHECK(!error_text({"figure"}).empty());
}

TEST_CASE("spectrum pair choices") {
  CHECK(parse({"spectrum"}).pair == "all");
  CHECK(parse({"spectrum", "--pair", "+-"}).pair == "+-");
  CHECK(!error_text({"spectrum", "--pair", "xx"}).empty());
}

TEST_CASE("config file defaults lose to explicit flags") {
  const std::string path = scratch_config("delta = 2\n");
  CHECK(parse({"--config", path, "state"}).params.delta == 2.0);
  CHECK(parse({"--config", path, "--delta", "3", "state"}).params.delta == 3.0);
  std::remove(path.c_str());
}

TEST_CASE("config file rejects unknown keys and bad values") {
  const std::string bad_key = scratch_config("bogus = 1\n");
  CHECK(error_text({"--config", bad_key, "state"}).find("bogus") !=
        std::string::npos);
  std::remove(bad_key.c_str());

  const std::string bad_t = scratch_config("T = -4\n");
  CHECK(error_text({"--config", bad_t, "state"}).find("T must be > 0") !=
        std::string::npos);
  std::remove(bad_t.c_str());
}

TEST_CASE("non-finite couplings are rejected") {
  CHECK(!error_text({"min", "--J1", "nan"}).empty());
  CHECK(!error_text({"min", "--J", "inf"}).empty());
}
