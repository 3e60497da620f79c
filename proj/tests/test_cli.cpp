#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cpl/algebra/error.hpp"
#include "cpl/cli/acceptance.hpp"
#include "cpl/cli/experiment.hpp"
#include "cpl/cli/presets.hpp"

using namespace cpl;
using namespace cpl::cli;

namespace {

ExperimentConfig preset_config(const std::string& command, const std::string& preset) {
  ExperimentConfig c;
  c.command = command;
  c.preset = preset;
  return c;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(CPL_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("every embedded preset is period-1 and round-trips through the builder") {
  const auto names = preset_names();
  CHECK(names.size() == 8);
  for (const auto& name : names) {
    auto check = check_preset(load_preset(name));
    CHECK_MESSAGE(check.ok(), name << ": " << check.witness);
  }
}

TEST_CASE("preset JSON round-trip") {
  auto p = load_preset("somos6");
  auto q = preset_from_json(to_json(p));
  CHECK(q.matrix == p.matrix);
  CHECK(q.tuple == p.tuple);
  CHECK(q.provenance == p.provenance);
}

TEST_CASE("corrupted preset matrix reports a period-1 witness") {
  auto p = load_preset("somos4");
  auto b = p.matrix.matrix();
  b(0, 1) = b(0, 1) + 1;
  b(1, 0) = b(1, 0) - 1;
  p.matrix = quiver::ExchangeMatrix(b);
  auto check = check_preset(p);
  CHECK_FALSE(check.period1);
  CHECK_FALSE(check.witness.empty());
  auto summary = verify_suite("builder", 1, {p});
  CHECK(summary.blocking_failures() >= 1);
}

TEST_CASE("Somos-4 orbit with 12 terms ends at 8209") {
  auto cfg = preset_config("run-t", "somos4");
  cfg.steps = 12;
  auto r = run_experiment(cfg);
  CHECK(r.report.at("last") == "8209");
  CHECK(r.verified);
}

TEST_CASE("reduce somos6 gives generator (1,-2,1,0,0,0) and r = 4") {
  auto r = run_experiment(preset_config("reduce", "somos6"));
  CHECK(r.report.at("generator") == Json::array({1, -2, 1, 0, 0, 0}));
  CHECK(r.report.at("r") == 4);
}

TEST_CASE("zsys nonintegrable6 factors its characteristic polynomial") {
  auto r = run_experiment(preset_config("zsys", "nonintegrable6"));
  CHECK(r.report.at("char_poly_factored") == "(lambda^2 - 3*lambda + 1)*(lambda^2 + 1)");
}

TEST_CASE("identical config and seed give byte-identical artifacts") {
  namespace fs = std::filesystem;
  auto cfg = preset_config("run-tz", "prim4");
  cfg.init = parse_init("random");
  cfg.seed = 42;
  cfg.steps = 30;
  const fs::path base = fs::temp_directory_path() / "cpl_test_cli_det";
  fs::remove_all(base);
  write_artifacts(run_experiment(cfg), (base / "a").string());
  write_artifacts(run_experiment(cfg), (base / "b").string());
  for (const char* f : {"orbit.json", "report.json"}) {
    CHECK(!read_file(base / "a" / f).empty());
    CHECK(read_file(base / "a" / f) == read_file(base / "b" / f));
  }
  cfg.seed = 43;
  write_artifacts(run_experiment(cfg), (base / "c").string());
  CHECK(read_file(base / "a" / "orbit.json") != read_file(base / "c" / "orbit.json"));
  fs::remove_all(base);
}

TEST_CASE("parallel experiments keep input order") {
  std::vector<ExperimentConfig> cfgs;
  for (const char* p : {"somos4", "somos5", "somos6", "somos7"}) cfgs.push_back(preset_config("run-t", p));
  auto serial = run_experiments(cfgs, 1);
  auto parallel = run_experiments(cfgs, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].report == parallel[i].report);
}

TEST_CASE("config errors are ConfigInvalid") {
  auto expect_invalid = [](const ExperimentConfig& c) {
    try {
      run_experiment(c);
      FAIL("expected ConfigInvalid");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ConfigInvalid);
    }
  };
  expect_invalid(preset_config("run-t", "somos9"));
  expect_invalid(preset_config("no-such-command", "somos4"));
  auto short_steps = preset_config("run-t", "somos4");
  short_steps.steps = 3;
  expect_invalid(short_steps);
  auto wrong_count = preset_config("run-t", "somos4");
  wrong_count.init = parse_init("1,2,3");
  expect_invalid(wrong_count);
  ExperimentConfig none;
  none.command = "run-t";
  expect_invalid(none);
  CHECK_THROWS_AS(parse_init("random(3"), Error);
  CHECK_THROWS_AS(parse_mode("fuzzy"), Error);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("config JSON round-trip") {
  auto cfg = preset_config("entropy", "prim5");
  cfg.mode = Mode::Tropical;
  cfg.init = parse_init("random(7,5)");
  cfg.steps = 33;
  auto back = config_from_json(to_json(cfg));
  CHECK(to_json(back) == to_json(cfg));
}

TEST_CASE("random init is reproducible and bounded") {
  auto spec = parse_init("random(11,4)");
  auto a = realize(spec, 6, 1), b = realize(spec, 6, 999);
  CHECK(a == b);
  for (const auto& v : a) {
    CHECK(v > 0);
    CHECK(v.get_num() <= 4);
    CHECK(v.get_den() <= 4);
  }
  CHECK(realize(parse_init("random"), 6, 1) != realize(parse_init("random"), 6, 2));
}

TEST_CASE("filter selects entropy criteria only") {
  auto results = run_acceptance("entropy", 1);
  REQUIRE(results.size() == 2);
  CHECK(results[0].id == 15);
  CHECK(results[1].id == 16);
  CHECK(run_acceptance("13", 1).size() == 1);
  CHECK(run_acceptance("no-such-tag", 1).empty());
}

TEST_CASE("linrel report on a prim4 T_z orbit") {
  namespace fs = std::filesystem;
  auto cfg = preset_config("run-tz", "prim4");
  cfg.init = parse_init("random");
  cfg.steps = 60;
  const fs::path dir = fs::temp_directory_path() / "cpl_test_cli_linrel";
  write_artifacts(run_experiment(cfg), dir.string());
  ExperimentConfig lr;
  lr.command = "linrel";
  lr.orbit_path = (dir / "orbit.json").string();
  lr.offsets = {0, 12, 24};
  auto r = run_experiment(lr);
  CHECK(r.verified);
  CHECK(r.report.at("palindromic") == true);
  CHECK_FALSE(r.report.contains("label"));
  lr.offsets = {0, 2, 4};
  CHECK_FALSE(run_experiment(lr).verified);
  fs::remove_all(dir);
}

TEST_CASE("tool exit codes") {
  CHECK(run_tool("run t --preset somos4 --steps 12") == kExitOk);
  CHECK(run_tool("run t --preset nope") == kExitConfigInvalid);
  CHECK(run_tool("run t --preset somos4 --mode fuzzy") == kExitConfigInvalid);
  CHECK(run_tool("--bogus-flag reduce --preset somos4") == kExitConfigInvalid);
  CHECK(run_tool("run t --preset somos4 --init 0,1,1,1 --steps 8") == kExitComputeError);
  CHECK(run_tool("verify --filter period1") == kExitOk);
}
