#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "cpl/algebra/error.hpp"
#include "cpl/cli/acceptance.hpp"
#include "cpl/cli/experiment.hpp"
#include "cpl/cli/presets.hpp"

namespace {

using namespace cpl::cli;

struct Globals {
  std::string out;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  std::string format = "json";
};

/// Flags shared by the orbit-producing subcommands; strings are parsed later
/// so every malformed value maps to exit code 2.
struct SystemFlags {
  std::vector<std::string> presets;
  std::string tuple;
  std::string mode = "rational";
  std::string init = "ones";
  std::string z_init;
  std::size_t steps = 12;
};

void add_system_flags(CLI::App* app, SystemFlags& f, bool repeatable_preset = false) {
  if (repeatable_preset)
    app->add_option("--preset", f.presets, "named system (repeatable)");
  else
    app->add_option("--preset", f.presets, "named system")->expected(1);
  app->add_option("--tuple", f.tuple, "palindromic tuple a_1..a_{N-1}, comma separated");
  app->add_option("--init", f.init, "ones | random | random(seed,bound) | p/q,...");
  app->add_option("--steps", f.steps, "number of steps");
  app->add_option("--mode", f.mode, "rational | symbolic | tropical");
}

ExperimentConfig make_config(const std::string& command, const SystemFlags& f, const Globals& g,
                             const std::string& preset) {
  ExperimentConfig c;
  c.command = command;
  if (!preset.empty()) c.preset = preset;
  if (!f.tuple.empty()) {
    std::vector<long> a;
    for (const auto& v : cpl::algebra::parse_rational_list(f.tuple)) {
      if (v.get_den() != 1) throw cpl::Error(cpl::Errc::ConfigInvalid, "tuple entries must be integers");
      a.push_back(cpl::algebra::to_long(v.get_num()));
    }
    c.tuple = cpl::quiver::PalindromicTuple(a);
  }
  c.mode = parse_mode(f.mode);
  c.init = parse_init(f.init);
  if (!f.z_init.empty()) c.z_init = parse_init(f.z_init);
  c.steps = f.steps;
  c.seed = g.seed;
  c.out_dir = g.out;
  c.format = parse_format(g.format);
  return c;
}

int emit(const std::vector<ExperimentResult>& results, const std::vector<ExperimentConfig>& cfgs,
         const Globals& g) {
  bool ok = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    ok = ok && r.verified;
    if (g.out.empty()) {
      std::cout << r.report.dump(2) << "\n";
      continue;
    }
    std::string dir = g.out;
    if (results.size() > 1) dir += "/" + cfgs[i].system_name();
    write_artifacts(r, dir);
    std::cout << cfgs[i].system_name() << ": " << r.headline << "\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_verify(const std::string& filter, const std::vector<std::string>& preset_files, const Globals& g) {
  std::vector<Preset> extra;
  for (const auto& path : preset_files) {
    std::ifstream in(path);
    if (!in) throw cpl::Error(cpl::Errc::ConfigInvalid, "cannot open preset file " + path);
    auto j = cpl::algebra::Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw cpl::Error(cpl::Errc::ConfigInvalid, path + " is not JSON");
    extra.push_back(preset_from_json(j));
  }
  auto summary = verify_suite(filter, g.jobs, extra);
  for (const auto& p : summary.presets)
    std::cout << "preset " << p.name << ": " << (p.ok() ? "PASS" : "FAIL") << (p.ok() ? "" : " " + p.witness)
              << "\n";
  for (const auto& c : summary.criteria)
    std::cout << "criterion " << c.id << " [" << c.name << "]: " << c.status() << " (" << c.seconds << " s) "
              << c.detail << "\n";
  if (!g.out.empty()) {
    ExperimentResult r;
    r.artifacts.push_back({"verify.json", summary.to_json().dump(2) + "\n"});
    write_artifacts(r, g.out);
  }
  return summary.blocking_failures() == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experiments with period-1 cluster maps and their reductions"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out, "output directory for artifacts; stdout when omitted");
  app.add_option("--seed", g.seed, "seed for random initial data");
  app.add_option("--jobs", g.jobs, "threads for independent experiments")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "json | csv orbit/degree artifacts");
  app.fallthrough();

  auto* run = app.add_subcommand("run", "iterate a system");
  run->require_subcommand(1);
  SystemFlags rt, rtz, ry;
  auto* run_t = run->add_subcommand("t", "T-system orbit");
  add_system_flags(run_t, rt);
  auto* run_tz = run->add_subcommand("tz", "T_z orbit");
  add_system_flags(run_tz, rtz);
  run_tz->add_option("--z-init", rtz.z_init, "initial data of the Z-recurrence");
  auto* run_y = run->add_subcommand("y", "Y-system orbit");
  add_system_flags(run_y, ry);
  SystemFlags rq;
  rq.init = "1,1";
  std::string beta = "1", q = "1";
  auto* run_qp1 = run->add_subcommand("qp1", "q-Painleve I orbit");
  run_qp1->add_option("--beta", beta, "p/q");
  run_qp1->add_option("--q", q, "p/q");
  run_qp1->add_option("--init", rq.init, "y_0,y_1");
  run_qp1->add_option("--steps", rq.steps, "number of steps");

  SystemFlags fr, fz, fe;
  auto* reduce = app.add_subcommand("reduce", "palindromic reduction and U-system");
  add_system_flags(reduce, fr);
  auto* zsys = app.add_subcommand("zsys", "Z-constraint, characteristic polynomial and solution");
  add_system_flags(zsys, fz);
  fe.steps = 40;
  fe.mode = "tropical";
  auto* entropy = app.add_subcommand("entropy", "degree growth and algebraic entropy");
  add_system_flags(entropy, fe, true);

  std::string orbit_path, offsets;
  std::size_t train = 4, verify_count = 30;
  auto* linrel = app.add_subcommand("linrel", "linear relation search on an orbit file");
  linrel->add_option("--orbit", orbit_path, "orbit JSON")->required();
  linrel->add_option("--offsets", offsets, "comma-separated offsets")->required();
  linrel->add_option("--train", train, "windows used to solve");
  linrel->add_option("--verify", verify_count, "windows used to verify");

  std::string filter;
  std::vector<std::string> preset_files;
  auto* verify = app.add_subcommand("verify", "preset checks and the acceptance battery");
  verify->add_option("--filter", filter, "criterion id, tag or name fragment");
  verify->add_option("--preset-file", preset_files, "extra preset JSON to check (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigInvalid;
  }

  try {
    if (verify->parsed()) return run_verify(filter, preset_files, g);

    std::vector<ExperimentConfig> cfgs;
    auto push = [&](const std::string& command, const SystemFlags& f) {
      if (f.presets.empty()) cfgs.push_back(make_config(command, f, g, ""));
      for (const auto& p : f.presets) cfgs.push_back(make_config(command, f, g, p));
    };
    if (run_t->parsed()) push("run-t", rt);
    else if (run_tz->parsed()) push("run-tz", rtz);
    else if (run_y->parsed()) push("run-y", ry);
    else if (run_qp1->parsed()) {
      push("run-qp1", rq);
      cfgs.back().beta = cpl::algebra::parse_rational_list(beta).at(0);
      cfgs.back().q = cpl::algebra::parse_rational_list(q).at(0);
    } else if (reduce->parsed()) push("reduce", fr);
    else if (zsys->parsed()) push("zsys", fz);
    else if (entropy->parsed()) push("entropy", fe);
    else if (linrel->parsed()) {
      ExperimentConfig c;
      c.command = "linrel";
      c.orbit_path = orbit_path;
      for (const auto& v : cpl::algebra::parse_rational_list(offsets)) {
        if (v < 0 || v.get_den() != 1) throw cpl::Error(cpl::Errc::ConfigInvalid, "offsets must be naturals");
        c.offsets.push_back(static_cast<std::size_t>(cpl::algebra::to_long(v.get_num())));
      }
      c.train = train;
      c.verify = verify_count;
      c.out_dir = g.out;
      c.format = parse_format(g.format);
      cfgs.push_back(c);
    }
    for (const auto& c : cfgs) c.validate();
    return emit(run_experiments(cfgs, g.jobs), cfgs, g);
  } catch (const cpl::Error& e) {
    std::cerr << "cluster-painleve: " << e.what() << "\n";
    return e.code() == cpl::Errc::ConfigInvalid || e.code() == cpl::Errc::ParseError ? kExitConfigInvalid
                                                                                      : kExitComputeError;
  } catch (const std::exception& e) {
    std::cerr << "cluster-painleve: " << e.what() << "\n";
    return kExitComputeError;
  }
}
