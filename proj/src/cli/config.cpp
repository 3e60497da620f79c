#include "cpl/cli/config.hpp"

#include <algorithm>
#include <random>
#include <regex>

#include "cpl/algebra/error.hpp"
#include "cpl/cli/presets.hpp"

namespace cpl::cli {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(Errc::ConfigInvalid, msg); }

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"run-t", "run-tz", "run-y", "run-qp1", "reduce", "zsys", "entropy", "linrel"};
  return c;
}

}  // namespace

std::string InitSpec::to_string() const {
  switch (kind) {
    case Kind::Ones:
      return "ones";
    case Kind::Random:
      return seed ? "random(" + std::to_string(*seed) + "," + std::to_string(bound) + ")" : "random";
    case Kind::Values: {
      std::string s;
      for (const auto& v : values) s += (s.empty() ? "" : ",") + algebra::to_string(v);
      return s;
    }
  }
  return "";
}

InitSpec parse_init(const std::string& text) {
  InitSpec s;
  if (text == "ones") return s;
  if (text == "random") {
    s.kind = InitSpec::Kind::Random;
    return s;
  }
  static const std::regex random_re(R"(random\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch m;
  if (std::regex_match(text, m, random_re)) {
    s.kind = InitSpec::Kind::Random;
    s.seed = std::stoull(m[1]);
    s.bound = std::stoul(m[2]);
    if (s.bound == 0) invalid("random bound must be positive");
    return s;
  }
  s.kind = InitSpec::Kind::Values;
  try {
    s.values = algebra::parse_rational_list(text);
  } catch (const Error& e) {
    invalid("cannot read init \"" + text + "\": " + e.what());
  }
  if (s.values.empty()) invalid("init list is empty");
  return s;
}

std::vector<BigRational> realize(const InitSpec& spec, std::size_t n, std::uint64_t default_seed) {
  switch (spec.kind) {
    case InitSpec::Kind::Ones:
      return std::vector<BigRational>(n, BigRational(1));
    case InitSpec::Kind::Values:
      if (spec.values.size() != n)
        invalid("init has " + std::to_string(spec.values.size()) + " values, need " + std::to_string(n));
      return spec.values;
    case InitSpec::Kind::Random:
      break;
  }
  std::mt19937_64 rng(spec.seed.value_or(default_seed));
  std::vector<BigRational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned long p = 1 + rng() % spec.bound, q = 1 + rng() % spec.bound;
    BigRational v(p, q);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

Mode parse_mode(const std::string& s) {
  if (s == "rational") return Mode::Rational;
  if (s == "symbolic") return Mode::Symbolic;
  if (s == "tropical") return Mode::Tropical;
  invalid("unknown mode \"" + s + "\"");
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  invalid("unknown format \"" + s + "\"");
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Rational:
      return "rational";
    case Mode::Symbolic:
      return "symbolic";
    case Mode::Tropical:
      return "tropical";
  }
  return "";
}

void ExperimentConfig::validate() const {
  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    invalid("unknown command \"" + command + "\"");
  const bool needs_system = command != "run-qp1" && command != "linrel";
  if (needs_system && !preset && !tuple) invalid(command + " needs --preset or --tuple");
  if (preset && tuple) invalid("--preset and --tuple are mutually exclusive");
  if (preset) load_preset(*preset);
  if (tuple && tuple->is_zero() && command != "run-t") invalid("the zero tuple is only accepted by run t");
  if (command == "run-t" && mode == Mode::Tropical) invalid("run t supports rational and symbolic modes");
  if ((command == "run-tz" || command == "run-y" || command == "run-qp1") && mode != Mode::Rational)
    invalid(command + " supports rational mode only");
  if (command == "entropy" && mode == Mode::Rational) invalid("entropy needs --mode tropical or symbolic");
  if (command == "linrel") {
    if (orbit_path.empty()) invalid("linrel needs --orbit");
    if (offsets.size() < 2) invalid("linrel needs at least two offsets");
    if (train == 0) invalid("linrel needs --train >= 1");
  }
  if (command == "run-qp1" && (beta <= 0 || q <= 0)) invalid("--beta and --q must be positive");
}

quiver::PalindromicTuple ExperimentConfig::resolved_tuple() const {
  if (preset) return load_preset(*preset).tuple;
  if (tuple) return *tuple;
  invalid("no system given");
}

quiver::ExchangeMatrix ExperimentConfig::resolved_matrix() const {
  if (preset) return load_preset(*preset).matrix;
  return quiver::build_from_tuple(resolved_tuple());
}

std::string ExperimentConfig::system_name() const {
  if (preset) return *preset;
  if (tuple) return tuple->to_string();
  if (command == "run-qp1") return "qp1";
  if (command == "linrel") return "linrel";
  return "";
}

Json to_json(const ExperimentConfig& c) {
  Json j{{"command", c.command}, {"mode", to_string(c.mode)}, {"init", c.init.to_string()}, {"steps", c.steps},
         {"seed", c.seed},       {"format", c.format == Format::Json ? "json" : "csv"}};
  if (c.preset) j["preset"] = *c.preset;
  if (c.tuple) j["tuple"] = c.tuple->values();
  if (c.z_init) j["z_init"] = c.z_init->to_string();
  if (!c.out_dir.empty()) j["out"] = c.out_dir;
  if (c.command == "run-qp1") {
    j["beta"] = algebra::to_string(c.beta);
    j["q"] = algebra::to_string(c.q);
  }
  if (c.command == "linrel") {
    j["orbit"] = c.orbit_path;
    j["offsets"] = c.offsets;
    j["train"] = c.train;
    j["verify"] = c.verify;
  }
  return j;
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  try {
    c.command = j.at("command").get<std::string>();
    if (j.contains("preset")) c.preset = j.at("preset").get<std::string>();
    if (j.contains("tuple")) c.tuple = quiver::PalindromicTuple(j.at("tuple").get<std::vector<long>>());
    if (j.contains("mode")) c.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("init")) c.init = parse_init(j.at("init").get<std::string>());
    if (j.contains("z_init")) c.z_init = parse_init(j.at("z_init").get<std::string>());
    c.steps = j.value("steps", c.steps);
    c.seed = j.value("seed", c.seed);
    c.out_dir = j.value("out", std::string());
    if (j.contains("format")) c.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("beta")) c.beta = algebra::rational_from_json(j.at("beta"));
    if (j.contains("q")) c.q = algebra::rational_from_json(j.at("q"));
    c.orbit_path = j.value("orbit", std::string());
    if (j.contains("offsets")) c.offsets = j.at("offsets").get<std::vector<std::size_t>>();
    c.train = j.value("train", c.train);
    c.verify = j.value("verify", c.verify);
  } catch (const Json::exception& e) {
    invalid(std::string("malformed experiment config: ") + e.what());
  }
  return c;
}

}  // namespace cpl::cli
