#include "cpl/cli/experiment.hpp"

#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "cpl/algebra/error.hpp"
#include "cpl/analysis/degrees.hpp"
#include "cpl/analysis/entropy.hpp"
#include "cpl/analysis/linear_relation.hpp"
#include "cpl/reduction/usystem.hpp"
#include "cpl/tsystem/tsystem.hpp"
#include "cpl/ysystem/ysystem.hpp"
#include "cpl/zsystem/zsystem.hpp"

namespace cpl::cli {

namespace {

using algebra::to_string;

Json rationals(const std::vector<BigRational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::string csv_column(const std::string& header, const std::vector<std::string>& values) {
  std::ostringstream os;
  os << "n," << header << '\n';
  for (std::size_t n = 0; n < values.size(); ++n) os << n << ',' << values[n] << '\n';
  return os.str();
}

std::vector<std::string> strings(const std::vector<BigRational>& v) {
  std::vector<std::string> s;
  for (const auto& q : v) s.push_back(to_string(q));
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Orbit artifact in the configured format.
void add_orbit(ExperimentResult& r, const ExperimentConfig& cfg, const Json& orbit,
               const std::vector<BigRational>& values) {
  if (cfg.format == Format::Csv)
    r.artifacts.push_back({"orbit.csv", csv_column("value", strings(values))});
  else
    r.artifacts.push_back({"orbit.json", dump(orbit)});
}

/// The output directory is omitted so reports do not depend on where they land.
Json base_report(const ExperimentConfig& cfg) {
  Json c = to_json(cfg);
  c.erase("out");
  return Json{{"config", c}, {"system", cfg.system_name()}};
}

std::size_t z_count(const zsys::ZStencil& st, std::size_t n, std::size_t steps) {
  return n + steps + st.order() + st.offset + 1;
}

zsys::ZSolution z_solution(const ExperimentConfig& cfg, const quiver::PalindromicTuple& a, std::size_t count) {
  auto st = zsys::z_stencil_from_tuple(a);
  InitSpec zi = cfg.z_init.value_or(InitSpec{InitSpec::Kind::Random, std::nullopt, 9, {}});
  return zsys::solve_z(st, realize(zi, st.order(), cfg.seed + 1), count);
}

/// Orbit commands count terms: --steps K lists x_0 .. x_{K-1}.
std::size_t new_terms(const ExperimentConfig& cfg, std::size_t window) {
  if (cfg.steps < window)
    throw Error(Errc::ConfigInvalid, "steps " + std::to_string(cfg.steps) + " is shorter than the initial window " +
                                         std::to_string(window));
  return cfg.steps - window;
}

ExperimentResult run_t(const ExperimentConfig& cfg, bool with_z) {
  ExperimentResult r;
  r.report = base_report(cfg);
  auto a = cfg.resolved_tuple();
  tsys::TStencil st(a);
  const std::size_t n = a.order();
  if (cfg.mode == Mode::Symbolic) {
    auto orb = tsys::iterate_t_symbolic(st, new_terms(cfg, n));
    Json values = Json::array();
    Json terms = Json::array();
    for (const auto& p : orb.values) {
      values.push_back(algebra::to_json(p));
      terms.push_back(p.nterms());
    }
    Json orbit{{"stencil", orb.stencil}, {"vars", *orb.vars}, {"values", values}};
    r.report["term_counts"] = terms;
    r.report["degrees"] = Json::array();
    for (const auto& d : analysis::degree_sequence(orb).d) r.report["degrees"].push_back(to_string(d));
    std::vector<std::string> text;
    for (const auto& p : orb.values) text.push_back('"' + p.to_string() + '"');
    if (cfg.format == Format::Csv)
      r.artifacts.push_back({"orbit.csv", csv_column("value", text)});
    else
      r.artifacts.push_back({"orbit.json", dump(orbit)});
    r.headline = "x" + std::to_string(orb.values.size() - 1) + " has " +
                 std::to_string(orb.values.back().nterms()) + " terms";
    return r;
  }
  auto init = realize(cfg.init, n, cfg.seed);
  tsys::RationalOrbit orb;
  if (with_z) {
    auto sol = z_solution(cfg, a, z_count(zsys::z_stencil_from_tuple(a), n, new_terms(cfg, n)));
    orb = tsys::iterate_tz(st, init, sol.sequence(), new_terms(cfg, n));
  } else {
    orb = tsys::iterate_t(st, init, new_terms(cfg, n));
  }
  Json orbit{{"stencil", orb.stencil}, {"values", rationals(orb.values)}};
  if (!orb.coefficients.empty()) orbit["coefficients"] = rationals(orb.coefficients);
  add_orbit(r, cfg, orbit, orb.values);
  r.report["last"] = to_string(orb.values.back());
  r.report["length"] = orb.values.size();
  r.report["recurrence_holds"] = tsys::satisfies_recurrence(st, orb);
  r.verified = r.report["recurrence_holds"].get<bool>();
  r.headline = "x" + std::to_string(orb.values.size() - 1) + " = " + to_string(orb.values.back());
  return r;
}

ExperimentResult run_y(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.report = base_report(cfg);
  auto a = cfg.resolved_tuple();
  auto orb = ysys::iterate_y(a, realize(cfg.init, a.order(), cfg.seed), new_terms(cfg, a.order()));
  Json orbit{{"stencil", orb.stencil}, {"values", rationals(orb.values)}};
  add_orbit(r, cfg, orbit, orb.values);
  r.report["last"] = to_string(orb.values.back());
  r.report["length"] = orb.values.size();
  r.headline = "y" + std::to_string(orb.values.size() - 1) + " = " + to_string(orb.values.back());
  return r;
}

ExperimentResult run_qp1(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.report = base_report(cfg);
  auto orb = ysys::qp1_iterate(cfg.beta, cfg.q, realize(cfg.init, 2, cfg.seed), new_terms(cfg, 2));
  Json orbit{{"stencil", orb.stencil}, {"values", rationals(orb.values)}, {"beta", to_string(cfg.beta)},
             {"q", to_string(cfg.q)}};
  add_orbit(r, cfg, orbit, orb.values);
  auto z = ysys::somos4_z_invariant(orb.values);
  bool geometric = true;
  BigRational qn = cfg.beta;
  for (const auto& v : z) {
    geometric = geometric && v == qn;
    qn *= cfg.q;
  }
  r.report["z_invariant"] = rationals(z);
  r.report["z_equals_beta_q_n"] = geometric;
  r.verified = geometric;
  r.report["last"] = to_string(orb.values.back());
  r.headline = "y" + std::to_string(orb.values.size() - 1) + " = " + to_string(orb.values.back());
  return r;
}

ExperimentResult run_reduce(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.report = base_report(cfg);
  auto b = cfg.resolved_matrix();
  auto u = reduction::derive_usystem(b);
  auto uz = reduction::derive_uzsystem(b);
  r.report["generator"] = algebra::to_json(u.basis.generator);
  r.report["r"] = u.r;
  r.report["F_num"] = u.numerator.to_string();
  r.report["F_den"] = u.denominator.to_string();
  r.report["usystem"] = u.to_string();
  r.report["uzsystem"] = uz.to_string();
  r.report["z_power"] = uz.z_power;
  r.artifacts.push_back({"usystem.txt", u.to_string() + "\n" + uz.to_string() + "\n"});
  r.headline = u.to_string();
  return r;
}

std::string constraint_text(const zsys::ZStencil& st) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < st.c.size(); ++i) {
    if (st.c[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << "Z(m+" << i << ')';
    if (st.c[i] != 1) os << '^' << st.c[i];
  }
  os << " = 1";
  return os.str();
}

ExperimentResult run_zsys(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.report = base_report(cfg);
  auto a = cfg.resolved_tuple();
  auto st = zsys::z_stencil_from_tuple(a);
  auto chi = zsys::char_poly(st);
  auto factors = algebra::factor_small(chi);
  auto spec = zsys::spectral_radius(chi);
  r.report["constraint"] = constraint_text(st);
  r.report["offset"] = st.offset;
  r.report["char_poly"] = chi.to_string();
  r.report["char_poly_factored"] = algebra::factored_string(factors);
  Json roots = Json::array();
  for (auto z : spec.roots) roots.push_back(Json{{"re", z.real()}, {"im", z.imag()}});
  r.report["roots"] = roots;
  r.report["spectral_radius"] = Json{{"value", spec.radius}, {"error_bound", spec.error_bound}, {"digits", 17}};
  std::optional<std::vector<BigRational>> init;
  if (cfg.z_init) init = realize(*cfg.z_init, st.order(), cfg.seed);
  auto sol = zsys::solve_z(st, init, std::max<std::size_t>(cfg.steps, st.order()));
  r.report["algebraic_ambiguity"] = sol.algebraic_ambiguity();
  if (const auto& cf = sol.closed_form()) {
    Json c{{"period", cf->period}, {"formula", cf->formula}};
    if (cf->q) c["q"] = to_string(*cf->q);
    if (cf->betas) c["betas"] = rationals(*cf->betas);
    r.report["closed_form"] = c;
  }
  if (init) {
    std::vector<BigRational> values;
    for (std::size_t n = 0; n < sol.count(); ++n) values.push_back(sol.value(n));
    r.report["values"] = rationals(values);
  }
  r.headline = r.report["char_poly_factored"].get<std::string>();
  return r;
}

Json estimate_json(const analysis::EntropyEstimate& e) {
  Json j{{"entropy", e.entropy},
         {"fit", e.fit == analysis::GrowthFit::Polynomial ? "polynomial" : "exponential"},
         {"lambda", e.lambda},
         {"confidence", e.confidence},
         {"precision", Json{{"type", "binary64"}, {"digits", 17}}},
         {"method", e.method},
         {"note", e.note}};
  if (e.fit == analysis::GrowthFit::Polynomial) j["polynomial_degree"] = e.polynomial_degree;
  if (e.aitken) j["aitken_ratio"] = to_string(*e.aitken);
  return j;
}

ExperimentResult run_entropy(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.report = base_report(cfg);
  auto a = cfg.resolved_tuple();
  analysis::DegreeSequence d;
  if (cfg.mode == Mode::Symbolic) {
    auto orb = tsys::iterate_t_symbolic(tsys::TStencil(a), cfg.steps);
    d = analysis::degree_sequence(orb);
  } else {
    d = analysis::tropical_total_degree(a, cfg.steps);
  }
  auto est = analysis::entropy_estimate(d);
  r.report["degrees"] = Json::array();
  for (const auto& v : d.d) r.report["degrees"].push_back(to_string(v));
  r.report["definition"] = d.definition;
  r.report["x_entropy"] = estimate_json(est);
  // The Z exponents are reported separately; their rate need not match.
  auto zst = zsys::z_stencil_from_tuple(a);
  auto sol = zsys::solve_z(zst, std::nullopt, a.order() + cfg.steps);
  try {
    auto zd = analysis::exponent_degrees(sol.exponent_sequence(0));
    auto zest = analysis::entropy_estimate(zd);
    if (sol.algebraic_ambiguity()) zest.note = "up to sign choices; " + zest.note;
    r.report["z_entropy"] = estimate_json(zest);
  } catch (const Error& e) {
    r.report["z_entropy"] = Json{{"error", e.what()}};
  }
  if (cfg.format == Format::Csv) r.artifacts.push_back({"degrees.csv", analysis::to_csv(d)});
  std::ostringstream os;
  os << "entropy " << est.entropy << " (" << (est.fit == analysis::GrowthFit::Polynomial ? "polynomial" : "exponential")
     << ", " << est.method << ")";
  r.headline = os.str();
  return r;
}

ExperimentResult run_linrel(const ExperimentConfig& cfg) {
  ExperimentResult r;
  r.report = base_report(cfg);
  std::ifstream in(cfg.orbit_path);
  if (!in) throw Error(Errc::ConfigInvalid, "cannot open orbit file " + cfg.orbit_path);
  Json orbit;
  try {
    orbit = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ConfigInvalid, "orbit file is not JSON: " + std::string(e.what()));
  }
  if (!orbit.contains("values") || !orbit.at("values").is_array())
    throw Error(Errc::ConfigInvalid, "orbit file has no values array");
  std::vector<BigRational> x;
  for (const auto& v : orbit.at("values")) x.push_back(algebra::rational_from_json(v));
  auto res = analysis::find_linear_relation(x, cfg.offsets, cfg.train, cfg.verify);
  r.report["status"] = res.status;
  r.report["consistent"] = res.consistent;
  r.report["solution_dimension"] = res.solution_dimension;
  if (res.failed_at) r.report["failed_at"] = *res.failed_at;
  // Equally spaced offsets (0, s, ..., 4s) or (0, 2s, 4s) with s = (N-1)(N-2)
  // are the conjectured family for the affine primitive stencils.
  if (orbit.contains("stencil")) {
    const std::size_t n = orbit.at("stencil").size() + 1;
    const std::size_t s = (n - 1) * (n - 2);
    std::vector<std::size_t> odd{0, s, 2 * s, 3 * s, 4 * s}, even{0, 2 * s, 4 * s};
    if (n >= 5 && cfg.offsets == (n % 2 ? odd : even)) r.report["label"] = "CONJECTURE";
  }
  if (res.relation) {
    r.report["offsets"] = res.relation->offsets;
    r.report["coefficients"] = rationals(res.relation->coefficients);
    r.report["verified"] = res.relation->verified;
    r.report["palindromic"] = res.relation->palindromic();
    r.headline = res.relation->to_string();
  } else {
    r.headline = "no relation: " + res.status;
    r.verified = false;
  }
  return r;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult r;
  if (cfg.command == "run-t")
    r = run_t(cfg, false);
  else if (cfg.command == "run-tz")
    r = run_t(cfg, true);
  else if (cfg.command == "run-y")
    r = run_y(cfg);
  else if (cfg.command == "run-qp1")
    r = run_qp1(cfg);
  else if (cfg.command == "reduce")
    r = run_reduce(cfg);
  else if (cfg.command == "zsys")
    r = run_zsys(cfg);
  else if (cfg.command == "entropy")
    r = run_entropy(cfg);
  else
    r = run_linrel(cfg);
  r.report["headline"] = r.headline;
  r.artifacts.push_back({"report.json", dump(r.report)});
  return r;
}

void write_artifacts(const ExperimentResult& r, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(Errc::ConfigInvalid, "cannot create output directory " + dir + ": " + ec.message());
  for (const auto& a : r.artifacts) {
    std::ofstream out(fs::path(dir) / a.filename, std::ios::binary);
    if (!out) throw Error(Errc::ConfigInvalid, "cannot write " + (fs::path(dir) / a.filename).string());
    out << a.content;
  }
}

std::vector<ExperimentResult> run_experiments(const std::vector<ExperimentConfig>& cfgs, std::size_t jobs) {
  std::vector<ExperimentResult> out(cfgs.size());
  std::vector<std::exception_ptr> errors(cfgs.size());
  const int threads = static_cast<int>(std::max<std::size_t>(1, jobs));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cfgs.size()); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_experiment(cfgs[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace cpl::cli
