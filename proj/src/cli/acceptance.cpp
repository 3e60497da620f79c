#include "cpl/cli/acceptance.hpp"

#include <chrono>
#include <exception>
#include <random>
#include <sstream>

#include "cpl/algebra/error.hpp"
#include "cpl/algebra/int_matrix.hpp"
#include "cpl/analysis/degrees.hpp"
#include "cpl/analysis/entropy.hpp"
#include "cpl/analysis/linear_relation.hpp"
#include "cpl/reduction/invariance.hpp"
#include "cpl/reduction/palindromic.hpp"
#include "cpl/reduction/usystem.hpp"
#include "cpl/tsystem/tsystem.hpp"
#include "cpl/ysystem/ysystem.hpp"
#include "cpl/zsystem/zsystem.hpp"

namespace cpl::cli {

namespace {

using algebra::IntVector;
using algebra::LaurentPoly;
using algebra::to_string;
using quiver::ExchangeMatrix;
using quiver::PalindromicTuple;

/// p/q with 1 <= p, q <= 9, negated with probability 1/2 when signed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  BigRational rational(bool positive = true) {
    BigRational v(static_cast<long>(1 + rng_() % 9), static_cast<unsigned long>(1 + rng_() % 9));
    v.canonicalize();
    if (!positive && rng_() % 2) v = -v;
    return v;
  }
  std::vector<BigRational> window(std::size_t n, bool positive = true) {
    std::vector<BigRational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rational(positive));
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

struct Detail {
  std::ostringstream os;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      os << "[fail] " << what << "; ";
    }
  }
  void note(const std::string& s) { os << s << "; "; }
  CriterionOutcome done() {
    std::string s = os.str();
    if (s.size() >= 2) s.resize(s.size() - 2);
    return {ok, s};
  }
};

std::string join(const std::vector<BigRational>& v) {
  std::string s;
  for (const auto& q : v) s += (s.empty() ? "" : ",") + to_string(q);
  return s;
}

IntVector ints(std::vector<long> v) { return IntVector(v.begin(), v.end()); }

CriterionOutcome somos4_sequence() {
  Detail d;
  auto p = load_preset("somos4");
  auto orb = tsys::iterate_t(tsys::TStencil::from_matrix(p.matrix), std::vector<BigRational>(4, BigRational(1)), 9);
  std::vector<BigRational> got(orb.values.begin() + 4, orb.values.end());
  std::vector<BigRational> want{2, 3, 7, 23, 59, 314, 1529, 8209, 83313};
  d.expect(got == want, "terms " + join(got));
  d.note("x4..x12 = " + join(got));
  return d.done();
}

CriterionOutcome period1_identity() {
  Detail d;
  for (const char* name : {"somos4", "somos6", "prim4", "nonintegrable6"}) {
    auto b = load_preset(name).matrix;
    bool eq = quiver::mutate_matrix(b, 0) == quiver::rho_conjugate(b);
    d.expect(eq, std::string(name) + ": mu_0(B) != rho(B)");
  }
  if (d.ok) d.note("mu_0(B) = rho(B) for somos4, somos6, prim4, nonintegrable6");
  return d.done();
}

CriterionOutcome builder_fidelity() {
  Detail d;
  d.expect(quiver::build_from_tuple(PalindromicTuple({-1, 2, -1})) == load_preset("somos4").matrix,
           "somos4 builder mismatch");
  d.expect(quiver::build_from_tuple(PalindromicTuple({-1, 1, 0, 1, -1})) == load_preset("somos6").matrix,
           "somos6 builder mismatch");
  if (d.ok) d.note("builder reproduces both fixtures entrywise");
  return d.done();
}

CriterionOutcome palindromic_bases() {
  Detail d;
  struct Case {
    const char* name;
    std::vector<long> gen;
    std::size_t r;
  };
  for (const auto& c : std::vector<Case>{{"somos4", {1, -2, 1, 0}, 2}, {"somos6", {1, -2, 1, 0, 0, 0}, 4}}) {
    auto b = load_preset(c.name).matrix;
    auto basis = reduction::palindromic_basis(b);
    d.expect(basis.generator == ints(c.gen), std::string(c.name) + " generator");
    d.expect(basis.r == c.r, std::string(c.name) + " r = " + std::to_string(basis.r));
    d.expect(algebra::same_lattice(basis.vectors, algebra::image_lattice_basis(b.matrix())),
             std::string(c.name) + " Z-span differs from the image lattice");
    d.note(std::string(c.name) + ": r = " + std::to_string(basis.r));
  }
  return d.done();
}

/// prod_j U(n+j)^{e_j} in the variables of f.
LaurentPoly monomial_in(const LaurentPoly& f, const std::vector<long>& e) {
  std::vector<algebra::Exponent> ex(e.begin(), e.end());
  return LaurentPoly::monomial(f.vars(), ex, BigInt(1));
}

CriterionOutcome usystem_derivation() {
  Detail d;
  {
    auto u = reduction::derive_usystem(load_preset("somos4").matrix);
    LaurentPoly x = monomial_in(u.f, {1});
    d.expect(u.r == 2 && !u.z_flag, "somos4 shape");
    d.expect(u.numerator == x + monomial_in(u.f, {0}), "somos4 numerator " + u.numerator.to_string());
    d.expect(u.denominator == monomial_in(u.f, {2}), "somos4 denominator " + u.denominator.to_string());
    d.note(u.to_string());
  }
  {
    auto u = reduction::derive_uzsystem(load_preset("somos7").matrix);
    d.expect(u.r == 2 && u.z_flag && u.z_power == 1, "somos7 shape");
    d.expect(u.numerator == monomial_in(u.f, {1}) + monomial_in(u.f, {0}), "somos7 numerator");
    d.expect(u.denominator == monomial_in(u.f, {0}), "somos7 denominator");
    d.note(u.to_string());
  }
  {
    auto p = load_preset("prim4");
    auto u = reduction::derive_usystem(p.matrix);
    tsys::TStencil st(p.tuple);
    // The T-system right-hand side written in U(n+1) .. U(n+3).
    std::vector<long> plus(st.plus().begin(), st.plus().end() - 0), minus(st.minus().begin(), st.minus().end());
    // plus()/minus() are indexed j-1 for j = 1..N-1, matching U(n+j).
    d.expect(u.r == p.matrix.n(), "prim4 r = " + std::to_string(u.r));
    if (u.r == p.matrix.n()) {
      LaurentPoly rhs = monomial_in(u.f, plus) + monomial_in(u.f, minus);
      d.expect(u.f == rhs, "prim4 U-system differs from the T-system: " + u.to_string());
    }
    d.note(u.to_string());
  }
  return d.done();
}

CriterionOutcome conjugacy() {
  Detail d;
  Sampler s(2024);
  for (const char* name : {"somos4", "somos5", "somos6"}) {
    auto b = load_preset(name).matrix;
    auto basis = reduction::palindromic_basis(b);
    int good = 0;
    for (int t = 0; t < 5; ++t) {
      auto rep = reduction::verify_conjugacy(b, basis, s.window(b.n()), 20);
      if (rep.holds) ++good;
      else d.expect(false, std::string(name) + " mismatch at " + std::to_string(rep.mismatch_at.value_or(0)));
    }
    d.note(std::string(name) + ": " + std::to_string(good) + "/5 windows");
  }
  return d.done();
}

CriterionOutcome laurentness() {
  Detail d;
  tsys::TStencil st{load_preset("somos4").tuple};
  try {
    auto orb = tsys::iterate_tz_symbolic(st, zsys::ZSequence::geometric_symbolic(1), 9);
    d.expect(orb.values.size() == 13, "orbit length");
    d.note("x12 has " + std::to_string(orb.values.back().nterms()) + " terms in x0..x3, beta, q");
  } catch (const Error& e) {
    d.expect(false, e.what());
  }
  return d.done();
}

CriterionOutcome tz_correspondence() {
  Detail d;
  Sampler s(77);
  auto a = load_preset("somos4").tuple;
  tsys::TStencil st(a);
  auto zst = zsys::z_stencil_from_tuple(a);
  auto z = zsys::solve_z(zst, s.window(zst.order()), 70).sequence();
  auto x = s.window(4);
  auto valid = ysys::verify_tz_correspondence(a, tsys::iterate_tz(st, x, z, 40), z, 30);
  d.expect(valid.coincide(), "valid Z: residual and constraint disagree");
  std::size_t violated = 0;
  for (std::size_t point : {3u, 8u, 17u}) {
    auto bad = z.perturbed(point, BigRational(5, 2));
    auto rep = ysys::verify_tz_correspondence(a, tsys::iterate_tz(st, x, bad, 40), bad, 30);
    d.expect(rep.coincide(), "perturbed at " + std::to_string(point) + ": disagreement");
    for (bool h : rep.z_holds) violated += !h;
  }
  d.expect(violated > 0, "perturbations never broke the constraint");
  d.note("30 indices, 1 valid and 3 perturbed sequences, " + std::to_string(violated) + " violated indices matched");
  return d.done();
}

CriterionOutcome qp1() {
  Detail d;
  Sampler s(9);
  auto a = load_preset("somos4").tuple;
  for (int t = 0; t < 5; ++t) {
    auto p = s.window(4);
    auto orb = ysys::qp1_iterate(p[0], p[1], {p[2], p[3]}, 34);
    auto z = ysys::somos4_z_invariant(orb.values);
    BigRational qn = p[0];
    for (std::size_t n = 0; n < 30; ++n, qn *= p[1]) {
      d.expect(ysys::satisfies_ysystem_at(a, orb.values, n), "Y-system fails at " + std::to_string(n));
      d.expect(z[n] == qn, "Z invariant differs at " + std::to_string(n));
      if (!d.ok) return d.done();
    }
  }
  d.note("5 orbits, 30 indices each");
  return d.done();
}

CriterionOutcome first_integral() {
  Detail d;
  Sampler s(10);
  auto spec = reduction::derive_usystem(load_preset("somos4").matrix);
  for (int t = 0; t < 5; ++t) {
    auto u = reduction::iterate_usystem(spec, s.window(2), 50);
    const BigRational h0 = analysis::somos4_first_integral(u[0], u[1]);
    for (std::size_t n = 0; n + 1 < u.size(); ++n)
      d.expect(analysis::somos4_first_integral(u[n], u[n + 1]) == h0, "H changes at " + std::to_string(n));
    d.note("H = " + to_string(h0));
  }
  return d.done();
}

CriterionOutcome symplectic() {
  Detail d;
  Sampler s(11);
  for (const char* name : {"somos4", "somos6"}) {
    auto b = load_preset(name).matrix;
    auto basis = reduction::palindromic_basis(b);
    int points = 0;
    while (points < 5) {
      auto pt = s.window(basis.r, false);
      try {
        auto rep = reduction::verify_form_invariance(b, basis, pt);
        d.expect(rep.preserved, std::string(name) + " form not preserved at " + join(pt));
        ++points;
      } catch (const Error& e) {
        if (e.code() != Errc::SingularPoint) throw;
      }
    }
    d.note(std::string(name) + ": " + std::to_string(basis.r) + "D map, 5 points");
  }
  return d.done();
}

CriterionOutcome generating_function() {
  Detail d;
  Sampler s(12);
  auto b = load_preset("somos4").matrix;
  for (int t = 0; t < 3; ++t) {
    auto x = s.window(4);
    auto r1 = reduction::generating_function_check(b, x, reduction::Float50("1e-3")).residual;
    auto r2 = reduction::generating_function_check(b, x, reduction::Float50("5e-4")).residual;
    double ratio = static_cast<double>(r1 / r2);
    d.expect(ratio >= 3.5 && ratio <= 4.5, "ratio " + std::to_string(ratio) + " at " + join(x));
    d.note("ratio " + std::to_string(ratio));
  }
  return d.done();
}

/// x_{n+N} x_n = Z_n (x_{n+N-1} x_{n+1} + 1), Z_{n+N-2} Z_n = 1.
tsys::RationalOrbit prim_orbit(std::size_t n, Sampler& s, std::size_t steps) {
  std::vector<long> a(n - 1, 0);
  a.front() = a.back() = -1;
  tsys::TStencil st{PalindromicTuple(a)};
  auto zst = zsys::z_stencil_from_tuple(st.tuple());
  auto z = zsys::solve_z(zst, s.window(zst.order(), false), n + steps + 1);
  return tsys::iterate_tz(st, s.window(n, false), z.sequence(), steps);
}

CriterionOutcome prim4_relation() {
  Detail d;
  Sampler s(13);
  for (int t = 0; t < 3; ++t) {
    auto orb = prim_orbit(4, s, 60);
    auto res = analysis::find_linear_relation(orb.values, {0, 12, 24}, 4, 30);
    if (!res.relation) {
      d.expect(false, "no relation: " + res.status);
      continue;
    }
    const auto& c = res.relation->coefficients;
    d.expect(c[0] == 1 && c[2] == 1 && res.relation->verified == 30, "shape " + join(c));
    const auto& x = orb.values;
    for (std::size_t n = 0; n + 24 < x.size(); ++n)
      d.expect((x[n + 24] + x[n]) / x[n + 12] == -c[1], "C differs at window " + std::to_string(n));
  }
  // Stretch: C as a Laurent polynomial.
  tsys::TStencil st{PalindromicTuple({-1, 0, -1})};
  auto sol = zsys::solve_z(zsys::z_stencil_from_tuple(st.tuple()), std::nullopt, 30);
  auto sym = tsys::iterate_tz_symbolic(st, sol.sequence(), 21);
  auto cpoly = algebra::laurent_div(sym.values[24] + sym.values[0], sym.values[12]);
  bool positive = true;
  for (std::size_t t = 0; t < cpoly.nterms(); ++t) positive = positive && cpoly.coef(t) > 0;
  d.note("3 orbits verified on 30 windows; stretch: C has " + std::to_string(cpoly.nterms()) + " terms" +
         (positive ? ", all coefficients positive" : ", some coefficient not positive"));
  return d.done();
}

CriterionOutcome conjecture_spot_check() {
  Detail d;
  Sampler s(14);
  d.note("CONJECTURE");
  auto orb = prim_orbit(5, s, 80);
  auto res = analysis::find_linear_relation(orb.values, {0, 12, 24, 36, 48}, 8, 20);
  d.expect(res.relation.has_value(), "N = 5: " + res.status);
  if (res.relation) {
    d.expect(res.relation->palindromic(), "N = 5 coefficients not palindromic: " + join(res.relation->coefficients));
    d.note("N = 5: (" + join(res.relation->coefficients) + ") on 20 windows");
  }
  // Optional N = 6 clause; reported, not required.
  auto orb6 = prim_orbit(6, s, 110);
  auto res6 = analysis::find_linear_relation(orb6.values, {0, 40, 80}, 6, 20);
  if (res6.relation && res6.relation->palindromic())
    d.note("N = 6: palindromic relation at offsets (0,40,80) on 20 windows");
  else
    d.note("N = 6: not confirmed (" + res6.status + ")");
  return d.done();
}

CriterionOutcome nonintegrable_entropy() {
  Detail d;
  const double target = (3 + std::sqrt(5.0)) / 2;
  auto p = load_preset("nonintegrable6");
  auto zst = zsys::z_stencil_from_tuple(p.tuple);
  auto sol = zsys::solve_z(zst, std::nullopt, 41);
  for (std::size_t k = 0; k < zst.order(); ++k) {
    auto e = analysis::exponent_degrees(sol.exponent_sequence(k));
    double r = analysis::growth_ratio(e, 39).get_d();
    d.expect(std::fabs(r - target) / target < 0.01, "exponent ratio " + std::to_string(r));
  }
  std::vector<BigInt> unit(p.tuple.order(), BigInt(0));
  unit.back() = 1;
  auto trop = analysis::tropical_iterate(p.tuple, unit, 35);
  double rt = analysis::growth_ratio(trop, 39).get_d();
  d.expect(std::fabs(rt - target) / target < 0.01, "tropical ratio " + std::to_string(rt));
  auto factors = algebra::factor_small(zsys::char_poly(zst));
  std::vector<algebra::PolyFactor> want{{algebra::IntPoly::from_longs({1, 0, 1}), 1},
                                        {algebra::IntPoly::from_longs({1, -3, 1}), 1}};
  bool match = factors.size() == 2;
  for (const auto& w : want) {
    bool found = false;
    for (const auto& f : factors) found = found || (f.factor == w.factor && f.multiplicity == 1);
    match = match && found;
  }
  d.expect(match, "factorization " + algebra::factored_string(factors));
  std::ostringstream os;
  os << "exponent ratio " << analysis::growth_ratio(analysis::exponent_degrees(sol.exponent_sequence(0)), 39).get_d()
     << ", tropical ratio " << rt << ", char poly " << algebra::factored_string(factors);
  d.note(os.str());
  return d.done();
}

CriterionOutcome zero_entropy_control() {
  Detail d;
  tsys::TStencil st{load_preset("somos4").tuple};
  auto orb = tsys::iterate_t_symbolic(st, 17);
  auto total = analysis::degree_sequence(orb);
  bool any_fit = analysis::fit_exact_polynomial(total.d, 8, 20, 2).has_value();
  for (std::size_t i = 0; i < 4 && !any_fit; ++i)
    any_fit = analysis::fit_exact_polynomial(analysis::degree_sequence(orb, analysis::DegreeMode::of(i)).d, 8, 20, 2)
                  .has_value();
  d.expect(any_fit, "no exact quadratic through d_8..d_20 (total or any single variable)");
  auto est = analysis::entropy_estimate(total);
  d.expect(est.entropy == 0 && est.fit == analysis::GrowthFit::Polynomial, "entropy " + std::to_string(est.entropy));
  bool linear_gap = true;
  for (std::size_t n = 4; n + 8 <= 20; ++n)
    linear_gap = linear_gap && total.d[n + 8] - total.d[n] == BigInt(4 * static_cast<long>(n) + 10);
  d.note(std::string("d_{n+8} - d_n = 4n + 10 on n = 4..12: ") + (linear_gap ? "holds" : "fails"));
  d.note("entropy " + std::to_string(est.entropy) + ", degree " + std::to_string(est.polynomial_degree) + " via " +
         est.method);
  return d.done();
}

CriterionOutcome seed_dynamics() {
  Detail d;
  Sampler s(17);
  for (const char* name : {"somos4", "prim4"}) {
    auto p = load_preset(name);
    for (int t = 0; t < 3; ++t) {
      auto seed = ysys::y_from_seed_dynamics(p.matrix, s.window(p.matrix.n()), 8);
      std::vector<BigRational> head(seed.values.begin(), seed.values.begin() + static_cast<long>(p.matrix.n()));
      d.expect(ysys::iterate_y(p.tuple, head, 8).values == seed.values, std::string(name) + " mismatch");
    }
    d.note(std::string(name) + ": 3 random windows, 8 steps");
  }
  return d.done();
}

std::vector<Criterion> build_criteria() {
  std::vector<Criterion> c;
  auto add = [&](int id, std::string name, std::vector<std::string> tags, double budget,
                 std::function<CriterionOutcome()> f, bool blocking = true, bool unattainable = false) {
    c.push_back(Criterion{id, std::move(name), std::move(tags), budget, blocking, unattainable, std::move(f)});
  };
  add(1, "Somos-4 integer sequence", {"tsystem", "somos4"}, 1, somos4_sequence);
  add(2, "period-1 identity mu_0(B) = rho(B)", {"quiver", "period1"}, 1, period1_identity);
  add(3, "builder fidelity", {"quiver", "builder"}, 1, builder_fidelity);
  add(4, "palindromic basis and lattice span", {"reduction", "palindromic"}, 1, palindromic_bases);
  add(5, "U-system derivation", {"reduction", "usystem"}, 5, usystem_derivation);
  add(6, "projection conjugacy", {"reduction", "conjugacy"}, 10, conjugacy);
  add(7, "Laurent property of symbolic T_z", {"tsystem", "laurent"}, 60, laurentness);
  add(8, "Y-residual iff Z-constraint", {"ysystem", "zsystem"}, 5, tz_correspondence);
  add(9, "q-Painleve I orbits", {"ysystem", "qp1"}, 5, qp1);
  add(10, "first integral conservation", {"analysis", "first-integral"}, 5, first_integral);
  add(11, "symplectic invariance", {"reduction", "symplectic"}, 10, symplectic);
  add(12, "generating function second-order convergence", {"reduction", "dilog"}, 5, generating_function);
  add(13, "order-24 linear relation", {"analysis", "linrel"}, 30, prim4_relation);
  add(14, "spaced linear relation spot check", {"analysis", "linrel", "conjecture"}, 300, conjecture_spot_check,
      false);
  add(15, "nonintegrable entropy", {"analysis", "entropy"}, 10, nonintegrable_entropy);
  add(16, "zero-entropy control", {"analysis", "entropy"}, 60, zero_entropy_control, true, true);
  add(17, "seed dynamics cross-check", {"ysystem", "quiver", "seed"}, 5, seed_dynamics);
  return c;
}

bool matches(const Criterion& c, const std::string& filter) {
  if (filter.empty()) return true;
  if (c.name.find(filter) != std::string::npos || std::to_string(c.id) == filter) return true;
  for (const auto& t : c.tags)
    if (t == filter) return true;
  return false;
}

CriterionResult run_one(const Criterion& c) {
  CriterionResult r{c.id, c.name, false, false, c.blocking, c.known_unattainable, 0, c.budget_seconds, {}};
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto out = c.run();
    r.passed = out.passed;
    r.detail = out.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.within_budget = r.seconds < c.budget_seconds;
  if (!r.within_budget) r.detail += "; over budget (" + std::to_string(c.budget_seconds) + " s)";
  return r;
}

}  // namespace

std::string CriterionResult::status() const {
  if (ok()) return "PASS";
  if (known_unattainable) return "FAIL (unattainable)";
  if (!blocking) return "FAIL (non-blocking)";
  return "FAIL";
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> c = build_criteria();
  return c;
}

std::vector<CriterionResult> run_acceptance(const std::string& filter, std::size_t jobs) {
  std::vector<const Criterion*> chosen;
  for (const auto& c : acceptance_criteria())
    if (matches(c, filter)) chosen.push_back(&c);
  std::vector<CriterionResult> out(chosen.size());
  const int threads = static_cast<int>(std::max<std::size_t>(1, jobs));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(chosen.size()); ++i)
    out[static_cast<std::size_t>(i)] = run_one(*chosen[static_cast<std::size_t>(i)]);
  return out;
}

std::size_t SuiteSummary::blocking_failures() const {
  std::size_t n = 0;
  for (const auto& c : criteria) n += !c.ok() && c.blocking && !c.known_unattainable;
  for (const auto& p : presets) n += !p.ok();
  return n;
}

Json SuiteSummary::to_json() const {
  Json cs = Json::array();
  for (const auto& c : criteria)
    cs.push_back(Json{{"id", c.id},
                      {"name", c.name},
                      {"status", c.status()},
                      {"blocking", c.blocking},
                      {"seconds", c.seconds},
                      {"budget_seconds", c.budget_seconds},
                      {"detail", c.detail}});
  Json ps = Json::array();
  for (const auto& p : presets)
    ps.push_back(Json{{"name", p.name},
                      {"period1", p.period1},
                      {"builder_matches", p.builder_matches},
                      {"tuple_matches", p.tuple_matches},
                      {"witness", p.witness}});
  return Json{{"criteria", cs}, {"presets", ps}, {"blocking_failures", blocking_failures()}};
}

SuiteSummary verify_suite(const std::string& filter, std::size_t jobs, const std::vector<Preset>& extra) {
  SuiteSummary s;
  if (filter.empty())
    for (const auto& name : preset_names()) s.presets.push_back(check_preset(load_preset(name)));
  for (const auto& p : extra) s.presets.push_back(check_preset(p));
  s.criteria = run_acceptance(filter, jobs);
  return s;
}

}  // namespace cpl::cli
