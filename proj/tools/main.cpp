#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "qml/suite.hpp"

using namespace qml;
using io::Json;

namespace {

struct Globals {
  std::string quiver, alpha, theta, field = "F2", out, preset;
  std::optional<long long> n;
  std::uint64_t budget = Budget::default_limit();
  unsigned workers = 1;
  std::uint64_t seed = 0;
  bool timings = false;
};

/// Thrown for command-line misuse that CLI11 cannot see; exits 2.
struct Usage : Error {
  using Error::Error;
};

void emit(const Globals& g, const Json& j) {
  if (g.out.empty())
    std::cout << io::dump(j);
  else
    io::write_file(g.out, j);
}

SuiteConfig base_config(const Globals& g) {
  SuiteConfig cfg;
  if (!g.preset.empty()) cfg = preset(g.preset);
  cfg.quiver_path = g.quiver;
  cfg.alpha = g.alpha;
  cfg.theta = g.theta;
  cfg.field = g.field;
  cfg.n = g.n;
  cfg.budget = g.budget;
  cfg.workers = g.workers;
  cfg.seed = g.seed;
  cfg.output = g.out;
  cfg.timings = g.timings;
  return cfg;
}

PrimeField prime_field(const std::string& name) {
  const auto spec = FieldSpec::parse(name);
  if (spec.kind != FieldSpec::Kind::prime) throw Usage("this command enumerates points and needs a finite field");
  return PrimeField(spec.p);
}

QuiverPtr quiver_only(const Globals& g) {
  if (!g.quiver.empty()) return io::parse_quiver(io::read_file(g.quiver), g.quiver);
  if (!g.preset.empty()) return preset_instance(g.preset).quiver;
  throw Usage("give --quiver or --preset");
}

Json vector_json(const std::string& source, const char* flag) {
  if (source.empty()) throw Usage(std::string(flag) + " is required");
  return std::filesystem::is_regular_file(source) ? io::read_file(source) : io::inline_vector(source);
}

template <class F>
Json resolve_json(const Representation<F>& m, const std::optional<StabilityParam>& theta) {
  const auto& q = m.quiver();
  Json j;
  j["representation"] = io::to_json(m);
  if (theta) {
    auto [p, phi] = canonical_phi(m, *theta);
    auto [i, psi] = canonical_psi(m, *theta);
    j["theta"] = io::to_json(q, *theta);
    j["phi"] = {{"source", io::to_json(p)}, {"map", io::to_json(q, phi)}, {"surjective", is_surjective(phi)}};
    j["psi"] = {{"target", io::to_json(i)}, {"map", io::to_json(q, psi)}, {"injective", is_injective(psi)}};
  } else {
    auto pr = projective_resolution(m);
    auto ir = injective_resolution(m);
    j["projective_resolution"] = {{"P0", io::to_json(pr.p0)},
                                  {"P1", io::to_json(pr.p1)},
                                  {"d", io::to_json(q, pr.d)},
                                  {"phi", io::to_json(q, pr.phi)}};
    j["injective_resolution"] = {{"I0", io::to_json(ir.i0)},
                                 {"I1", io::to_json(ir.i1)},
                                 {"psi", io::to_json(q, ir.psi)},
                                 {"delta", io::to_json(q, ir.delta)}};
  }
  return j;
}

template <class F>
Json hom_ext_json(const Representation<F>& m, const Representation<F>& n) {
  return {{"hom", hom_dim(m, n)},
          {"ext_projective", ext_dim_via_projective(m, n)},
          {"ext_injective", ext_dim_via_injective(m, n)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quiver moduli computations and exhaustive verification over small finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--quiver", g.quiver, "quiver JSON file");
  app.add_option("--alpha", g.alpha, "dimension vector: JSON file or inline 1,1,2");
  app.add_option("--theta", g.theta, "stability parameter: JSON file or inline 2,2,2,-3");
  app.add_option("--field", g.field, "F2, F3, F5, ... or Q");
  app.add_option("--N", g.n, "framing weight N (default 1 + sum |theta_i| alpha_i)");
  app.add_option("--budget", g.budget, "enumeration step limit per check (env QML_BUDGET)")->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--out", g.out, "write JSON here instead of stdout");
  app.add_option("--preset", g.preset, "named instance: subspace-3-2, subspace-4-2, an-linear-111, an-linear-121");
  app.add_flag("--timings", g.timings, "include runtimes (reports stop being byte-identical)");

  auto* euler = app.add_subcommand("euler", "Euler form <alpha, beta>; with --rep/--rep2 also Hom and Ext");
  std::string beta, rep_path, rep2_path;
  euler->add_option("--beta", beta, "second dimension vector")->required();
  euler->add_option("--rep", rep_path, "representation JSON");
  euler->add_option("--rep2", rep2_path, "second representation JSON");

  auto* stab = app.add_subcommand("check-stability", "exhaustive theta-stability verdict with witness");
  stab->add_option("--rep", rep_path, "representation JSON")->required();
  bool closed_form = false;
  stab->add_flag("--closed-form", closed_form, "also evaluate the subspace-quiver closed form");

  auto* resolve = app.add_subcommand("resolve", "canonical maps phi_M, psi_M (with --theta) or both resolutions");
  resolve->add_option("--rep", rep_path, "representation JSON")->required();

  auto* grass = app.add_subcommand("grassmannian", "points and orbits of Gr^alpha(P+) or Gr_alpha(I-)");
  std::string ambient = "p_plus";
  bool count_only = false;
  grass->add_option("--ambient", ambient, "p_plus or i_minus")->check(CLI::IsMember({"p_plus", "i_minus"}));
  grass->add_flag("--count", count_only, "counts and orbit sizes only");

  auto* corr = app.add_subcommand("correspond", "orbit-level correspondence report");

  auto* zel = app.add_subcommand("zelevinsky", "Zelevinsky map and its dual on linearly oriented A_n");
  std::string which = "zeta";
  bool zverify = false, emit_matrix = false;
  zel->add_option("--which", which, "zeta or eta")->check(CLI::IsMember({"zeta", "eta"}));
  zel->add_flag("--verify", zverify, "exhaustive bijection check");
  zel->add_flag("--emit-matrix", emit_matrix, "print g_M / h_M and its flag for --rep");
  zel->add_option("--rep", rep_path, "representation JSON (with --emit-matrix)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::string vbeta;
  std::vector<std::string> suite_names{"all"};
  for (const auto& e : suite_registry()) suite_names.push_back(e.name);
  verify->add_option("suite", suite, "suite name")->check(CLI::IsMember(suite_names));
  verify->add_option("--beta", vbeta, "framing vector for engel-reineke");
  std::size_t samples = 200;
  verify->add_option("--samples", samples, "samples for sampled suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }

  try {
    if (verify->parsed()) {
      auto cfg = base_config(g);
      cfg.suite = suite;
      cfg.beta = vbeta;
      cfg.samples = samples;
      auto r = run_suite(cfg);
      emit(g, r.report);
      if (r.report.contains("error")) std::cerr << "qml: " << r.report["error"]["message"].get<std::string>() << "\n";
      return r.exit_code;
    }

    if (euler->parsed()) {
      auto q = quiver_only(g);
      auto a = io::parse_dim(vector_json(g.alpha, "--alpha"), *q, "--alpha");
      auto b = io::parse_dim(vector_json(beta, "--beta"), *q, "--beta");
      Json j{{"alpha", io::to_json(*q, a)}, {"beta", io::to_json(*q, b)}, {"euler", euler_form(*q, a, b)}};
      if (!rep_path.empty() || !rep2_path.empty()) {
        if (rep_path.empty() || rep2_path.empty()) throw Usage("--rep and --rep2 go together");
        const auto mj = io::read_file(rep_path), nj = io::read_file(rep2_path);
        const auto spec = io::parse_field(mj.value("field", Json(g.field)), rep_path + "/field");
        if (spec.kind == FieldSpec::Kind::rationals) {
          RationalField k;
          j["dimensions"] = hom_ext_json(io::parse_rep(mj, q, k, rep_path), io::parse_rep(nj, q, k, rep2_path));
        } else {
          PrimeField k(spec.p);
          j["dimensions"] = hom_ext_json(io::parse_rep(mj, q, k, rep_path), io::parse_rep(nj, q, k, rep2_path));
        }
      }
      emit(g, j);
      return kExitOk;
    }

    if (stab->parsed()) {
      auto q = quiver_only(g);
      const auto mj = io::read_file(rep_path);
      const auto field = prime_field(io::parse_field(mj.value("field", Json(g.field)), rep_path + "/field").name());
      auto m = io::parse_rep(mj, q, field, rep_path);
      const auto theta = io::parse_theta(vector_json(g.theta, "--theta"), *q, "--theta");
      Budget budget(g.budget);
      Json j = io::to_json(*q, check_stability(m, theta, budget));
      j["theta_value"] = theta_value(theta, m.dim());
      if (closed_form) {
        auto w = subspace_quiver_weights(*q, m.dim(), theta);
        if (!w) throw Usage("--closed-form needs the subspace quiver with theta = (n a, -|a|)");
        j["closed_form"] = io::to_json(*q, subspace_quiver_criterion(m, *w));
      }
      emit(g, j);
      return kExitOk;
    }

    if (resolve->parsed()) {
      auto q = quiver_only(g);
      const auto mj = io::read_file(rep_path);
      const auto spec = io::parse_field(mj.value("field", Json(g.field)), rep_path + "/field");
      std::optional<StabilityParam> theta;
      if (!g.theta.empty()) theta = io::parse_theta(vector_json(g.theta, "--theta"), *q, "--theta");
      Json j = spec.kind == FieldSpec::Kind::rationals
                   ? resolve_json(io::parse_rep(mj, q, RationalField{}, rep_path), theta)
                   : resolve_json(io::parse_rep(mj, q, PrimeField(spec.p), rep_path), theta);
      emit(g, j);
      return kExitOk;
    }

    if (grass->parsed()) {
      const auto inst = load_instance(base_config(g));
      const auto field = prime_field(g.field);
      const auto& q = inst.quiver;
      const auto split = theta_split(inst.theta);
      const bool plus = ambient == "p_plus";
      const auto mult = restricted_dim(inst.alpha, plus ? split.plus : split.minus);
      const auto s = plus ? projective_standard(q, field, mult) : injective_standard(q, field, mult);
      Budget budget(g.budget);
      auto points = plus ? quotient_grassmannian_points(s.rep(), inst.alpha, budget)
                         : grassmannian_points(s.rep(), inst.alpha, budget);
      const auto group = group_elements(field, mult, budget);
      const auto total = points.size();
      const auto part = orbit_partition(s, std::move(points), group);
      Json j;
      j["ambient"] = ambient;
      j["multiplicity"] = io::to_json(*q, mult);
      j["ambient_dim"] = io::to_json(*q, s.rep().dim());
      j["points"] = total;
      j["group_order"] = group.size();
      Json orbits = Json::array();
      for (const auto& o : part.orbits) {
        Json oj{{"size", o.size()}};
        if (!count_only) oj["representative"] = io::to_json(*q, o.front(), &s.module.labels);
        orbits.push_back(std::move(oj));
      }
      j["orbit_count"] = part.orbits.size();
      j["orbits"] = std::move(orbits);
      emit(g, j);
      return kExitOk;
    }

    if (corr->parsed()) {
      const auto cfg = base_config(g);
      const auto inst = load_instance(cfg);
      const auto field = prime_field(g.field);
      Budget budget(g.budget);
      const long long n = g.n ? *g.n : default_N(inst.theta, inst.alpha);
      auto r = verify_correspondence(inst.quiver, inst.alpha, inst.theta, field, n, budget, g.workers);
      emit(g, io::to_json(r));
      return r.passed() ? kExitOk : kExitFailures;
    }

    if (zel->parsed()) {
      const auto field = prime_field(g.field);
      QuiverPtr q;
      DimVector alpha;
      if (!g.quiver.empty() || !g.preset.empty()) {
        q = quiver_only(g);
        if (!g.alpha.empty()) alpha = io::parse_dim(vector_json(g.alpha, "--alpha"), *q, "--alpha");
        else if (!g.preset.empty()) alpha = preset_instance(g.preset).alpha;
      } else if (!g.alpha.empty()) {
        const auto v = io::inline_vector(g.alpha);
        if (!v.is_array() || v.empty()) throw Usage("--alpha must list one entry per vertex of A_n");
        q = linear_quiver(v.size());
        alpha = io::parse_dim(v, *q, "--alpha");
      }
      if (emit_matrix) {
        if (rep_path.empty()) throw Usage("--emit-matrix needs --rep");
        const auto mj = io::read_file(rep_path);
        if (!q) {
          // A_n with n read off the representation's dimension entries.
          q = linear_quiver(mj.at("dim").size());
        }
        auto m = io::parse_rep(mj, q, field, rep_path);
        const auto chain = linear_chain(*q);
        std::vector<long long> profile;
        for (auto v : chain) profile.push_back(m.vdim(v));
        const auto mat = which == "zeta" ? zelevinsky_g(m) : dual_zelevinsky_h(m);
        const auto flag = flag_of_matrix(mat, profile);
        Json steps = Json::array();
        for (const auto& st : flag.steps) steps.push_back(io::to_json(st));
        emit(g, Json{{"map", which},
                     {"matrix", io::to_json(mat)},
                     {"flag", std::move(steps)},
                     {"in_schubert", which == "zeta" ? in_omega(flag, profile) : in_upsilon(flag, profile)},
                     {"in_opposite_cell", in_opposite_cell(flag, profile)}});
        return kExitOk;
      }
      if (!q) throw Usage("give --alpha (inline), --quiver with --alpha, or --preset");
      if (!zverify) throw Usage("choose --verify or --emit-matrix");
      Budget budget(g.budget);
      auto r = verify_zelevinsky_bijection(q, alpha, field, which == "zeta" ? ZelevinskyMap::zeta : ZelevinskyMap::eta,
                                           budget);
      emit(g, io::to_json(*q, r));
      return r.passed() ? kExitOk : kExitFailures;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "qml: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "qml: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "qml: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "qml: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
