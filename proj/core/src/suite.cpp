#include "qml/suite.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <set>

#include "qml/homological.hpp"

namespace qml {

namespace {

constexpr int kSchemaVersion = 1;

struct Preset {
  std::string name;
  std::function<Instance()> make;
};

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = {
      {"subspace-3-2",
       [] {
         return Instance{"subspace-3-2", subspace_quiver(3), DimVector{1, 1, 1, 2}, subspace_quiver_theta(2, {1, 1, 1}),
                         std::nullopt};
       }},
      {"subspace-4-2",
       [] {
         return Instance{"subspace-4-2", subspace_quiver(4), DimVector{1, 1, 1, 1, 2},
                         subspace_quiver_theta(2, {1, 1, 1, 1}), std::nullopt};
       }},
      {"an-linear-111",
       [] { return Instance{"an-linear-111", linear_quiver(3), DimVector{1, 1, 1}, StabilityParam{0, 0, 0}, std::nullopt}; }},
      {"an-linear-121",
       [] { return Instance{"an-linear-121", linear_quiver(3), DimVector{1, 2, 1}, StabilityParam{0, 0, 0}, std::nullopt}; }},
  };
  return all;
}

io::Json vector_source(const std::string& text, const std::string& what) {
  if (std::filesystem::is_regular_file(text)) return io::read_file(text);
  try {
    return io::inline_vector(text);
  } catch (const ParseError& e) {
    throw ParseError(what + ": " + e.what());
  }
}

struct SuiteOutcome {
  std::string status = "passed";
  std::string reason;
  std::vector<CheckReport> checks;
  io::Json details;
};

struct Context {
  const SuiteConfig& cfg;
  const Instance& inst;
  PrimeField field;

  long long base_n() const { return cfg.n ? *cfg.n : default_N(inst.theta, inst.alpha); }
  std::vector<long long> n_values() const {
    if (cfg.n) return {*cfg.n};
    const long long d = default_N(inst.theta, inst.alpha);
    return {d, d + 7};
  }
};

void add_checks(SuiteOutcome& out, std::vector<CheckReport> more, const std::string& prefix = "") {
  for (auto& c : more) {
    if (!prefix.empty()) c.name = prefix + c.name;
    out.checks.push_back(std::move(c));
  }
}

/// Runs one verifier per N and records whether the outcome tallies agree.
SuiteOutcome over_n_values(const Context& ctx,
                           const std::function<std::vector<CheckReport>(long long, Budget&)>& verify) {
  SuiteOutcome out;
  std::vector<std::vector<CheckReport>> runs;
  for (long long n : ctx.n_values()) {
    Budget budget(ctx.cfg.budget);
    runs.push_back(verify(n, budget));
    add_checks(out, runs.back());
  }
  if (runs.size() > 1) {
    CheckReport same;
    same.name = "outcome independent of N";
    for (std::size_t k = 0; k < runs[0].size(); ++k) {
      ++same.checked;
      const auto& a = runs[0][k];
      const auto& b = runs[1][k];
      if (a.checked != b.checked || a.counts != b.counts || a.failure_total != b.failure_total)
        same.fail({k, a.name, "tallies differ between the two N values"});
    }
    out.checks.push_back(std::move(same));
  }
  return out;
}

using SuiteFn = std::function<SuiteOutcome(const Context&)>;

SuiteOutcome run_resolution_maps(const Context& c) {
  Budget b(c.cfg.budget);
  SuiteOutcome out;
  out.checks.push_back(verify_resolution_maps(c.inst.quiver, c.inst.alpha, c.inst.theta, c.field, b, c.cfg.workers));
  return out;
}

SuiteOutcome run_euler(const Context& c) {
  SuiteOutcome out;
  out.checks.push_back(verify_euler_identity(c.inst.quiver, c.field, c.cfg.samples, 2, c.cfg.seed, c.cfg.workers));
  return out;
}

SuiteOutcome run_criterion(const Context& c) {
  Budget b(c.cfg.budget);
  SuiteOutcome out;
  out.checks.push_back(verify_subspace_criterion(c.inst.quiver, c.inst.alpha, c.inst.theta, c.field, b, c.cfg.workers));
  return out;
}

SuiteOutcome run_engel_reineke(const Context& c) {
  std::vector<DimVector> betas;
  if (c.inst.beta) {
    betas.push_back(*c.inst.beta);
  } else {
    const auto split = theta_split(c.inst.theta);
    for (const auto& b : {restricted_dim(c.inst.alpha, split.plus), restricted_dim(c.inst.alpha, split.minus)})
      if (!b.is_zero() && std::find(betas.begin(), betas.end(), b) == betas.end()) betas.push_back(b);
  }
  SuiteOutcome out;
  if (betas.empty()) {
    out.status = "skipped";
    out.reason = "no nonzero framing vector";
    return out;
  }
  for (const auto& beta : betas) {
    Budget b(c.cfg.budget);
    add_checks(out, verify_engel_reineke(c.inst.quiver, c.inst.alpha, beta, c.field, b, c.cfg.workers));
  }
  return out;
}

SuiteOutcome run_theta_pm(const Context& c) {
  return over_n_values(c, [&](long long n, Budget& b) {
    return verify_theta_pm(c.inst.quiver, c.inst.alpha, c.inst.theta, c.field, n, b, c.cfg.workers);
  });
}

SuiteOutcome run_framed_stability(const Context& c) {
  return over_n_values(c, [&](long long n, Budget& b) {
    return verify_framed_stability(c.inst.quiver, c.inst.alpha, c.inst.theta, c.field, n, b, c.cfg.workers);
  });
}

SuiteOutcome run_equivariance(const Context& c) {
  SuiteOutcome out;
  add_checks(out, verify_equivariance(c.inst.quiver, c.inst.alpha, c.field, c.cfg.samples, c.cfg.seed, c.cfg.workers));
  return out;
}

SuiteOutcome run_saturation(const Context& c) {
  Budget b(c.cfg.budget);
  SuiteOutcome out;
  add_checks(out, verify_saturation(c.inst.quiver, c.inst.alpha, c.inst.theta, c.field, c.base_n(), b, c.cfg.workers));
  return out;
}

SuiteOutcome run_correspondence(const Context& c) {
  Budget b(c.cfg.budget);
  auto r = verify_correspondence(c.inst.quiver, c.inst.alpha, c.inst.theta, c.field, c.base_n(), b, c.cfg.workers);
  SuiteOutcome out;
  out.checks = r.checks;
  out.details = io::to_json(r);
  out.details.erase("checks");
  return out;
}

SuiteOutcome run_zelevinsky(const Context& c) {
  SuiteOutcome out;
  out.details = io::Json::array();
  for (auto which : {ZelevinskyMap::zeta, ZelevinskyMap::eta}) {
    Budget b(c.cfg.budget);
    auto r = verify_zelevinsky_bijection(c.inst.quiver, c.inst.alpha, c.field, which, b);
    CheckReport bij;
    bij.name = to_string(which) + " is a bijection onto the target flags";
    bij.checked = 1;
    bij.count("representations", r.representations);
    bij.count("target flags", r.target_flags);
    bij.count("image", r.image_size);
    if (!r.injective || !r.into_target || !r.onto_target)
      bij.fail({0, "", std::string(r.injective ? "" : "not injective; ") + (r.into_target ? "" : "leaves the target; ") +
                           (r.onto_target ? "" : "misses target flags")});
    out.checks.push_back(std::move(bij));
    add_checks(out, {r.membership, r.agreement, r.equivariance}, to_string(which) + ": ");
    auto d = io::to_json(*c.inst.quiver, r);
    d.erase("checks");
    out.details.push_back(std::move(d));
  }
  return out;
}

const std::vector<std::pair<SuiteEntry, SuiteFn>>& registry() {
  static const std::vector<std::pair<SuiteEntry, SuiteFn>> all = {
      {{"resolution-maps", "verify_resolution_maps"}, run_resolution_maps},
      {{"euler-hom-ext", "verify_euler_identity"}, run_euler},
      {{"subspace-criterion", "verify_subspace_criterion"}, run_criterion},
      {{"engel-reineke", "verify_engel_reineke"}, run_engel_reineke},
      {{"theta-pm", "verify_theta_pm"}, run_theta_pm},
      {{"framed-stability", "verify_framed_stability"}, run_framed_stability},
      {{"equivariance", "verify_equivariance"}, run_equivariance},
      {{"saturation", "verify_saturation"}, run_saturation},
      {{"correspondence", "verify_correspondence"}, run_correspondence},
      {{"zelevinsky", "verify_zelevinsky_bijection"}, run_zelevinsky},
  };
  return all;
}

io::Json config_json(const SuiteConfig& cfg) {
  io::Json j;
  j["suite"] = cfg.suite;
  j["preset"] = cfg.preset.empty() ? io::Json(nullptr) : io::Json(cfg.preset);
  j["field"] = cfg.field;
  j["N"] = cfg.n ? io::Json(*cfg.n) : io::Json(nullptr);
  j["budget"] = cfg.budget;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  return j;
}

io::Json instance_json(const Instance& inst) {
  io::Json j;
  j["name"] = inst.name;
  j["quiver"] = io::to_json(*inst.quiver);
  j["alpha"] = io::to_json(*inst.quiver, inst.alpha);
  j["theta"] = io::to_json(*inst.quiver, inst.theta);
  if (inst.beta) j["beta"] = io::to_json(*inst.quiver, *inst.beta);
  j["theta_of_alpha"] = theta_value(inst.theta, inst.alpha);
  j["default_N"] = default_N(inst.theta, inst.alpha);
  return j;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : presets()) names.push_back(p.name);
  return names;
}

Instance preset_instance(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p.make();
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw UnknownPreset("unknown preset '" + name + "' (known: " + known + ")");
}

SuiteConfig preset(const std::string& name) {
  preset_instance(name);
  SuiteConfig cfg;
  cfg.preset = name;
  cfg.field = "F2";
  return cfg;
}

Instance load_instance(const SuiteConfig& cfg) {
  Instance inst;
  if (!cfg.preset.empty()) {
    inst = preset_instance(cfg.preset);
  } else {
    if (cfg.quiver_path.empty()) throw ParseError("no instance: give --preset or --quiver");
    inst.name = "custom";
  }
  if (!cfg.quiver_path.empty()) {
    inst.quiver = io::parse_quiver(io::read_file(cfg.quiver_path), cfg.quiver_path);
    if (cfg.alpha.empty()) throw ParseError("--alpha is required with --quiver");
    inst.alpha = DimVector::zero(inst.quiver->vertex_count());
    inst.theta = StabilityParam::zero(inst.quiver->vertex_count());
  }
  if (!cfg.alpha.empty()) inst.alpha = io::parse_dim(vector_source(cfg.alpha, "--alpha"), *inst.quiver, "--alpha");
  if (!cfg.theta.empty()) inst.theta = io::parse_theta(vector_source(cfg.theta, "--theta"), *inst.quiver, "--theta");
  if (!cfg.beta.empty()) inst.beta = io::parse_dim(vector_source(cfg.beta, "--beta"), *inst.quiver, "--beta");
  return inst;
}

const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> entries = [] {
    std::vector<SuiteEntry> e;
    for (const auto& [entry, fn] : registry()) e.push_back(entry);
    return e;
  }();
  return entries;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  SuiteResult result;
  io::Json& report = result.report;
  report["schema_version"] = kSchemaVersion;
  report["config"] = config_json(cfg);

  auto fail_with = [&](int code, const std::string& kind, const std::string& message) {
    result.exit_code = code;
    report["error"] = {{"kind", kind}, {"message", message}};
    report["exit_code"] = code;
    return result;
  };

  std::vector<std::size_t> selected;
  for (std::size_t k = 0; k < registry().size(); ++k)
    if (cfg.suite == "all" || registry()[k].first.name == cfg.suite) selected.push_back(k);
  if (selected.empty()) return fail_with(kExitParse, "unknown_suite", "unknown suite '" + cfg.suite + "'");

  Instance inst;
  PrimeField field(2);
  try {
    if (cfg.budget == 0) throw ParseError("budget must be positive");
    const auto spec = FieldSpec::parse(cfg.field);
    if (spec.kind != FieldSpec::Kind::prime) throw ParseError("verification suites enumerate points; use a finite field");
    field = PrimeField(spec.p);
    inst = load_instance(cfg);
  } catch (const UnknownPreset& e) {
    return fail_with(kExitParse, "unknown_preset", e.what());
  } catch (const Error& e) {
    return fail_with(kExitParse, "parse", e.what());
  }
  report["instance"] = instance_json(inst);

  const Context ctx{cfg, inst, field};
  io::Json suites = io::Json::array();
  std::uint64_t checks = 0, failures = 0, failed_suites = 0, skipped = 0;
  for (auto k : selected) {
    const auto& [entry, fn] = registry()[k];
    const auto start = std::chrono::steady_clock::now();
    SuiteOutcome out;
    try {
      out = fn(ctx);
    } catch (const BudgetExceeded& e) {
      report["suites"] = std::move(suites);
      return fail_with(kExitBudget, "budget", entry.name + ": " + e.what());
    } catch (const WrongQuiverShape& e) {
      out.status = "skipped";
      out.reason = e.what();
    } catch (const ThetaAlphaNonzero& e) {
      out.status = "skipped";
      out.reason = e.what();
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;

    io::Json sj;
    sj["suite"] = entry.name;
    sj["operation"] = entry.operation;
    bool ok = true;
    io::Json cj = io::Json::array();
    for (const auto& c : out.checks) {
      ok = ok && c.passed();
      checks += c.checked;
      failures += c.failure_total;
      cj.push_back(io::to_json(c));
    }
    if (out.status != "skipped" && !ok) out.status = "failed";
    if (out.status == "failed") ++failed_suites;
    if (out.status == "skipped") ++skipped;
    sj["status"] = out.status;
    if (!out.reason.empty()) sj["reason"] = out.reason;
    sj["checks"] = std::move(cj);
    if (!out.details.is_null()) sj["details"] = std::move(out.details);
    if (cfg.timings) sj["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    suites.push_back(std::move(sj));
  }
  report["suites"] = std::move(suites);
  report["summary"] = {{"suites", selected.size()},
                       {"failed", failed_suites},
                       {"skipped", skipped},
                       {"points_checked", checks},
                       {"failures", failures}};
  result.exit_code = failed_suites ? kExitFailures : kExitOk;
  report["exit_code"] = result.exit_code;
  return result;
}

}  // namespace qml
