// One PASS/FAIL line per acceptance criterion; nonzero exit when any fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qml/homological.hpp"
#include "qml/suite.hpp"

using namespace qml;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

struct Instance3 {
  QuiverPtr q = subspace_quiver(3);
  DimVector alpha{1, 1, 1, 2};
  StabilityParam theta{2, 2, 2, -3};
};

bool all_passed(const std::vector<CheckReport>& rs, std::string& why) {
  for (const auto& r : rs)
    if (!r.passed()) {
      why = r.name + ": " + std::to_string(r.failure_total) + " failures";
      return false;
    }
  return !rs.empty();
}

bool euler_identity(std::string& why) {
  std::vector<CheckReport> rs;
  for (const auto* f : {&F2, &F3}) {
    rs.push_back(verify_euler_identity(subspace_quiver(3), *f, 200, 2, 1));
    rs.push_back(verify_euler_identity(linear_quiver(3), *f, 200, 2, 2));
  }
  return all_passed(rs, why);
}

bool resolution_maps(std::string& why) {
  Instance3 s;
  std::vector<CheckReport> rs{verify_resolution_maps(s.q, s.alpha, s.theta, F2, Budget::unlimited(), 4),
                              verify_resolution_maps(linear_quiver(3), {1, 2, 1}, {1, 0, -1}, F2, Budget::unlimited(), 4)};
  return all_passed(rs, why);
}

bool subspace_criterion(std::string& why) {
  Instance3 s;
  auto r3 = verify_subspace_criterion(s.q, s.alpha, s.theta, F2, Budget::unlimited(), 4);
  auto r4 = verify_subspace_criterion(subspace_quiver(4), {1, 1, 1, 1, 2}, {2, 2, 2, 2, -4}, F2,
                                      Budget::unlimited(), 4);
  if (r3.checked != 64 || r4.checked != 256) {
    why = "unexpected point counts";
    return false;
  }
  // Independent brute force on the three-line instance.
  std::uint64_t stable = 0;
  for (std::uint64_t i = 0; i < 64; ++i) {
    auto m = rep_at_index(s.q, F2, s.alpha, i);
    const auto want = oracle::stability(m, s.theta.values());
    const auto got = subspace_quiver_criterion(m, {1, 1, 1}).verdict;
    const bool same = (want == oracle::Verdict::stable && got == Verdict::stable) ||
                      (want == oracle::Verdict::semistable && got == Verdict::semistable_not_stable) ||
                      (want == oracle::Verdict::unstable && got == Verdict::unstable);
    if (!same) {
      why = "closed form disagrees with brute force at index " + std::to_string(i);
      return false;
    }
    stable += want == oracle::Verdict::stable;
  }
  if (stable != 6) {
    why = "expected 6 stable triples of lines";
    return false;
  }
  return all_passed({r3, r4}, why);
}

bool engel_reineke(std::string& why) {
  Instance3 s;
  std::vector<CheckReport> rs;
  for (const auto& r : verify_engel_reineke(linear_quiver(2), {1, 1}, {1, 1}, F2, Budget::unlimited(), 2))
    rs.push_back(r);
  auto split = theta_split(s.theta);
  for (const auto& beta : {restricted_dim(s.alpha, split.plus), restricted_dim(s.alpha, split.minus)})
    for (const auto& r : verify_engel_reineke(s.q, s.alpha, beta, F2, Budget::unlimited(), 4)) rs.push_back(r);
  return all_passed(rs, why);
}

bool framed_parameters(std::string& why) {
  std::vector<CheckReport> rs;
  struct Case {
    QuiverPtr q;
    DimVector alpha;
    StabilityParam theta;
  };
  for (const auto& c : {Case{linear_quiver(2), {1, 1}, {1, -1}}, Case{subspace_quiver(3), {1, 1, 1, 2}, {2, 2, 2, -3}},
                        Case{linear_quiver(3), {1, 2, 1}, {1, 0, -1}}}) {
    const long long n0 = default_N(c.theta, c.alpha);
    std::vector<std::vector<CheckReport>> per_n;
    for (long long n : {n0, n0 + 7}) {
      per_n.push_back(verify_theta_pm(c.q, c.alpha, c.theta, F2, n, Budget::unlimited(), 4));
      auto fs = verify_framed_stability(c.q, c.alpha, c.theta, F2, n, Budget::unlimited(), 4);
      rs.insert(rs.end(), fs.begin(), fs.end());
      rs.insert(rs.end(), per_n.back().begin(), per_n.back().end());
    }
    for (std::size_t i = 0; i < per_n[0].size(); ++i)
      if (per_n[0][i].counts != per_n[1][i].counts) {
        why = "outcome depends on N";
        return false;
      }
  }
  return all_passed(rs, why);
}

bool equivariance_and_saturation(std::string& why) {
  Instance3 s;
  auto rs = verify_equivariance(s.q, s.alpha, F2, 200, 11, 4);
  auto r3 = verify_equivariance(linear_quiver(3), {1, 2, 1}, F3, 200, 12, 4);
  rs.insert(rs.end(), r3.begin(), r3.end());
  auto sat = verify_saturation(s.q, s.alpha, s.theta, F2, default_N(s.theta, s.alpha), Budget::unlimited(), 4);
  rs.insert(rs.end(), sat.begin(), sat.end());
  for (const auto& r : rs)
    if (r.checked == 0) {
      why = r.name + " checked nothing";
      return false;
    }
  return all_passed(rs, why);
}

const LocusSummary* stable_locus(const CorrespondenceReport& r) {
  for (const auto& l : r.loci)
    if (l.locus == "stable") return &l;
  return nullptr;
}

bool correspondence(std::string& why) {
  Instance3 s;
  auto r3 = verify_correspondence(s.q, s.alpha, s.theta, F2, default_N(s.theta, s.alpha), Budget::unlimited(), 4);
  auto r4 = verify_correspondence(subspace_quiver(4), {1, 1, 1, 1, 2}, {2, 2, 2, 2, -4}, F2,
                                  default_N({2, 2, 2, 2, -4}, {1, 1, 1, 1, 2}), Budget::unlimited(), 4);
  const auto* l3 = stable_locus(r3);
  const auto* l4 = stable_locus(r4);
  if (!r3.passed() || !r4.passed() || !l3 || !l4) {
    why = "correspondence checks failed";
    return false;
  }
  if (l3->rep_orbits != 1 || l3->phi_orbits != 1 || l3->psi_orbits != 1 || l3->pairings.size() != 1) {
    why = "three lines in the plane should give a single orbit on every side";
    return false;
  }
  if (l4->rep_orbits != l4->phi_orbits || l4->rep_orbits != l4->psi_orbits || l4->pairings.size() != l4->rep_orbits) {
    why = "orbit counts differ on four lines";
    return false;
  }
  return true;
}

bool zelevinsky(std::string& why) {
  struct Case {
    DimVector alpha;
    std::uint64_t target;
  };
  for (const auto& c : {Case{{1, 1, 1}, 4}, Case{{1, 2, 1}, 16}})
    for (auto w : {ZelevinskyMap::zeta, ZelevinskyMap::eta}) {
      auto r = verify_zelevinsky_bijection(linear_quiver(3), c.alpha, F2, w, Budget::unlimited());
      if (!r.passed() || r.image_size != c.target || r.target_flags != c.target) {
        why = to_string(w) + " is not a bijection onto its target";
        return false;
      }
    }
  return true;
}

bool deterministic_reports(std::string& why) {
  SuiteConfig cfg = preset("subspace-3-2");
  cfg.seed = 7;
  cfg.samples = 50;
  auto a = run_suite(cfg);
  cfg.workers = 4;
  auto b = run_suite(cfg);
  if (a.exit_code != kExitOk) {
    why = "suite run failed";
    return false;
  }
  if (io::dump(a.report) != io::dump(b.report)) {
    why = "reports differ between runs";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria{
      {"euler form equals dim Hom - dim Ext", euler_identity},
      {"phi onto and psi injective on semistable points", resolution_maps},
      {"closed-form subspace criterion", subspace_criterion},
      {"framed stability four-way equivalence", engel_reineke},
      {"theta+/theta- and eta framed parameters, N-independent", framed_parameters},
      {"Hilbert point equivariance and saturation", equivariance_and_saturation},
      {"stable orbit correspondence", correspondence},
      {"flag bijections on A_3", zelevinsky},
      {"byte-identical reports", deterministic_reports},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = criteria[i].second(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %zu: %s%s%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                ok ? "" : " -- ", ok ? "" : why.c_str());
    failed += !ok;
  }
  return failed == 0 ? 0 : 1;
}
