#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "qml/suite.hpp"

using namespace qml;

namespace {

SuiteConfig small(const std::string& suite) {
  SuiteConfig cfg = preset("subspace-3-2");
  cfg.suite = suite;
  cfg.samples = 30;
  return cfg;
}

const io::Json& suite_entry(const io::Json& report, const std::string& name) {
  for (const auto& s : report["suites"])
    if (s["suite"] == name) return s;
  throw std::runtime_error("no suite " + name);
}

}  // namespace

TEST(Suite, Presets) {
  auto names = preset_names();
  for (const char* n : {"subspace-3-2", "subspace-4-2", "an-linear-111", "an-linear-121"})
    EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
  auto inst = preset_instance("subspace-3-2");
  EXPECT_EQ(inst.alpha, (DimVector{1, 1, 1, 2}));
  EXPECT_EQ(theta_value(inst.theta, inst.alpha), 0);
  EXPECT_THROW(preset("nope"), UnknownPreset);
}

TEST(Suite, ExitCodes) {
  EXPECT_EQ(run_suite(small("resolution-maps")).exit_code, kExitOk);

  auto unknown = small("no-such-suite");
  EXPECT_EQ(run_suite(unknown).exit_code, kExitParse);

  SuiteConfig bad_preset;
  bad_preset.preset = "nope";
  auto r = run_suite(bad_preset);
  EXPECT_EQ(r.exit_code, kExitParse);
  EXPECT_EQ(r.report["error"]["kind"], "unknown_preset");

  auto tight = small("resolution-maps");
  tight.budget = 1;
  auto b = run_suite(tight);
  EXPECT_EQ(b.exit_code, kExitBudget);
  EXPECT_EQ(b.report["exit_code"], kExitBudget);

  auto rational = small("resolution-maps");
  rational.field = "Q";
  EXPECT_EQ(run_suite(rational).exit_code, kExitParse);

  SuiteConfig malformed;
  malformed.quiver_path = std::string(QML_TEST_DATA) + "/malformed_quiver.json";
  malformed.alpha = "1,1";
  malformed.theta = "1,-1";
  auto m = run_suite(malformed);
  EXPECT_EQ(m.exit_code, kExitParse);
  EXPECT_NE(m.report["error"]["message"].get<std::string>().find(":2:"), std::string::npos);
}

TEST(Suite, InapplicableSuitesAreSkipped) {
  auto z = run_suite(small("zelevinsky"));
  EXPECT_EQ(z.exit_code, kExitOk);
  EXPECT_EQ(suite_entry(z.report, "zelevinsky")["status"], "skipped");

  SuiteConfig a = preset("an-linear-111");
  a.suite = "subspace-criterion";
  auto s = run_suite(a);
  EXPECT_EQ(s.exit_code, kExitOk);
  EXPECT_EQ(suite_entry(s.report, "subspace-criterion")["status"], "skipped");
}

TEST(Suite, FullRunsPass) {
  for (const char* name : {"subspace-3-2", "an-linear-111"}) {
    SuiteConfig cfg = preset(name);
    cfg.samples = 40;
    cfg.workers = 2;
    auto r = run_suite(cfg);
    EXPECT_EQ(r.exit_code, kExitOk) << io::dump(r.report["summary"]);
    EXPECT_EQ(r.report["summary"]["failed"], 0);
    EXPECT_EQ(r.report["suites"].size(), suite_registry().size());
  }
}

TEST(Suite, ExplicitInstanceOverridesPreset) {
  SuiteConfig cfg;
  cfg.quiver_path = std::string(QML_TEST_DATA) + "/a3.json";
  cfg.alpha = "1,1,1";
  cfg.theta = "1,0,-1";
  cfg.suite = "resolution-maps";
  auto r = run_suite(cfg);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["instance"]["default_N"], 3);
}

TEST(Suite, ReportsAreDeterministic) {
  SuiteConfig cfg = preset("subspace-3-2");
  cfg.seed = 7;
  cfg.samples = 25;
  auto a = io::dump(run_suite(cfg).report);
  cfg.workers = 3;
  auto b = io::dump(run_suite(cfg).report);
  EXPECT_EQ(a, b);
  cfg.workers = 1;
  EXPECT_EQ(io::dump(run_suite(cfg).report), a);
}

// Every public verification operation is reachable from some suite.
TEST(Suite, CoverageAudit) {
  std::set<std::string> declared;
  const std::regex decl(R"((verify_\w+)\()");
  for (const auto& entry : std::filesystem::directory_iterator(QML_INCLUDE_DIR)) {
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    for (std::sregex_iterator it(text.begin(), text.end(), decl), end; it != end; ++it) declared.insert((*it)[1]);
  }
  ASSERT_FALSE(declared.empty());
  std::set<std::string> driven;
  for (const auto& s : suite_registry()) driven.insert(s.operation);
  for (const auto& d : declared) EXPECT_TRUE(driven.count(d)) << d << " is not driven by any suite";
  for (const auto& d : driven) EXPECT_TRUE(declared.count(d)) << d << " is not a declared operation";
}
