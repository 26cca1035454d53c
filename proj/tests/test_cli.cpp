#include "qp3/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace qp3 {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<std::string> command, std::vector<std::string> files, RunConfig cfg = {}) {
  cfg.command = std::move(command);
  for (auto& f : files) f = std::string(QP3_FIXTURE_DIR) + "/" + f;
  cfg.inputs = std::move(files);
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, MasterOnVectorFieldHamiltonian) {
  auto r = invoke({"master", "Theta"}, {"dorfman.model"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{Theta,Theta} = 0\n"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, SkewOfNonabelianDouble) {
  auto r = invoke({"skew", "D"}, {"nonabelian_double.model"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("l3(e1,e2,e1*) = -1/2\n"), std::string::npos);
  EXPECT_NE(r.out.find("linf skew D: PASS"), std::string::npos);
}

TEST(Cli, BrokenJacobiReportsTuple) {
  auto r = invoke({"verify", "linf", "h"}, {"broken_jacobi.model"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("(e1,e2,e3): e3=-1"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"master"}, {"twist5.model"}).code, 1);
  EXPECT_EQ(invoke({"check-bialgebroid", "mu", "gamma"}, {"compat_violation.model"}).code, 1);
  EXPECT_EQ(invoke({"check-bialgebroid", "mu", "gamma"}, {"bialgebroid.model"}).code, 0);
  EXPECT_EQ(invoke({"master", "Nope"}, {"dorfman.model"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}, {"dorfman.model"}).code, 2);
  EXPECT_EQ(invoke({"master"}, {"missing.model"}).code, 2);
  auto bad = invoke({"master"}, {"invalid/unknown_variable.model"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 4, column 14"), std::string::npos) << bad.err;
  EXPECT_EQ(invoke({"master"}, {"invalid/degree_sum.model"}).code, 2);
  RunConfig warn;
  warn.warn_only = true;
  EXPECT_EQ(invoke({"master"}, {"twist5.model"}, warn).code, 0);
}

TEST(Cli, MasterFailureGate) {
  auto r = invoke({"derive", "lwx", "Theta"}, {"twist5.model"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("{Theta,Theta}"), std::string::npos);
  RunConfig allow;
  allow.allow_master_failure = true;
  r = invoke({"derive", "lwx", "Theta"}, {"twist5.model"}, allow);
  EXPECT_NE(r.out.find("table lwx Theta"), std::string::npos);
  EXPECT_NE(r.out.find("master Theta: FAIL"), std::string::npos);
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, RunExecutesTasks) {
  auto r = invoke({"run"}, {"dorfman.model", "nonabelian2.model", "lie_algebra.model"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("== double semidirect g\n"), std::string::npos);
  EXPECT_NE(r.out.find("bracket(th_1,th_2) = th_3"), std::string::npos);
}

TEST(Cli, DeterministicAcrossWorkerCounts) {
  RunConfig one, four;
  four.workers = 4;
  for (const char* f : {"scaling_crossed.model", "bialgebroid.model", "crossed2.model", "four_form.model"}) {
    auto a = invoke({"run"}, {f}, one), b = invoke({"run"}, {f}, one), c = invoke({"run"}, {f}, four);
    EXPECT_EQ(a.out, b.out) << f;
    EXPECT_EQ(a.out, c.out) << f;
  }
}

TEST(Cli, StructuredMirrorsText) {
  RunConfig s;
  s.format = OutputFormat::structured;
  for (const char* f : {"scaling_crossed.model", "bialgebroid.model", "twist5.model", "nonabelian_double.model"}) {
    auto t = invoke({"run"}, {f});
    auto j = invoke({"run"}, {f}, s);
    EXPECT_EQ(t.code, j.code);
    std::vector<std::string> heads;
    std::istringstream ts(t.out);
    for (std::string line; std::getline(ts, line);)
      if (line.rfind("  ", 0) != 0) heads.push_back(line);
    std::vector<Json> recs;
    std::istringstream js(j.out);
    for (std::string line; std::getline(js, line);) recs.push_back(Json::parse(line));
    ASSERT_EQ(heads.size(), recs.size()) << f;
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto& r = recs[i];
      const std::string kind = r["record"];
      if (kind == "report") {
        std::string status = r["report"]["status"];
        EXPECT_EQ(heads[i].rfind(r["name"].get<std::string>() + ": " + status, 0), 0u) << heads[i];
      } else if (kind == "poly") {
        EXPECT_EQ(heads[i], r["name"].get<std::string>() + " = " + r["value"]["text"].get<std::string>());
      } else if (kind == "table") {
        EXPECT_EQ(heads[i].rfind("table " + r["name"].get<std::string>(), 0), 0u);
      } else if (kind == "task") {
        EXPECT_EQ(heads[i].rfind("== ", 0), 0u);
      }
    }
  }
}

}  // namespace
}  // namespace qp3
