// Copyright 2026 The socvexify Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "socvexify/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "socvexify/core.hpp"
#include "socvexify/hull_verify.hpp"
#include "socvexify/json_io.hpp"
#include "socvexify/report_io.hpp"

namespace socvexify {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "socvexify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("socvexify_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  size_t files() const {
    return static_cast<size_t>(std::distance(fs::directory_iterator(dir_), fs::directory_iterator()));
  }
  fs::path dir_;
};

TEST_F(Cli, ExampleOnePrintsEnvelopeCoefficients) {
  const CliRun r = run({"example", "--id", "1"});
  EXPECT_EQ(r.code, 0);
  const auto pos = r.out.find("coefficients: ");
  ASSERT_NE(pos, std::string::npos);
  std::istringstream line(r.out.substr(pos + 14));
  double a = 0, b = 0;
  line >> a >> b;
  EXPECT_NEAR(a, 1.0 - std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(b, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(run({"example", "--id", "2"}).code, 0);
  EXPECT_EQ(run({"example", "--id", "3"}).code, 2);
}

TEST_F(Cli, GenKpIsByteIdentical) {
  for (const char* name : {"a.json", "b.json"}) {
    EXPECT_EQ(run({"gen-kp", "--type", "3", "--n", "10", "--index", "3", "--seed", "1", "--out",
                   path(name)})
                  .code,
              0);
  }
  EXPECT_EQ(read_file(path("a.json")), read_file(path("b.json")));
  EXPECT_EQ(files(), 2u);  // no temporaries left behind
  EXPECT_EQ(instance_from_json(read_file(path("a.json"))).type, 3);
}

TEST_F(Cli, VerifyHullOnNormalizedSets) {
  const CliRun r = run({"verify-hull", "--trials", "50", "--n", "3", "--m", "2", "--p", "3", "--norm",
                     "l2", "--seed", "7", "--report", path("hull.csv")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  const std::string csv = read_file(path("hull.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "point_id,x1,x2,x3,y1,y2,W_status,hull_status,W_margin,hull_margin");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 51);
}

TEST_F(Cli, VerifyHullReportsDisagreement) {
  write_file_atomic(path("ex1.json"), conic_set_to_json(example1_fixture()));
  const CliRun r = run({"verify-hull", "--set", path("ex1.json"), "--trials", "200", "--seed", "8"});
  EXPECT_EQ(r.code, 1) << r.out;
}

TEST_F(Cli, HelpTouchesNothing) {
  const CliRun top = run({"--help"});
  EXPECT_EQ(top.code, 0);
  EXPECT_NE(top.out.find("gen-kp"), std::string::npos);
  EXPECT_EQ(run({"gen-kp", "--help"}).code, 0);
  EXPECT_EQ(files(), 0u);
}

TEST_F(Cli, BadFlagsAreInputErrors) {
  const CliRun r = run({"gen-kp", "--type", "1", "--n", "4", "--out", path("x.json"), "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gen-kp", "--type", "7", "--n", "4", "--out", path("x.json")}).code, 2);
  EXPECT_EQ(run({"normalize", "--set", path("missing.json"), "--out", path("o.json")}).code, 2);
  EXPECT_EQ(files(), 0u);
}

TEST_F(Cli, BuildSolveAndExport) {
  ASSERT_EQ(run({"gen-kp", "--type", "2", "--n", "8", "--seed", "4", "--out", path("i.json")}).code, 0);
  ASSERT_EQ(run({"build", "--formulation", "soc", "--in", path("i.json"), "--out", path("m.json"),
                 "--lp-text", path("m.lp")})
                .code,
            0);
  EXPECT_NO_THROW(model_from_json(read_file(path("m.json"))));
  EXPECT_NE(read_file(path("m.lp")).find("Subject To"), std::string::npos);
  const CliRun a = run({"solve", "--in", path("i.json"), "--formulation", "ccp", "--out", path("a.json")});
  const CliRun b = run({"solve", "--in", path("i.json"), "--formulation", "soc", "--out", path("b.json")});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(read_file(path("a.json")).find("\"OPTIMAL\""), std::string::npos);
  EXPECT_EQ(run({"solve", "--in", path("i.json"), "--formulation", "ccp", "--method", "bnb",
                 "--out", path("c.json")})
                .code,
            2);
}

TEST_F(Cli, NormalizeEnvelopeAndGapCheck) {
  write_file_atomic(path("ex1.json"), conic_set_to_json(example1_fixture()));
  ASSERT_EQ(run({"normalize", "--set", path("ex1.json"), "--out", path("n.json")}).code, 0);
  const CliRun e = run({"envelope", "--set", path("n.json"), "--query", "0.5"});
  ASSERT_EQ(e.code, 0);
  EXPECT_NEAR(certificate_from_json(e.out).value, 0.5 * (1.0 + std::sqrt(2.0)), 1e-12);
  EXPECT_EQ(run({"envelope", "--set", path("n.json"), "--query", "1.5"}).code, 2);
  EXPECT_EQ(run({"envelope", "--set", path("n.json"), "--query", "a"}).code, 2);

  ConicSet two = example1_fixture();
  two.f = TableRhs{{1.0, 2.0}};
  write_file_atomic(path("two.json"), conic_set_to_json(two));
  const CliRun g = run({"gap-check", "--set", path("two.json"), "--grid", "30", "--report", path("g.csv")});
  EXPECT_EQ(g.code, 0) << g.out;
  const std::string csv = read_file(path("g.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "x1,f_hat,sqrt_q_hat,gap,bound");
}

TEST_F(Cli, ToleranceFlagAndEnvironment) {
  EXPECT_EQ(run({"--tol", "1e-6", "example", "--id", "1"}).code, 0);
  EXPECT_EQ(run({"--tol", "-1", "example", "--id", "1"}).code, 2);
  ::setenv("SOCVEXIFY_TOL", "junk", 1);
  EXPECT_EQ(run({"example", "--id", "1"}).code, 2);
  ::setenv("SOCVEXIFY_TOL", "1e-8", 1);
  EXPECT_EQ(run({"example", "--id", "1"}).code, 0);
  ::unsetenv("SOCVEXIFY_TOL");
  // The defaults are back after each run.
  EXPECT_EQ(tolerances().feasibility, 1e-7);
  EXPECT_EQ(tolerances().equality, 1e-6);
}

}  // namespace
}  // namespace socvexify
