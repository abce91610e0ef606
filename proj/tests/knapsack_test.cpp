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


#include "socvexify/knapsack.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "socvexify/linalg.hpp"

namespace socvexify {
namespace {

double correlation(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

TEST(Knapsack, TypeRulesHoldBeforeScaling) {
  for (int seed = 0; seed < 5; ++seed) {
    const KnapsackInstance t3 = generate_kp(20, 3, 2, seed);
    const KnapsackInstance t4 = generate_kp(20, 4, 2, seed);
    const KnapsackInstance t2 = generate_kp(20, 2, 2, seed);
    for (int j = 0; j < 20; ++j) {
      EXPECT_EQ(t3.scale.raw_profits[j], t3.scale.raw_weights[0][j] + 1000.0);
      EXPECT_EQ(t4.scale.raw_weights[0][j], t4.scale.raw_profits[j] + 1000.0);
      EXPECT_LE(std::abs(t2.scale.raw_profits[j] - t2.scale.raw_weights[0][j]), 1000.0);
      EXPECT_GE(t2.scale.raw_profits[j], 1.0);
      for (const auto* inst : {&t3, &t4, &t2}) {
        const double w = inst->scale.raw_weights[0][j];
        EXPECT_EQ(w, std::floor(w));
        EXPECT_GE(w, 1.0);
        EXPECT_LE(w, 11000.0);
      }
    }
  }
}

TEST(Knapsack, CapacityAndScaling) {
  for (int index = 1; index <= 5; ++index) {
    const KnapsackInstance inst = generate_kp(10, 1, index, 9);
    const std::vector<double>& w = inst.scale.raw_weights[0];
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    EXPECT_EQ(inst.scale.raw_capacities[0], sum * index / 6.0);
    if (index == 3) EXPECT_EQ(inst.scale.raw_capacities[0], sum / 2.0);
    EXPECT_DOUBLE_EQ(inst.resources[0].capacity, inst.scale.raw_capacities[0] / 1000.0 * 1.5);
    ASSERT_EQ(inst.n, 5);
    ASSERT_EQ(inst.m, 5);
    for (int j = 0; j < 10; ++j) EXPECT_DOUBLE_EQ(inst.resources[0].mu(j), w[j] / 1000.0);
    for (int j = 0; j < 5; ++j) {
      EXPECT_EQ(inst.px(j), inst.scale.raw_profits[j]);
      EXPECT_DOUBLE_EQ(inst.py(j), inst.scale.raw_profits[5 + j] / 5.0);
    }
    EXPECT_EQ(inst.alpha, 0.005);
  }
}

TEST(Knapsack, CovarianceIsPsd) {
  for (int type = 1; type <= 4; ++type) {
    const KnapsackInstance inst = generate_kp(30, type, 1, 4);
    EXPECT_TRUE(validate(inst).empty());
    const Matrix& S = inst.resources[0].sigma;
    EXPECT_TRUE(identical(S, Matrix(S.transpose())));
    EXPECT_NO_THROW(cholesky(S, 1e-10));
    // Eigenvalues are w_j^2 / 4.
    Eigen::SelfAdjointEigenSolver<Matrix> eig(S);
    Vector expect = inst.resources[0].mu.cwiseAbs2() / 4.0;
    std::sort(expect.data(), expect.data() + expect.size());
    EXPECT_LE((eig.eigenvalues() - expect).cwiseAbs().maxCoeff(), 1e-10 * expect.maxCoeff());
  }
}

TEST(Knapsack, Determinism) {
  EXPECT_EQ(generate_kp(10, 3, 3, 1), generate_kp(10, 3, 3, 1));
  EXPECT_FALSE(generate_kp(10, 3, 3, 1) == generate_kp(10, 3, 3, 2));
  EXPECT_EQ(generate_mkp(6, 3, 5), generate_mkp(6, 3, 5));
  EXPECT_FALSE(generate_mkp(6, 3, 5) == generate_mkp(6, 3, 6));
}

TEST(Knapsack, GeneratorErrors) {
  EXPECT_THROW(generate_kp(10, 5, 1, 0), InvalidType);
  EXPECT_THROW(generate_kp(10, 0, 1, 0), InvalidType);
  EXPECT_THROW(generate_kp(9, 1, 1, 0), InvalidInput);
  EXPECT_THROW(generate_kp(10, 1, 6, 0), InvalidInput);
  EXPECT_THROW(generate_mkp(1, 1, 0), InvalidInput);
  EXPECT_THROW(generate_mkp(4, 0, 0), InvalidInput);
}

TEST(Knapsack, CorrelationStatistics) {
  std::vector<double> corr1;
  for (int seed = 0; seed < 3; ++seed) {
    const KnapsackInstance t1 = generate_kp(200, 1, 1, seed);
    EXPECT_LT(std::abs(correlation(t1.scale.raw_weights[0], t1.scale.raw_profits)), 0.2);
    const KnapsackInstance t3 = generate_kp(200, 3, 1, seed);
    EXPECT_NEAR(correlation(t3.scale.raw_weights[0], t3.scale.raw_profits), 1.0, 1e-12);
  }
}

TEST(Knapsack, MultiKnapsackRules) {
  for (int n : {5, 6}) {
    const KnapsackInstance inst = generate_mkp(n, 4, 3);
    EXPECT_EQ(inst.m, 3);
    EXPECT_TRUE(inst.synthetic_base);
    EXPECT_EQ(inst.resources.size(), 4u);
    EXPECT_TRUE(validate(inst).empty());
    const std::vector<double>& p = inst.scale.raw_profits;
    const double pmax = *std::max_element(p.begin(), p.begin() + n);
    for (int j = n; j < n + inst.m; ++j) {
      EXPECT_GE(p[j], 1.0);
      EXPECT_LE(p[j], std::max(1.0, std::floor(pmax / 10.0)));
    }
    for (int r = 0; r < 4; ++r) {
      const std::vector<double>& w = inst.scale.raw_weights[r];
      const double wmin = *std::min_element(w.begin(), w.begin() + n);
      const double wmax = *std::max_element(w.begin(), w.begin() + n);
      for (int j = n; j < n + inst.m; ++j) {
        EXPECT_GE(w[j], wmin / 2.0);
        EXPECT_LE(w[j], wmax);
      }
      const double sum = std::accumulate(w.begin(), w.begin() + n, 0.0);
      EXPECT_EQ(inst.scale.raw_capacities[r], sum / 2.0);
      EXPECT_DOUBLE_EQ(inst.resources[r].capacity, sum / 20.0);
      EXPECT_DOUBLE_EQ(inst.resources[r].mu(0), w[0] / 100.0);
    }
  }
}

TEST(Knapsack, ToyInstance) {
  const KnapsackInstance toy = toy_instance();
  const BruteForceResult r = solve_bruteforce(build_ccp(toy), BinaryDomain::full_cube(1));
  ASSERT_TRUE(r.result.optimal());
  EXPECT_NEAR(r.result.value, 3.0, 1e-6);
  EXPECT_NEAR(r.result.primal(0), 1.0, 1e-12);
  EXPECT_NEAR(r.result.primal(1), 0.0, 1e-6);
  // alpha~ = 1 makes alpha~ Sigma_yy - mu_y^2 = 0, outside the SOC lifting.
  try {
    build_soc(toy);
    FAIL() << "expected SigmaTildeNotPD";
  } catch (const SigmaTildeNotPD& e) {
    EXPECT_EQ(e.resource(), 0);
  }
}

TEST(Knapsack, ZeroCapacityAndProfitScaling) {
  KnapsackInstance inst = generate_kp(4, 1, 2, 3);
  const BinaryDomain dom = BinaryDomain::full_cube(inst.n);
  const double base = solve_bruteforce(build_ccp(inst), dom).result.value;
  KnapsackInstance twice = inst;
  twice.px *= 2.0;
  twice.py *= 2.0;
  EXPECT_NEAR(solve_bruteforce(build_ccp(twice), dom).result.value, 2.0 * base, 1e-6 * base);
  inst.resources[0].capacity = 0.0;
  const BruteForceResult z = solve_bruteforce(build_ccp(inst), dom);
  ASSERT_TRUE(z.result.optimal());
  EXPECT_NEAR(z.result.value, 0.0, 1e-5);
  EXPECT_LE(z.result.primal.cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Knapsack, LargeAlphaRejected) {
  KnapsackInstance inst = generate_kp(4, 3, 1, 0);
  inst.alpha = 0.9;
  EXPECT_THROW(build_soc(inst), SigmaTildeNotPD);
  EXPECT_THROW(soc_envelope_relaxation_bound(inst), SigmaTildeNotPD);
}

TEST(Knapsack, SocProjectionMatchesCcp) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const KnapsackInstance& inst : tiny_instances(0)) {
    const ModelIR ccp = build_ccp(inst);
    const ModelIR soc = build_soc(inst);
    const DrccConstraint dr = resource_drcc(inst, 0);
    const QuadSocPieces pc = quad_to_soc(drcc_to_quad(dr).quad);
    const auto& q = std::get<SqrtQuadraticRhs>(pc.f);
    for (int s = 0; s < 50; ++s) {
      Vector x(inst.n);
      for (int i = 0; i < inst.n; ++i) x(i) = u(rng) < 0.5 ? 0.0 : 1.0;
      Vector y(inst.m);
      for (int i = 0; i < inst.m; ++i) y(i) = 0.3 * u(rng);
      const double slack = drcc_slack(dr, x, y);
      if (std::abs(slack) < 1e-6) continue;
      Vector zc(inst.n + inst.m);
      zc << x, y;
      const double eta = (pc.A * x + pc.B * y + pc.d).norm();
      const double tau = std::max(radicand(q, x), 0.0);
      Vector zs(inst.n + inst.m + 2);
      zs << x, y, eta, tau;
      const bool ccp_ok = max_violation(ccp, zc) <= 1e-7 * (1.0 + dr.c * dr.c);
      const bool soc_ok = max_violation(soc, zs) <= 1e-7 * (1.0 + dr.c * dr.c);
      EXPECT_EQ(ccp_ok, slack > 0.0);
      EXPECT_EQ(soc_ok, slack > 0.0);
    }
  }
}

TEST(Knapsack, TinyInstancesAgreeAndRelaxationsAreValid) {
  const std::vector<KnapsackInstance> tiny = tiny_instances(0);
  ASSERT_EQ(tiny.size(), 20u);
  for (const KnapsackInstance& inst : tiny) {
    EXPECT_LE(inst.n, 10);
    EXPECT_LE(inst.m, 3);
    const BinaryDomain dom = BinaryDomain::full_cube(inst.n);
    const BruteForceResult a = solve_bruteforce(build_ccp(inst), dom);
    const BruteForceResult b = solve_bruteforce(build_soc(inst), dom);
    ASSERT_TRUE(a.result.optimal());
    ASSERT_TRUE(b.result.optimal());
    const double opt = a.result.value;
    EXPECT_NEAR(b.result.value, opt, 1e-5 * std::max(1.0, std::abs(opt)));
    const SolveResult rc = ccp_relaxation_bound(inst);
    const SolveResult rs = soc_envelope_relaxation_bound(inst);
    ASSERT_TRUE(rc.optimal());
    ASSERT_TRUE(rs.optimal());
    EXPECT_GE(rc.value, opt - 1e-6 * opt);
    EXPECT_GE(rs.value, opt - 1e-6 * opt);
  }
}

TEST(Knapsack, DominanceWhenSigmaTildeIsPsd) {
  // With alpha~ Sigma - mu mu' >= 0 the radicand q is concave, so its envelope
  // lies below it and the envelope relaxation sits inside the CCP one.
  int checked = 0;
  for (int seed = 0; seed < 6; ++seed) {
    for (const KnapsackInstance& inst : tiny_instances(seed)) {
      const DrccQuad dq = drcc_to_quad(resource_drcc(inst, 0));
      const int N = inst.n + inst.m;
      Matrix S(N, N);
      S << dq.quad.Qxx, dq.quad.Qxy, dq.quad.Qxy.transpose(), dq.quad.Qyy;
      if (Eigen::SelfAdjointEigenSolver<Matrix>(S).eigenvalues().minCoeff() < 0.0) continue;
      const double ccp = ccp_relaxation_bound(inst).value;
      EXPECT_LE(soc_envelope_relaxation_bound(inst).value, ccp + 1e-6 * (1.0 + ccp));
      ++checked;
    }
  }
  EXPECT_GT(checked, 40);
}

TEST(Knapsack, MultiKnapsackModelsAgree) {
  const KnapsackInstance inst = generate_mkp(3, 2, 1);
  const BinaryDomain dom = BinaryDomain::full_cube(inst.n);
  const BruteForceResult a = solve_bruteforce(build_ccp(inst), dom);
  ASSERT_TRUE(a.result.optimal());
  EXPECT_EQ(build_ccp(inst).quadratic.size(), 2u);
  EXPECT_EQ(build_ccp(inst).linear.size(), 2u);
  try {
    const BruteForceResult b = solve_bruteforce(build_soc(inst), dom);
    ASSERT_TRUE(b.result.optimal());
    EXPECT_NEAR(b.result.value, a.result.value, 1e-5 * std::max(1.0, a.result.value));
  } catch (const SigmaTildeNotPD&) {
    GTEST_SKIP() << "instance outside the SOC lifting";
  }
}

}  // namespace
}  // namespace socvexify
