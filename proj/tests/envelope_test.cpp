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


#include "socvexify/envelope.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace socvexify {
namespace {

// Carathéodory enumeration: every affinely independent subset of at most
// dim + 1 points that contains q in its hull, best or worst interpolated value.
double enumerate_envelope(const BinaryDomain& dom, const std::vector<double>& f,
                          const Vector& q, bool concave) {
  const int K = dom.size();
  const int n = dom.dim;
  double best = concave ? -kInf : kInf;
  for (unsigned mask = 1; mask < (1u << K); ++mask) {
    std::vector<int> idx;
    for (int k = 0; k < K; ++k) {
      if (mask & (1u << k)) idx.push_back(k);
    }
    if (static_cast<int>(idx.size()) > n + 1) continue;
    const int s = static_cast<int>(idx.size());
    Matrix M(n + 1, s);
    for (int j = 0; j < s; ++j) {
      M.col(j).head(n) = dom.point(idx[j]);
      M(n, j) = 1.0;
    }
    Vector rhs(n + 1);
    rhs << q, 1.0;
    Eigen::ColPivHouseholderQR<Matrix> qr(M);
    if (qr.rank() < s) continue;
    const Vector lam = qr.solve(rhs);
    if ((M * lam - rhs).norm() > 1e-9 || lam.minCoeff() < -1e-12) continue;
    double v = 0.0;
    for (int j = 0; j < s; ++j) v += lam(j) * f[idx[j]];
    best = concave ? std::max(best, v) : std::min(best, v);
  }
  return best;
}

Vector vec1(double x) { return Vector::Constant(1, x); }

TEST(Envelope, TwoPointIsLinearInterpolation) {
  const BinaryDomain dom = BinaryDomain::full_cube(1);
  const std::vector<double> f = {1.0, 2.0};
  for (double x : {0.0, 0.3, 0.5, 1.0}) {
    const EnvelopeCertificate c = concave_envelope(dom, f, vec1(x));
    EXPECT_NEAR(c.value, 1.0 + x, 1e-12);
    EXPECT_LE(certificate_residual(c, f), 1e-12);
    EXPECT_NEAR(convex_envelope_value(dom, f, vec1(x)), 1.0 + x, 1e-12);
  }
}

TEST(Envelope, VertexQueryReturnsTheValue) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2, 2);
  const BinaryDomain dom = BinaryDomain::full_cube(3);
  std::vector<double> f(dom.size());
  for (double& v : f) v = u(rng);
  for (int k = 0; k < dom.size(); ++k) {
    const EnvelopeCertificate c = concave_envelope(dom, f, dom.point(k));
    EXPECT_NEAR(c.value, f[k], 1e-9);
    ASSERT_EQ(c.support.size(), 1u);
    EXPECT_EQ(c.support[0].index, k);
  }
}

TEST(Envelope, MatchesEnumerationOracle) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-3, 3);
  std::exponential_distribution<double> expo(1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    BinaryDomain dom = BinaryDomain::full_cube(n);
    if (trial % 2 == 1 && dom.size() > 3) {
      std::vector<int> keep;
      for (int k = 0; k < dom.size(); ++k) {
        if (k != 1) keep.push_back(k);
      }
      dom = dom.subset(keep);
    }
    std::vector<double> f(dom.size());
    for (double& v : f) v = u(rng);
    Vector w(dom.size());
    for (int k = 0; k < dom.size(); ++k) w(k) = expo(rng);
    const Vector q = dom.points * (w / w.sum());
    const EnvelopeCertificate c = concave_envelope(dom, f, q);
    EXPECT_NEAR(c.value, enumerate_envelope(dom, f, q, true), 1e-8);
    EXPECT_NEAR(convex_envelope_value(dom, f, q), enumerate_envelope(dom, f, q, false), 1e-8);
    EXPECT_LE(static_cast<int>(c.support.size()), n + 1);
    EXPECT_LE(certificate_residual(c, f), 1e-9);
    for (size_t j = 1; j < c.support.size(); ++j) {
      EXPECT_LT(c.support[j - 1].index, c.support[j].index);
    }
  }
}

TEST(Envelope, ConcaveAndMajorizing) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0, 1);
  const BinaryDomain dom = BinaryDomain::full_cube(2);
  std::vector<double> f = {0.3, 1.7, -0.4, 2.2};
  for (int t = 0; t < 50; ++t) {
    const Vector a = Vector::NullaryExpr(2, [&](Eigen::Index) { return u(rng); });
    const Vector b = Vector::NullaryExpr(2, [&](Eigen::Index) { return u(rng); });
    const double th = u(rng);
    const double mid = concave_envelope(dom, f, th * a + (1 - th) * b).value;
    const double chord =
        th * concave_envelope(dom, f, a).value + (1 - th) * concave_envelope(dom, f, b).value;
    EXPECT_GE(mid, chord - 1e-9);
    EXPECT_GE(concave_envelope(dom, f, a).value, convex_envelope_value(dom, f, a) - 1e-9);
  }
}

TEST(Envelope, OutsideHullThrows) {
  const BinaryDomain dom = BinaryDomain::full_cube(2).subset({0, 1, 2});
  Vector q(2);
  q << 0.8, 0.8;
  EXPECT_THROW(concave_envelope(dom, {1, 2, 3}, q), QueryOutsideHull);
  EXPECT_THROW(convex_envelope_value(dom, {1, 2, 3}, q), QueryOutsideHull);
}

TEST(Envelope, GapToFunction) {
  const BinaryDomain dom = BinaryDomain::full_cube(1);
  // Constant values: both envelopes coincide.
  const std::vector<Vector> samples = {vec1(0.0), vec1(0.5), vec1(1.0)};
  EXPECT_NEAR(envelope_gap_to_function(dom, {std::sqrt(2.0), std::sqrt(2.0)}, samples).gap, 0.0,
              1e-12);
  // A square: concave and convex envelopes differ in the middle.
  const BinaryDomain sq = BinaryDomain::full_cube(2);
  Vector c(2);
  c << 0.5, 0.5;
  const EnvelopeGap g = envelope_gap_to_function(sq, {0, 1, 1, 0}, {sq.point(0), c});
  EXPECT_NEAR(g.gap, 1.0, 1e-9);
  EXPECT_EQ(g.argmax, 1);
}

}  // namespace
}  // namespace socvexify
