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


// Membership oracles for Z, for the envelope set
//   W = { (x, y) : x in conv(X), ||A x + B y + d|| <= f_hat(x) },
// and for conv(Z) through the disjunctive perspective formulation, plus the
// sampling driver that compares the last two.

#ifndef SOCVEXIFY_HULL_VERIFY_HPP_
#define SOCVEXIFY_HULL_VERIFY_HPP_

#include <random>
#include <string>
#include <vector>

#include "socvexify/core.hpp"

namespace socvexify {

// margin = f(x) - ||A x + B y + d||, reduced to the y_box slack when smaller.
// Throws PointNotInDomain.
MembershipVerdict membership_Z(const ConicSet& set, const Vector& x, const Vector& y);

struct WDetail {
  MembershipVerdict verdict;
  EnvelopeCertificate certificate;
};

// margin = f_hat(x) - ||A x + B y + d|| (and the y_box slack, if any). Only
// meaningful on a set satisfying the column-space condition. Throws
// QueryOutsideHull.
WDetail membership_W_detail(const ConicSet& set, const Vector& x, const Vector& y);
MembershipVerdict membership_W(const ConicSet& set, const Vector& x, const Vector& y);

enum class HullBackend { kAuto, kLp, kBarrier };

struct HullOptions {
  // kAuto: LP for L1 / LINF, barrier for L2. kLp requires a polyhedral norm.
  HullBackend backend = HullBackend::kAuto;
};

struct HullDetail {
  MembershipVerdict verdict;
  double phase_one = 0.0;        // min total slack t*; inside iff <= equality tol
  double margin_problem = 0.0;   // max sum l_k f_k - sum |v_k| (inside points)
  int active_slices = 0;         // points that may carry weight at x
};

// conv(Z) membership: find weights l on the domain and z_k with
//   ||l_k (A x^k + d) + B_hat z_k|| <= l_k f(x^k),  sum l_k x^k = x,  sum z_k = C y,
// where B = B_hat C compresses B to independent columns. With a y_box, B must
// have full column rank and each z_k also satisfies l_k lo <= z_k <= l_k hi.
// Throws QueryOutsideHull and NumericalLimit.
HullDetail membership_conv_perspective_detail(const ConicSet& set, const Vector& x,
                                              const Vector& y, const HullOptions& options = {});
MembershipVerdict membership_conv_perspective(const ConicSet& set, const Vector& x,
                                              const Vector& y, const HullOptions& options = {});

struct HullPoint {
  int id = 0;
  Vector x;
  Vector y;
  Membership w_status = Membership::kBoundary;
  Membership hull_status = Membership::kBoundary;
  double w_margin = 0.0;
  double hull_margin = 0.0;
  bool skipped = false;
  std::string error;
};

struct HullReport {
  int trials = 0;
  int agreements = 0;
  int disagreements = 0;
  int skipped = 0;
  int errors = 0;
  int certificate_violations = 0;  // residual > 1e-6 or more than n + 1 points
  int envelope_queries = 0;
  double max_certificate_residual = 0.0;
  int max_support = 0;
  double max_margin_difference = 0.0;  // over points both oracles call INSIDE
  double y_max = 0.0;
  std::vector<HullPoint> points;
};

// Samples `trials` points (x from Dirichlet weights on the domain; y uniform
// in [-Ymax, Ymax]^m for even ids, and for odd ids placed so that the cone
// residual at x has norm uniform in [0, 2 max f]) and classifies each with both oracles; points within
// 10 * feasibility tol of either boundary are skipped. Solver failures are
// recorded per point.
HullReport verify_hull_equivalence(const ConicSet& set, int trials, std::mt19937_64& rng,
                                   const HullOptions& options = {});

// Sampling half-width (max f + |d| + |A|_2 sqrt(n)) / sigma_min(B_hat).
double sampling_half_width(const ConicSet& set);

// Random set on the full cube {0,1}^n with table f satisfying the column-space
// condition. L2 sets are drawn generically and passed through
// normalize_assumption2 (f is drawn so that no point is dropped); L1 / LINF
// sets are drawn with A = B C and d = B e.
ConicSet random_normalized_set(int n, int m, int p, NormKind norm, std::mt19937_64& rng);

struct CharacterizationCheck {
  bool applies = true;
  std::vector<std::string> reasons;
};

// Whether f_hat describes conv(Z): no y_box, [A d] in col(B), and every domain
// point has a nonempty slice.
CharacterizationCheck characterization_applies(const ConicSet& set);

// X = {0,1}, A = (1,0)', B = (0,1)', d = 0, f = sqrt(2).
ConicSet example1_fixture();

// X = {0,1}, A = (3,3)', B = I, d = (1,-1), f = sqrt(2), y >= 0.
ConicSet example2_fixture();

// point_id, x..., y..., W_status, hull_status, W_margin, hull_margin
std::string hull_report_csv(const HullReport& report);

}  // namespace socvexify

#endif  // SOCVEXIFY_HULL_VERIFY_HPP_
