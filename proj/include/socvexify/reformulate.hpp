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


// Reformulations onto the conic form ||A x + B y + d|| <= f(x):
//   * normalize_assumption2 moves the part of [A d] outside col(B) into f,
//   * quad_to_soc rewrites a quadratic row with Qyy > 0,
//   * drcc_to_quad turns a Chebyshev chance constraint into a quadratic row
//     plus a linear row.

#ifndef SOCVEXIFY_REFORMULATE_HPP_
#define SOCVEXIFY_REFORMULATE_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "socvexify/core.hpp"

namespace socvexify {

struct NormalizeReport {
  std::vector<int> dropped;           // indices into the input domain
  std::vector<Vector> dropped_points;
  double residual_before = 0.0;       // max |entry| of [A_perp d_perp]
  double residual_after = 0.0;
};

struct NormalizeResult {
  ConicSet set;
  NormalizeReport report;
};

// Largest entry of the part of [A d] orthogonal to col(B).
double assumption2_residual(const ConicSet& set);

// L2: projects [A d] onto col(B), sets f'(x) = sqrt(f(x)^2 - |A_perp x + d_perp|^2)
// as a table and drops points where the radicand is below -kRadicandClamp.
// L1 / LINF: the input must already satisfy the column-space condition; it is
// returned with f as a table. Throws EmptyDomainAfterRestriction, or
// InvalidInput for a polyhedral norm that needs a projection.
NormalizeResult normalize_assumption2(const ConicSet& set);

// x'Qxx x + 2 x'Qxy y + y'Qyy y + ax'x + ay'y <= g(x).
struct QuadConstraint {
  Matrix Qxx;
  Matrix Qxy;
  Matrix Qyy;
  Vector ax;
  Vector ay;
  // A constant, or one value per point of the domain passed to quad_to_soc.
  std::variant<double, TableRhs> g = 0.0;

  int n() const { return static_cast<int>(Qxx.rows()); }
  int m() const { return static_cast<int>(Qyy.rows()); }
};

// x'Qxx x + 2 x'Qxy y + y'Qyy y + ax'x + ay'y (g not subtracted).
double quad_lhs(const QuadConstraint& q, const Vector& x, const Vector& y);

struct QuadSocPieces {
  Matrix A;
  Matrix B;
  Vector d;
  RhsFunction f;  // SqrtQuadratic for constant g, Table otherwise
};

// Qyy = B'B through Cholesky (B = L'), A = B'^{-1} Qxy', d = B'^{-1} ay / 2.
// Throws NotPositiveDefinite when Qyy is not positive definite. A table g
// needs `domain`, and a radicand below the clamp on it is an InvalidInput.
QuadSocPieces quad_to_soc(const QuadConstraint& q,
                          const std::optional<BinaryDomain>& domain = std::nullopt);

// f(x)^2 for the pieces at x (the radicand, not clamped).
double squared_rhs(const QuadSocPieces& pieces, const Vector& x,
                   const std::optional<BinaryDomain>& domain = std::nullopt);

// mu'z + sqrt((1 - alpha)/alpha) sqrt(z' Sigma z) <= c,  z = (x, y).
struct DrccConstraint {
  Vector mux;
  Vector muy;
  Matrix Sxx;
  Matrix Sxy;
  Matrix Syy;
  double c = 0.0;
  double alpha = 0.005;

  int n() const { return static_cast<int>(mux.size()); }
  int m() const { return static_cast<int>(muy.size()); }
};

// c minus the left side of the chance-constraint form (>= 0 iff satisfied).
double drcc_slack(const DrccConstraint& dr, const Vector& x, const Vector& y);

struct DrccQuad {
  QuadConstraint quad;   // z' S~ z + 2c mu'z <= c^2
  Vector linear_x;       // mu_x
  Vector linear_y;       // mu_y
  double linear_rhs = 0.0;
  double alpha_tilde = 0.0;
  bool sigma_yy_pd = false;
};

DrccQuad drcc_to_quad(const DrccConstraint& dr);

}  // namespace socvexify

#endif  // SOCVEXIFY_REFORMULATE_HPP_
