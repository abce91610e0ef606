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

// Self-contained dense solvers:
//   * solve_lp: two-phase tableau simplex, Dantzig pricing with a switch to
//     Bland's rule once pivots stall, duals read off the final tableau.
//   * solve_socp: primal log-barrier path following with damped Newton steps
//     in the null space of the equality rows, plus a phase-1 that adds one
//     slack to every inequality and cone right-hand side.
//   * solve_bruteforce: enumerates the binary part of a ModelIR and solves the
//     convex continuous remainder of each fixing with solve_socp.

#ifndef SOCVEXIFY_SOLVERS_HPP_
#define SOCVEXIFY_SOLVERS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "socvexify/core.hpp"
#include "socvexify/model_ir.hpp"

namespace socvexify {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kNumericalLimit };

std::string_view status_name(SolveStatus status);

struct LinearRow {
  Vector coeffs;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

struct LpProblem {
  ObjectiveSense sense = ObjectiveSense::kMaximize;
  Vector objective;
  double objective_offset = 0.0;
  std::vector<LinearRow> rows;
  Vector lower;  // -kInf allowed
  Vector upper;  // +kInf allowed

  explicit LpProblem(int num_vars = 0);
  int num_vars() const { return static_cast<int>(objective.size()); }
  void add_row(Vector coeffs, RowSense sense, double rhs);
};

struct SolveResult {
  SolveStatus status = SolveStatus::kNumericalLimit;
  double value = 0.0;
  Vector primal;
  // LP only: one multiplier per row of the problem, in the sign convention of
  // the minimization form (rows scaled so that dual_bound = offset + b'y).
  Vector dual;
  double dual_bound = 0.0;
  double primal_residual = 0.0;
  double duality_gap = 0.0;
  double kkt_residual = 0.0;
  int iterations = 0;
  std::string message;

  bool optimal() const { return status == SolveStatus::kOptimal; }
};

struct LpOptions {
  // Forces Bland's rule from the first pivot.
  bool bland_only = false;
  double pivot_tol = 1e-9;
};

SolveResult solve_lp(const LpProblem& problem, const LpOptions& options = {});

// || F v + g || <= h' v + e, with the norm chosen per row.
struct ConeRow {
  Matrix F;
  Vector g;
  Vector h;
  double e = 0.0;
  NormKind norm = NormKind::kL2;
};

struct SocpProblem {
  ObjectiveSense sense = ObjectiveSense::kMinimize;
  Vector objective;
  std::vector<LinearRow> rows;
  Vector lower;
  Vector upper;
  std::vector<ConeRow> cones;
  // A strictly feasible point. When absent or not strictly feasible, phase-1
  // searches for one.
  std::optional<Vector> start;

  explicit SocpProblem(int num_vars = 0);
  int num_vars() const { return static_cast<int>(objective.size()); }
  void add_row(Vector coeffs, RowSense sense, double rhs);
};

struct SocpOptions {
  double mu_factor = 0.2;
  double mu_stop = 1e-9;
  int max_newton_steps = 600;
};

SolveResult solve_socp(const SocpProblem& problem, const SocpOptions& options = {});

// Rewrites every L1 / LINF cone as linear rows (L1 introduces one auxiliary
// variable per cone entry, appended after the original variables). L2 cones
// are kept. A start point, when present, is extended to the new variables.
SocpProblem linearize_polyhedral_cones(const SocpProblem& problem);

// The LP form of a problem without L2 cones; nullopt when an L2 cone remains.
std::optional<LpProblem> as_lp(const SocpProblem& problem);

struct BruteForceResult {
  SolveResult result;   // primal holds the full incumbent assignment
  int fixings = 0;      // domain points visited
  int infeasible = 0;   // fixings whose continuous part was infeasible
  int pruned = 0;       // fixings skipped by the objective bound
};

// Maximizes (or minimizes) the model by enumerating `domain` over the integer
// variables, taken in declaration order. Throws NonConvexContinuousPart when a
// quadratic row is not convex in the continuous variables.
BruteForceResult solve_bruteforce(const ModelIR& model, const BinaryDomain& domain);

}  // namespace socvexify

#endif  // SOCVEXIFY_SOLVERS_HPP_
