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

// Dense two-phase tableau simplex.
//
// The problem is first brought to  min c's x'  s.t.  A x' = b, b >= 0, x' >= 0
// by shifting / reflecting / splitting variables, turning finite upper bounds
// into rows and adding one slack per inequality. Every row starts with a unit
// basic column: its slack when possible, otherwise an artificial. Those unit
// columns stay in the tableau, so the final reduced costs under them are the
// negated duals.

#include <algorithm>
#include <cmath>
#include <limits>

#include "socvexify/solvers.hpp"

namespace socvexify {
namespace {

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Original variable j = offset + sign * x'[pos] - x'[neg] (neg optional).
struct VarMap {
  double offset = 0.0;
  double sign = 1.0;
  int pos = -1;
  int neg = -1;
};

struct StandardForm {
  std::vector<VarMap> vars;
  int num_struct = 0;
  Matrix A;                  // rows x num_struct, before slacks
  Vector b;
  std::vector<RowSense> sense;
  Vector c;                  // over structural columns
  double constant = 0.0;     // objective value at x' = 0 (original sense)
  double sense_sign = 1.0;   // +1 minimize, -1 maximize
  int user_rows = 0;
};

StandardForm to_standard_form(const LpProblem& lp) {
  StandardForm sf;
  const int n = lp.num_vars();
  sf.vars.resize(n);
  std::vector<std::pair<int, double>> upper_rows;  // (struct col, bound)
  int col = 0;
  for (int j = 0; j < n; ++j) {
    const double l = lp.lower(j);
    const double u = lp.upper(j);
    VarMap& vm = sf.vars[j];
    if (std::isfinite(l)) {
      vm.offset = l;
      vm.pos = col++;
      if (std::isfinite(u)) upper_rows.emplace_back(vm.pos, u - l);
    } else if (std::isfinite(u)) {
      vm.offset = u;
      vm.sign = -1.0;
      vm.pos = col++;
    } else {
      vm.pos = col++;
      vm.neg = col++;
    }
  }
  sf.num_struct = col;
  const int user_rows = static_cast<int>(lp.rows.size());
  sf.user_rows = user_rows;
  const int rows = user_rows + static_cast<int>(upper_rows.size());
  sf.A = Matrix::Zero(rows, col);
  sf.b.resize(rows);
  sf.sense.resize(rows);
  for (int i = 0; i < user_rows; ++i) {
    const LinearRow& row = lp.rows[i];
    double rhs = row.rhs;
    for (int j = 0; j < n; ++j) {
      const double a = row.coeffs(j);
      if (a == 0.0) continue;
      const VarMap& vm = sf.vars[j];
      rhs -= a * vm.offset;
      sf.A(i, vm.pos) += a * vm.sign;
      if (vm.neg >= 0) sf.A(i, vm.neg) -= a;
    }
    sf.b(i) = rhs;
    sf.sense[i] = row.sense;
  }
  for (size_t k = 0; k < upper_rows.size(); ++k) {
    const int i = user_rows + static_cast<int>(k);
    sf.A(i, upper_rows[k].first) = 1.0;
    sf.b(i) = upper_rows[k].second;
    sf.sense[i] = RowSense::kLessEqual;
  }
  sf.sense_sign = lp.sense == ObjectiveSense::kMinimize ? 1.0 : -1.0;
  sf.c = Vector::Zero(col);
  sf.constant = lp.objective_offset;
  for (int j = 0; j < n; ++j) {
    const double cj = lp.objective(j);
    const VarMap& vm = sf.vars[j];
    sf.constant += cj * vm.offset;
    sf.c(vm.pos) += sf.sense_sign * cj * vm.sign;
    if (vm.neg >= 0) sf.c(vm.neg) -= sf.sense_sign * cj;
  }
  return sf;
}

class Simplex {
 public:
  Simplex(const StandardForm& sf, const LpOptions& options)
      : sf_(sf), options_(options) {
    rows_ = static_cast<int>(sf.A.rows());
    num_struct_ = sf.num_struct;
    // Column layout: structural | slacks | artificials.
    slack_col_.assign(rows_, -1);
    int col = num_struct_;
    for (int i = 0; i < rows_; ++i) {
      if (sf.sense[i] != RowSense::kEqual) slack_col_[i] = col++;
    }
    first_art_ = col;
    flip_.assign(rows_, 1.0);
    unit_col_.assign(rows_, -1);
    std::vector<int> art_rows;
    for (int i = 0; i < rows_; ++i) {
      double slack_coef = 0.0;
      if (sf.sense[i] == RowSense::kLessEqual) slack_coef = 1.0;
      if (sf.sense[i] == RowSense::kGreaterEqual) slack_coef = -1.0;
      if (sf.b(i) < 0.0) {
        flip_[i] = -1.0;
        slack_coef = -slack_coef;
      }
      if (slack_coef > 0.0) {
        unit_col_[i] = slack_col_[i];
      } else {
        art_rows.push_back(i);
        unit_col_[i] = col++;
      }
    }
    cols_ = col;
    T_ = RowMajor::Zero(rows_ + 1, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      T_.row(i).head(num_struct_) = flip_[i] * sf.A.row(i);
      if (slack_col_[i] >= 0) {
        const double s = sf.sense[i] == RowSense::kLessEqual ? 1.0 : -1.0;
        T_(i, slack_col_[i]) = flip_[i] * s;
      }
      T_(i, unit_col_[i]) = 1.0;
      T_(i, cols_) = flip_[i] * sf.b(i);
    }
    basis_ = unit_col_;
    art_rows_ = std::move(art_rows);
    max_iterations_ = 10 * (rows_ + cols_);
  }

  SolveResult run() {
    SolveResult result;
    // Phase 1: minimize the sum of artificials.
    if (!art_rows_.empty()) {
      T_.row(rows_).setZero();
      for (int i : art_rows_) T_.row(rows_) -= T_.row(i);
      for (int i : art_rows_) T_(rows_, unit_col_[i]) = 0.0;
      const SolveStatus st = iterate(/*phase_one=*/true);
      if (st == SolveStatus::kNumericalLimit) return limit(result);
      const double infeas = -T_(rows_, cols_);
      const double scale = 1.0 + (sf_.b.size() ? sf_.b.cwiseAbs().maxCoeff() : 0.0);
      if (infeas > 1e-9 * scale) {
        result.status = SolveStatus::kInfeasible;
        result.primal_residual = infeas;
        result.iterations = iterations_;
        result.message = "phase 1 optimum is positive";
        return result;
      }
      drive_out_artificials();
    }
    // Phase 2.
    T_.row(rows_).setZero();
    T_.row(rows_).head(num_struct_) = sf_.c.transpose();
    for (int i = 0; i < rows_; ++i) {
      const double cb = cost(basis_[i]);
      if (cb != 0.0) T_.row(rows_) -= cb * T_.row(i);
    }
    const SolveStatus st = iterate(/*phase_one=*/false);
    result.iterations = iterations_;
    if (st == SolveStatus::kNumericalLimit) return limit(result);
    if (st == SolveStatus::kUnbounded) {
      result.status = SolveStatus::kUnbounded;
      result.message = "objective unbounded along an entering column";
      return result;
    }
    result.status = SolveStatus::kOptimal;
    fill_solution(result);
    return result;
  }

  const std::vector<double>& flips() const { return flip_; }

 private:
  double cost(int col) const { return col < num_struct_ ? sf_.c(col) : 0.0; }
  bool is_artificial(int col) const { return col >= first_art_; }

  SolveResult& limit(SolveResult& result) {
    result.status = SolveStatus::kNumericalLimit;
    result.iterations = iterations_;
    result.message = "simplex iteration cap reached";
    return result;
  }

  SolveStatus iterate(bool phase_one) {
    const double eps = options_.pivot_tol;
    bool bland = options_.bland_only;
    int degenerate_streak = 0;
    (void)phase_one;
    while (true) {
      // Pricing.
      int enter = -1;
      double best = -eps;
      for (int j = 0; j < first_art_; ++j) {
        const double dj = T_(rows_, j);
        if (dj < best) {
          enter = j;
          if (bland) break;
          best = dj;
        }
      }
      if (enter < 0) return SolveStatus::kOptimal;
      // Ratio test; ties go to the smallest basic column.
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < rows_; ++i) {
        const double a = T_(i, enter);
        if (a <= eps) continue;
        const double ratio = std::max(T_(i, cols_), 0.0) / a;
        if (leave < 0 || ratio < best_ratio - 1e-12 * (1.0 + best_ratio) ||
            (ratio <= best_ratio + 1e-12 * (1.0 + best_ratio) &&
             basis_[i] < basis_[leave])) {
          if (leave < 0 || ratio < best_ratio) best_ratio = ratio;
          leave = i;
        }
      }
      if (leave < 0) return SolveStatus::kUnbounded;
      if (++iterations_ > max_iterations_) return SolveStatus::kNumericalLimit;
      if (best_ratio <= 1e-12) {
        if (++degenerate_streak > 50) bland = true;
      } else {
        degenerate_streak = 0;
      }
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    const double a = T_(r, c);
    T_.row(r) /= a;
    Vector col = T_.col(c);
    col(r) = 0.0;
    T_.noalias() -= col * T_.row(r);
    T_(r, c) = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i != r) T_(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (int i = 0; i < rows_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      int best_col = -1;
      double best_abs = 1e-9;
      for (int j = 0; j < first_art_; ++j) {
        const double a = std::abs(T_(i, j));
        if (a > best_abs) {
          best_abs = a;
          best_col = j;
        }
      }
      // A row with no eligible column is redundant; its artificial stays at 0.
      if (best_col >= 0) pivot(i, best_col);
    }
    for (int i = 0; i < rows_; ++i) {
      if (T_(i, cols_) < 0.0) T_(i, cols_) = 0.0;
    }
  }

  void fill_solution(SolveResult& result) const {
    Vector xs = Vector::Zero(cols_);
    for (int i = 0; i < rows_; ++i) xs(basis_[i]) = std::max(T_(i, cols_), 0.0);
    const Vector x_struct = xs.head(num_struct_);
    const int n = static_cast<int>(sf_.vars.size());
    result.primal.resize(n);
    for (int j = 0; j < n; ++j) {
      const VarMap& vm = sf_.vars[j];
      double v = vm.offset + vm.sign * x_struct(vm.pos);
      if (vm.neg >= 0) v -= x_struct(vm.neg);
      result.primal(j) = v;
    }
    // Duals of the (flipped) standard rows: y_i = -d(unit column of row i).
    Vector y(rows_);
    for (int i = 0; i < rows_; ++i) y(i) = -T_(rows_, unit_col_[i]);
    Vector b_flipped(rows_);
    for (int i = 0; i < rows_; ++i) b_flipped(i) = flip_[i] * sf_.b(i);
    const double primal_std = sf_.c.dot(x_struct);
    const double dual_std = b_flipped.dot(y);
    result.value = sf_.constant + sf_.sense_sign * primal_std;
    result.dual_bound = sf_.constant + sf_.sense_sign * dual_std;
    result.duality_gap = std::abs(primal_std - dual_std);
    result.dual.resize(sf_.user_rows);
    for (int i = 0; i < sf_.user_rows; ++i) result.dual(i) = flip_[i] * y(i);
    double worst_reduced = 0.0;
    for (int j = 0; j < first_art_; ++j) {
      worst_reduced = std::max(worst_reduced, -T_(rows_, j));
    }
    result.kkt_residual = worst_reduced;
  }

  const StandardForm& sf_;
  LpOptions options_;
  int rows_ = 0;
  int cols_ = 0;
  int num_struct_ = 0;
  int first_art_ = 0;
  std::vector<int> slack_col_;
  std::vector<int> unit_col_;
  std::vector<double> flip_;
  std::vector<int> art_rows_;
  std::vector<int> basis_;
  RowMajor T_;
  int iterations_ = 0;
  int max_iterations_ = 0;
};

double lp_primal_residual(const LpProblem& lp, const Vector& x) {
  double worst = 0.0;
  for (int j = 0; j < lp.num_vars(); ++j) {
    worst = std::max({worst, lp.lower(j) - x(j), x(j) - lp.upper(j)});
  }
  for (const LinearRow& row : lp.rows) {
    const double lhs = row.coeffs.dot(x);
    switch (row.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

}  // namespace

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "OPTIMAL";
    case SolveStatus::kInfeasible:
      return "INFEASIBLE";
    case SolveStatus::kUnbounded:
      return "UNBOUNDED";
    case SolveStatus::kNumericalLimit:
      return "NUMERICAL_LIMIT";
  }
  return "NUMERICAL_LIMIT";
}

LpProblem::LpProblem(int num_vars)
    : objective(Vector::Zero(num_vars)),
      lower(Vector::Zero(num_vars)),
      upper(Vector::Constant(num_vars, kInf)) {}

void LpProblem::add_row(Vector coeffs, RowSense sense, double rhs) {
  rows.push_back({std::move(coeffs), sense, rhs});
}

SolveResult solve_lp(const LpProblem& problem, const LpOptions& options) {
  const int n = problem.num_vars();
  if (problem.lower.size() != n || problem.upper.size() != n) {
    throw InvalidInput("solve_lp: bounds must match the objective length");
  }
  for (const LinearRow& row : problem.rows) {
    if (row.coeffs.size() != n) throw InvalidInput("solve_lp: row length mismatch");
  }
  for (int j = 0; j < n; ++j) {
    if (problem.lower(j) > problem.upper(j)) {
      SolveResult r;
      r.status = SolveStatus::kInfeasible;
      r.message = "empty variable bounds";
      return r;
    }
  }
  const StandardForm sf = to_standard_form(problem);
  Simplex simplex(sf, options);
  SolveResult result = simplex.run();
  if (result.status == SolveStatus::kOptimal) {
    result.primal_residual = lp_primal_residual(problem, result.primal);
  }
  return result;
}

}  // namespace socvexify
