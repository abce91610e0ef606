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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "socvexify/solvers.hpp"

namespace socvexify {
namespace {

// Quadratic row split into continuous (c) and integer (i) blocks:
//   z'Qcc z + 2 x'Qic z + x'Qii x + lc'z + li'x <= rhs,  Qcc = L L'.
struct SplitQuadratic {
  Matrix L;    // nc x r
  Matrix Qic;  // ni x nc
  Matrix Qii;
  Vector lc;
  Vector li;
  double rhs = 0.0;
};

class Enumerator {
 public:
  Enumerator(const ModelIR& model, const BinaryDomain& domain)
      : model_(model), domain_(domain) {
    const int n = model.num_variables();
    local_.assign(n, -1);
    for (int j = 0; j < n; ++j) {
      if (model.variables[j].integer) {
        local_[j] = static_cast<int>(int_vars_.size());
        int_vars_.push_back(j);
      } else {
        local_[j] = static_cast<int>(cont_vars_.size());
        cont_vars_.push_back(j);
      }
    }
    if (static_cast<int>(int_vars_.size()) != domain.dim) {
      std::ostringstream msg;
      msg << "model has " << int_vars_.size() << " integer variables but the domain has dimension "
          << domain.dim;
      throw InvalidInput(msg.str());
    }
    for (const QuadraticConstraint& row : model.quadratic) split_quadratic(row);
  }

  BruteForceResult run() {
    BruteForceResult out;
    const bool maximize = model_.objective.sense == ObjectiveSense::kMaximize;
    const int nc = static_cast<int>(cont_vars_.size());
    Vector c_cont = Vector::Zero(nc);
    Vector c_int = Vector::Zero(domain_.dim);
    for (const Term& t : model_.objective.terms) {
      if (model_.variables[t.var].integer) {
        c_int(local_[t.var]) += t.coef;
      } else {
        c_cont(local_[t.var]) += t.coef;
      }
    }
    // Best continuous objective over the variable box.
    double cont_bound = 0.0;
    for (int j = 0; j < nc; ++j) {
      const ModelVariable& v = model_.variables[cont_vars_[j]];
      const double cj = c_cont(j);
      if (cj == 0.0) continue;
      const bool up = maximize ? cj > 0.0 : cj < 0.0;
      cont_bound += cj * (up ? v.upper : v.lower);
    }

    std::vector<int> order(domain_.size());
    for (int k = 0; k < domain_.size(); ++k) order[k] = k;
    if (auto zero = domain_.find(Vector::Zero(domain_.dim))) {
      std::rotate(order.begin(), order.begin() + *zero, order.begin() + *zero + 1);
    }

    bool have_incumbent = false;
    bool hit_limit = false;
    double best = 0.0;
    Vector best_assignment;
    int iterations = 0;
    for (int k : order) {
      const Vector x = domain_.point(k);
      const double fixed_obj = c_int.dot(x) + model_.objective.constant;
      if (have_incumbent && std::isfinite(cont_bound)) {
        const double bound = fixed_obj + cont_bound;
        if (maximize ? bound <= best : bound >= best) {
          ++out.pruned;
          continue;
        }
      }
      ++out.fixings;
      Vector assignment;
      SolveResult sub = solve_fixing(x, c_cont, maximize, assignment);
      iterations += sub.iterations;
      if (sub.status == SolveStatus::kInfeasible) {
        ++out.infeasible;
        continue;
      }
      if (sub.status == SolveStatus::kUnbounded) {
        out.result.status = SolveStatus::kUnbounded;
        out.result.message = "continuous part unbounded";
        out.result.iterations = iterations;
        return out;
      }
      if (sub.status == SolveStatus::kNumericalLimit) {
        hit_limit = true;
        continue;
      }
      const double value = objective_value(model_, assignment);
      if (!have_incumbent || (maximize ? value > best : value < best)) {
        have_incumbent = true;
        best = value;
        best_assignment = assignment;
      }
    }
    out.result.iterations = iterations;
    if (!have_incumbent) {
      out.result.status = hit_limit ? SolveStatus::kNumericalLimit : SolveStatus::kInfeasible;
      out.result.message = hit_limit ? "subproblem solver hit a limit" : "no feasible fixing";
      return out;
    }
    out.result.status = hit_limit ? SolveStatus::kNumericalLimit : SolveStatus::kOptimal;
    if (hit_limit) out.result.message = "some fixings hit the solver limit";
    out.result.value = best;
    out.result.primal = best_assignment;
    out.result.primal_residual = max_violation(model_, best_assignment);
    out.result.dual_bound = best;
    return out;
  }

 private:
  void split_quadratic(const QuadraticConstraint& row) {
    const int n = model_.num_variables();
    const int nc = static_cast<int>(cont_vars_.size());
    const int ni = static_cast<int>(int_vars_.size());
    const Matrix Q = quadratic_matrix(row, n);
    SplitQuadratic s;
    Matrix Qcc(nc, nc);
    s.Qic.resize(ni, nc);
    s.Qii.resize(ni, ni);
    for (int a = 0; a < nc; ++a) {
      for (int b = 0; b < nc; ++b) Qcc(a, b) = Q(cont_vars_[a], cont_vars_[b]);
    }
    for (int a = 0; a < ni; ++a) {
      for (int b = 0; b < nc; ++b) s.Qic(a, b) = Q(int_vars_[a], cont_vars_[b]);
      for (int b = 0; b < ni; ++b) s.Qii(a, b) = Q(int_vars_[a], int_vars_[b]);
    }
    s.lc = Vector::Zero(nc);
    s.li = Vector::Zero(ni);
    for (const Term& t : row.linear) {
      if (model_.variables[t.var].integer) {
        s.li(local_[t.var]) += t.coef;
      } else {
        s.lc(local_[t.var]) += t.coef;
      }
    }
    s.rhs = row.rhs;
    s.L = Matrix(nc, 0);
    if (nc > 0 && Qcc.cwiseAbs().maxCoeff() > 0.0) {
      Eigen::SelfAdjointEigenSolver<Matrix> eig(Qcc);
      const Vector& lam = eig.eigenvalues();
      const double scale = lam.cwiseAbs().maxCoeff();
      if (lam.minCoeff() < -1e-10 * scale) {
        throw NonConvexContinuousPart("quadratic row " + row.name +
                                      " is not convex in the continuous variables");
      }
      std::vector<int> keep;
      for (int i = 0; i < nc; ++i) {
        if (lam(i) > 1e-12 * scale) keep.push_back(i);
      }
      s.L.resize(nc, static_cast<Eigen::Index>(keep.size()));
      for (size_t i = 0; i < keep.size(); ++i) {
        s.L.col(static_cast<Eigen::Index>(i)) = eig.eigenvectors().col(keep[i]) * std::sqrt(lam(keep[i]));
      }
    }
    quads_.push_back(std::move(s));
  }

  // Affine expression restricted to the continuous block at the fixing x.
  void restrict(const std::vector<Term>& terms, double constant, const Vector& x,
                Vector& coeffs, double& offset) const {
    coeffs = Vector::Zero(static_cast<Eigen::Index>(cont_vars_.size()));
    offset = constant;
    for (const Term& t : terms) {
      if (model_.variables[t.var].integer) {
        offset += t.coef * x(local_[t.var]);
      } else {
        coeffs(local_[t.var]) += t.coef;
      }
    }
  }

  SolveResult solve_fixing(const Vector& x, const Vector& c_cont, bool maximize,
                           Vector& assignment) const {
    const int n = model_.num_variables();
    const int nc = static_cast<int>(cont_vars_.size());
    assignment = Vector::Zero(n);
    for (size_t i = 0; i < int_vars_.size(); ++i) {
      assignment(int_vars_[i]) = x(static_cast<Eigen::Index>(i));
    }
    SolveResult out;
    if (nc == 0) {
      out.status = max_violation(model_, assignment) <= tolerances().feasibility
                       ? SolveStatus::kOptimal
                       : SolveStatus::kInfeasible;
      return out;
    }
    SocpProblem sub(nc);
    sub.sense = maximize ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize;
    sub.objective = c_cont;
    for (int j = 0; j < nc; ++j) {
      sub.lower(j) = model_.variables[cont_vars_[j]].lower;
      sub.upper(j) = model_.variables[cont_vars_[j]].upper;
    }
    Vector coeffs;
    double offset = 0.0;
    for (const LinearConstraint& row : model_.linear) {
      restrict(row.terms, 0.0, x, coeffs, offset);
      sub.add_row(coeffs, row.sense, row.rhs - offset);
    }
    auto add_cone = [&](const std::vector<Vector>& rows, const Vector& g, const Vector& h,
                        double e) {
      ConeRow cone;
      cone.F.resize(static_cast<Eigen::Index>(rows.size()), nc);
      for (size_t i = 0; i < rows.size(); ++i) {
        cone.F.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
      }
      cone.g = g;
      cone.h = h;
      cone.e = e;
      sub.cones.push_back(std::move(cone));
    };
    for (const SocConstraint& row : model_.soc) {
      std::vector<Vector> rows;
      Vector g(static_cast<Eigen::Index>(row.entries.size()));
      for (size_t i = 0; i < row.entries.size(); ++i) {
        restrict(row.entries[i].terms, row.entries[i].constant, x, coeffs, offset);
        rows.push_back(coeffs);
        g(static_cast<Eigen::Index>(i)) = offset;
      }
      restrict(row.bound.terms, row.bound.constant, x, coeffs, offset);
      add_cone(rows, g, coeffs, offset);
    }
    for (const SplitQuadratic& q : quads_) {
      // ||L'z||^2 + a'z + k <= 0  as  ||(L'z, (1 + a'z + k)/2)|| <= (1 - a'z - k)/2.
      Vector a = 2.0 * q.Qic.transpose() * x + q.lc;
      double k = x.dot(q.Qii * x) + q.li.dot(x) - q.rhs;
      if (q.L.cols() == 0) {
        sub.add_row(a, RowSense::kLessEqual, -k);
        continue;
      }
      // Bring the row to unit scale; the rotated encoding degrades when |k| >> 1.
      const double rho = std::max({1.0, std::abs(k), a.cwiseAbs().maxCoeff(),
                                   q.L.cwiseAbs2().colwise().sum().maxCoeff()});
      a /= rho;
      k /= rho;
      const Matrix L = q.L / std::sqrt(rho);
      std::vector<Vector> rows;
      const Eigen::Index r = L.cols();
      Vector g = Vector::Zero(r + 1);
      for (Eigen::Index i = 0; i < r; ++i) rows.push_back(L.col(i));
      rows.push_back(0.5 * a);
      g(r) = 0.5 * (1.0 + k);
      add_cone(rows, g, -0.5 * a, 0.5 * (1.0 - k));
    }
    for (const RotatedConeConstraint& row : model_.rotated) {
      // eta^2 <= tau  as  ||(2 eta, tau - 1)|| <= tau + 1.
      Vector eta_c;
      double eta_o = 0.0;
      Vector tau_c;
      double tau_o = 0.0;
      restrict({{row.eta, 1.0}}, 0.0, x, eta_c, eta_o);
      restrict({{row.tau, 1.0}}, 0.0, x, tau_c, tau_o);
      Vector g(2);
      g << 2.0 * eta_o, tau_o - 1.0;
      add_cone({2.0 * eta_c, tau_c}, g, tau_c, tau_o + 1.0);
    }
    if (sub.cones.empty()) {
      const std::optional<LpProblem> lp = as_lp(sub);
      out = solve_lp(*lp);
    } else {
      out = solve_socp(sub);
    }
    if (out.optimal()) {
      for (int j = 0; j < nc; ++j) assignment(cont_vars_[j]) = out.primal(j);
    }
    return out;
  }

  const ModelIR& model_;
  const BinaryDomain& domain_;
  std::vector<int> local_;
  std::vector<int> int_vars_;
  std::vector<int> cont_vars_;
  std::vector<SplitQuadratic> quads_;
};

}  // namespace

BruteForceResult solve_bruteforce(const ModelIR& model, const BinaryDomain& domain) {
  if (const auto issues = validate(model); !issues.empty()) {
    throw InvalidInput("invalid model: " + issues.front());
  }
  Enumerator e(model, domain);
  return e.run();
}

}  // namespace socvexify
