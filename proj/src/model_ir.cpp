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

#include "socvexify/model_ir.hpp"

#include <algorithm>
#include <cmath>

namespace socvexify {

double evaluate(const AffineExpr& expr, const Vector& values) {
  double out = expr.constant;
  for (const Term& t : expr.terms) out += t.coef * values(t.var);
  return out;
}

int ModelIR::add_variable(std::string var_name, double lower, double upper,
                          bool integer) {
  variables.push_back({std::move(var_name), lower, upper, integer});
  return num_variables() - 1;
}

std::vector<std::string> validate(const ModelIR& model) {
  std::vector<std::string> issues;
  const int n = model.num_variables();
  auto bad = [n](int v) { return v < 0 || v >= n; };
  auto check_terms = [&](const std::vector<Term>& terms,
                         const std::string& where) {
    for (const Term& t : terms) {
      if (bad(t.var)) {
        issues.push_back(where + " references undeclared variable " +
                         std::to_string(t.var));
        return;
      }
    }
  };
  for (const ModelVariable& v : model.variables) {
    if (v.lower > v.upper) issues.push_back("variable " + v.name + " has lower > upper");
  }
  for (const LinearConstraint& row : model.linear) check_terms(row.terms, row.name);
  for (const SocConstraint& row : model.soc) {
    for (const AffineExpr& e : row.entries) check_terms(e.terms, row.name);
    check_terms(row.bound.terms, row.name);
  }
  for (const QuadraticConstraint& row : model.quadratic) {
    check_terms(row.linear, row.name);
    for (const QuadTerm& q : row.quad) {
      if (bad(q.row) || bad(q.col)) {
        issues.push_back(row.name + " references an undeclared variable");
        break;
      }
    }
  }
  for (const RotatedConeConstraint& row : model.rotated) {
    if (bad(row.eta) || bad(row.tau)) {
      issues.push_back(row.name + " references an undeclared variable");
    }
  }
  check_terms(model.objective.terms, "objective");
  return issues;
}

Matrix quadratic_matrix(const QuadraticConstraint& row, int num_vars) {
  Matrix M = Matrix::Zero(num_vars, num_vars);
  for (const QuadTerm& q : row.quad) {
    if (q.row == q.col) {
      M(q.row, q.col) += q.coef;
    } else {
      M(q.row, q.col) += 0.5 * q.coef;
      M(q.col, q.row) += 0.5 * q.coef;
    }
  }
  return M;
}

double max_violation(const ModelIR& model, const Vector& values) {
  double worst = 0.0;
  auto linear_value = [&](const std::vector<Term>& terms) {
    double s = 0.0;
    for (const Term& t : terms) s += t.coef * values(t.var);
    return s;
  };
  for (int j = 0; j < model.num_variables(); ++j) {
    const ModelVariable& v = model.variables[j];
    worst = std::max({worst, v.lower - values(j), values(j) - v.upper});
    if (v.integer) worst = std::max(worst, std::abs(values(j) - std::round(values(j))));
  }
  for (const LinearConstraint& row : model.linear) {
    const double lhs = linear_value(row.terms);
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
  for (const SocConstraint& row : model.soc) {
    double sq = 0.0;
    for (const AffineExpr& e : row.entries) {
      const double v = evaluate(e, values);
      sq += v * v;
    }
    worst = std::max(worst, std::sqrt(sq) - evaluate(row.bound, values));
  }
  for (const QuadraticConstraint& row : model.quadratic) {
    double lhs = linear_value(row.linear);
    for (const QuadTerm& q : row.quad) lhs += q.coef * values(q.row) * values(q.col);
    worst = std::max(worst, lhs - row.rhs);
  }
  for (const RotatedConeConstraint& row : model.rotated) {
    worst = std::max(worst, values(row.eta) * values(row.eta) - values(row.tau));
  }
  return worst;
}

double objective_value(const ModelIR& model, const Vector& values) {
  double out = model.objective.constant;
  for (const Term& t : model.objective.terms) out += t.coef * values(t.var);
  return out;
}

}  // namespace socvexify
