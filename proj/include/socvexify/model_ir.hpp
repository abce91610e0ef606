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

// Solver-agnostic optimization model: variables, linear rows, second-order
// cone rows, quadratic rows, rotated-cone rows eta^2 <= tau and a linear
// objective. The knapsack builders emit it; the brute-force solver and the
// exporters consume it.

#ifndef SOCVEXIFY_MODEL_IR_HPP_
#define SOCVEXIFY_MODEL_IR_HPP_

#include <string>
#include <vector>

#include "socvexify/core.hpp"

namespace socvexify {

enum class ObjectiveSense { kMinimize, kMaximize };
enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct Term {
  int var = 0;
  double coef = 0.0;
  bool operator==(const Term&) const = default;
};

struct AffineExpr {
  std::vector<Term> terms;
  double constant = 0.0;
  bool operator==(const AffineExpr&) const = default;
};

double evaluate(const AffineExpr& expr, const Vector& values);

struct ModelVariable {
  std::string name;
  double lower = 0.0;
  double upper = kInf;
  bool integer = false;
  bool operator==(const ModelVariable&) const = default;
};

struct LinearConstraint {
  std::string name;
  std::vector<Term> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
  bool operator==(const LinearConstraint&) const = default;
};

// || (entries[0], ..., entries[k-1]) ||_2 <= bound
struct SocConstraint {
  std::string name;
  std::vector<AffineExpr> entries;
  AffineExpr bound;
  bool operator==(const SocConstraint&) const = default;
};

// coef * v[row] * v[col]; (i, j) and (j, i) terms are both allowed and add up.
struct QuadTerm {
  int row = 0;
  int col = 0;
  double coef = 0.0;
  bool operator==(const QuadTerm&) const = default;
};

// sum quad + sum linear <= rhs
struct QuadraticConstraint {
  std::string name;
  std::vector<QuadTerm> quad;
  std::vector<Term> linear;
  double rhs = 0.0;
  bool operator==(const QuadraticConstraint&) const = default;
};

// v[eta]^2 <= v[tau], with eta, tau >= 0 carried by the variable bounds.
struct RotatedConeConstraint {
  std::string name;
  int eta = 0;
  int tau = 0;
  bool operator==(const RotatedConeConstraint&) const = default;
};

struct ModelObjective {
  ObjectiveSense sense = ObjectiveSense::kMaximize;
  std::vector<Term> terms;
  double constant = 0.0;
  bool operator==(const ModelObjective&) const = default;
};

struct ModelIR {
  std::string name;
  std::vector<ModelVariable> variables;
  std::vector<LinearConstraint> linear;
  std::vector<SocConstraint> soc;
  std::vector<QuadraticConstraint> quadratic;
  std::vector<RotatedConeConstraint> rotated;
  ModelObjective objective;

  int add_variable(std::string var_name, double lower, double upper,
                   bool integer = false);
  int num_variables() const { return static_cast<int>(variables.size()); }
  bool operator==(const ModelIR&) const = default;
};

// Empty iff every constraint references declared variables and bounds are
// ordered.
std::vector<std::string> validate(const ModelIR& model);

// Symmetric matrix M with v' M v equal to the quadratic part of the row.
Matrix quadratic_matrix(const QuadraticConstraint& row, int num_vars);

// Largest violation of any row at the given point (0 when feasible).
double max_violation(const ModelIR& model, const Vector& values);

double objective_value(const ModelIR& model, const Vector& values);

}  // namespace socvexify

#endif  // SOCVEXIFY_MODEL_IR_HPP_
