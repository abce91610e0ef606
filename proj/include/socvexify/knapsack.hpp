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


// Mixed-binary knapsack instances with distributionally robust capacity
// rows, and the two model formulations built from them:
//   * CCP keeps each chance constraint as a quadratic row plus a linear row,
//   * SOC lifts each to ||A x + B y + d|| <= eta, eta^2 <= tau <= q(x).
// Continuous relaxations of both are provided to compare bound strength.

#ifndef SOCVEXIFY_KNAPSACK_HPP_
#define SOCVEXIFY_KNAPSACK_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "socvexify/core.hpp"
#include "socvexify/model_ir.hpp"
#include "socvexify/reformulate.hpp"
#include "socvexify/solvers.hpp"

namespace socvexify {

// One capacity row: mu'z + sqrt((1-alpha)/alpha) sqrt(z' sigma z) <= capacity
// over z = (x, y).
struct KnapsackResource {
  Vector mu;
  Matrix sigma;
  double capacity = 0.0;
  bool operator==(const KnapsackResource& other) const;
};

// What the generator did to the integer data, so the pre-scaling rules can be
// checked after the fact.
struct KnapsackScale {
  double weight_divisor = 1.0;
  double capacity_divisor = 1.0;
  double continuous_profit_divisor = 1.0;
  double capacity_multiplier = 1.0;
  std::vector<double> raw_profits;               // all items, discrete first
  std::vector<std::vector<double>> raw_weights;  // per resource
  std::vector<double> raw_capacities;            // per resource
  bool operator==(const KnapsackScale&) const = default;
};

struct KnapsackInstance {
  int n = 0;  // discrete items
  int m = 0;  // continuous items
  Vector px;
  Vector py;
  std::vector<KnapsackResource> resources;
  double alpha = 0.005;
  int type = 0;  // 1..4 for single-knapsack instances, 0 otherwise
  std::uint64_t seed = 0;
  int index = 0;
  KnapsackScale scale;
  bool synthetic_base = false;
  bool operator==(const KnapsackInstance& other) const;
};

// Empty iff the instance is well formed (dimensions, PSD covariances within
// 1e-8, nonnegative capacities, nonnegative profits, at least one resource).
std::vector<std::string> validate(const KnapsackInstance& inst);

// Single knapsack with n_total items, the last half continuous. Types:
// 1 uncorrelated, 2 weakly, 3 strongly, 4 inverse strongly correlated.
// Throws InvalidType, or InvalidInput for an odd n_total or index outside 1..5.
KnapsackInstance generate_kp(int n_total, int type, int index, std::uint64_t seed);

// Multi-knapsack on a synthetic base of n discrete items plus ceil(n/2)
// continuous items.
KnapsackInstance generate_mkp(int n, int num_resources, std::uint64_t seed);

// The chance constraint of resource j over z = (x, y).
DrccConstraint resource_drcc(const KnapsackInstance& inst, int j);

// Variables x1..xn (binary), y1..ym in [0, 1]; per resource one quadratic and
// one linear row.
ModelIR build_ccp(const KnapsackInstance& inst);

// Adds eta_j, tau_j >= 0 per resource after x and y. Throws SigmaTildeNotPD.
ModelIR build_soc(const KnapsackInstance& inst);

// n = 1, m = 1, mu = (1, 1), Sigma = I, alpha = 1/2, c = 2, profits (3, 1).
KnapsackInstance toy_instance();

// Continuous relaxation of the convex chance-constraint form with x in [0,1]^n.
SolveResult ccp_relaxation_bound(const KnapsackInstance& inst);

// Continuous relaxation of SOC with tau <= q(x) replaced by the concave
// envelope of q over {0,1}^n (weights enumerated; n <= 12). Throws
// SigmaTildeNotPD, or InvalidInput when n > 12.
SolveResult soc_envelope_relaxation_bound(const KnapsackInstance& inst);

// Twenty small instances: types 1..4, indices 1..5, 2 to 6 items each. A draw
// whose Sigma~_yy is not positive definite is replaced by the next seed.
std::vector<KnapsackInstance> tiny_instances(std::uint64_t seed = 0);

}  // namespace socvexify

#endif  // SOCVEXIFY_KNAPSACK_HPP_
