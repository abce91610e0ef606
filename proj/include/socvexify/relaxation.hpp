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


// The sqrt(q_hat) relaxation of f_hat and its worst-case gap.

#ifndef SOCVEXIFY_RELAXATION_HPP_
#define SOCVEXIFY_RELAXATION_HPP_

#include <random>
#include <vector>

#include "socvexify/core.hpp"

namespace socvexify {

// sqrt of the concave envelope of q at query.
double sqrt_envelope_value(const BinaryDomain& domain, const std::vector<double>& qvalues,
                           const Vector& query);

// (U - L)^2 / (4 (L + U)), 0 when L = U = 0. Throws InvalidRange unless
// 0 <= L <= U.
double gap_bound(double L, double U);

struct Prop1Row {
  Vector x;
  double f_hat = 0.0;
  double sqrt_q_hat = 0.0;
  double gap = 0.0;
};

struct Prop1Report {
  std::vector<Prop1Row> rows;
  double L = 0.0;
  double U = 0.0;
  double bound = 0.0;
  double max_gap = 0.0;
  int argmax = -1;
  double min_gap = 0.0;  // negative means sqrt(q_hat) < f_hat somewhere
  bool holds = true;
};

// Checks 0 <= sqrt(q_hat) - f_hat <= gap_bound(L, U) + tol on every query,
// with q = f^2 and L, U the extremes of f over the domain.
Prop1Report verify_prop1(const BinaryDomain& domain, const std::vector<double>& fvalues,
                         const std::vector<Vector>& grid, double tol);

// `count` Dirichlet(1, ..., 1) combinations of the domain points followed by
// every domain point.
std::vector<Vector> default_grid(const BinaryDomain& domain, int count, std::mt19937_64& rng);

struct WeightedSample {
  std::vector<double> values;
  std::vector<double> weights;
};

// sigma^2 <= (U - mu)(mu - L) + tol for every sample.
bool bhatia_davis_check(double L, double U, const std::vector<WeightedSample>& samples,
                        double tol);

// (U - mu)(mu - L) - sigma^2 for one sample.
double bhatia_davis_slack(double L, double U, const WeightedSample& sample);

}  // namespace socvexify

#endif  // SOCVEXIFY_RELAXATION_HPP_
