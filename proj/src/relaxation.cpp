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


#include "socvexify/relaxation.hpp"

#include <algorithm>
#include <cmath>

#include "socvexify/envelope.hpp"

namespace socvexify {

double sqrt_envelope_value(const BinaryDomain& domain, const std::vector<double>& qvalues,
                           const Vector& query) {
  for (double q : qvalues) {
    if (q < 0.0) throw InvalidInput("sqrt_envelope_value: q must be nonnegative");
  }
  return std::sqrt(std::max(0.0, concave_envelope(domain, qvalues, query).value));
}

double gap_bound(double L, double U) {
  if (!(L >= 0.0) || !(U >= L)) throw InvalidRange("gap_bound needs 0 <= L <= U");
  if (U == 0.0) return 0.0;
  return (U - L) * (U - L) / (4.0 * (L + U));
}

Prop1Report verify_prop1(const BinaryDomain& domain, const std::vector<double>& fvalues,
                         const std::vector<Vector>& grid, double tol) {
  if (fvalues.empty()) throw InvalidInput("verify_prop1: no values");
  std::vector<double> q;
  for (double f : fvalues) {
    if (f < 0.0) throw InvalidInput("verify_prop1: f must be nonnegative");
    q.push_back(f * f);
  }
  Prop1Report out;
  out.L = *std::min_element(fvalues.begin(), fvalues.end());
  out.U = *std::max_element(fvalues.begin(), fvalues.end());
  out.bound = gap_bound(out.L, out.U);
  for (size_t i = 0; i < grid.size(); ++i) {
    Prop1Row row;
    row.x = grid[i];
    row.f_hat = concave_envelope(domain, fvalues, grid[i]).value;
    row.sqrt_q_hat = sqrt_envelope_value(domain, q, grid[i]);
    row.gap = row.sqrt_q_hat - row.f_hat;
    if (out.argmax < 0 || row.gap > out.max_gap) {
      out.max_gap = row.gap;
      out.argmax = static_cast<int>(i);
    }
    out.min_gap = i == 0 ? row.gap : std::min(out.min_gap, row.gap);
    if (row.gap < -tol || row.gap > out.bound + tol) out.holds = false;
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::vector<Vector> default_grid(const BinaryDomain& domain, int count, std::mt19937_64& rng) {
  std::vector<Vector> grid;
  std::exponential_distribution<double> expo(1.0);
  const int K = domain.size();
  for (int s = 0; s < count; ++s) {
    Vector w(K);
    for (int k = 0; k < K; ++k) w(k) = expo(rng);
    w /= w.sum();
    grid.push_back(domain.points * w);
  }
  for (int k = 0; k < K; ++k) grid.push_back(domain.point(k));
  return grid;
}

double bhatia_davis_slack(double L, double U, const WeightedSample& sample) {
  double mu = 0.0;
  for (size_t i = 0; i < sample.values.size(); ++i) mu += sample.weights[i] * sample.values[i];
  double var = 0.0;
  for (size_t i = 0; i < sample.values.size(); ++i) {
    var += sample.weights[i] * (sample.values[i] - mu) * (sample.values[i] - mu);
  }
  return (U - mu) * (mu - L) - var;
}

bool bhatia_davis_check(double L, double U, const std::vector<WeightedSample>& samples,
                        double tol) {
  for (const WeightedSample& s : samples) {
    if (s.values.size() != s.weights.size()) {
      throw InvalidInput("bhatia_davis_check: values and weights differ in length");
    }
    if (bhatia_davis_slack(L, U, s) < -tol) return false;
  }
  return true;
}

}  // namespace socvexify
