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


#include "socvexify/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "socvexify/solvers.hpp"

namespace socvexify {
namespace {

LpProblem column_lp(const BinaryDomain& domain, const std::vector<double>& values,
                    const Vector& query, ObjectiveSense sense) {
  if (static_cast<int>(values.size()) != domain.size()) {
    throw InvalidInput("envelope: one value per domain point is required");
  }
  if (query.size() != domain.dim) throw InvalidInput("envelope: query has the wrong dimension");
  if (domain.size() == 0) throw InvalidInput("envelope: empty domain");
  const int K = domain.size();
  LpProblem lp(K);
  lp.sense = sense;
  for (int k = 0; k < K; ++k) lp.objective(k) = values[k];
  for (int i = 0; i < domain.dim; ++i) {
    lp.add_row(domain.points.row(i).transpose(), RowSense::kEqual, query(i));
  }
  lp.add_row(Vector::Ones(K), RowSense::kEqual, 1.0);
  return lp;
}

SolveResult solve_column_lp(const LpProblem& lp, const Vector& query) {
  SolveResult r = solve_lp(lp);
  if (r.status == SolveStatus::kInfeasible) {
    std::ostringstream msg;
    msg << "query (" << query.transpose() << ") is outside the hull of the domain";
    throw QueryOutsideHull(msg.str());
  }
  if (!r.optimal()) throw NumericalLimit("envelope LP: " + r.message);
  return r;
}

}  // namespace

EnvelopeCertificate concave_envelope(const BinaryDomain& domain,
                                     const std::vector<double>& values,
                                     const Vector& query) {
  const LpProblem lp = column_lp(domain, values, query, ObjectiveSense::kMaximize);
  const SolveResult r = solve_column_lp(lp, query);
  EnvelopeCertificate cert;
  cert.value = r.value;
  cert.query = query;
  for (int k = 0; k < domain.size(); ++k) {
    if (r.primal(k) > 1e-9) cert.support.push_back({k, domain.point(k), r.primal(k)});
  }
  return cert;
}

double convex_envelope_value(const BinaryDomain& domain,
                             const std::vector<double>& values,
                             const Vector& query) {
  const LpProblem lp = column_lp(domain, values, query, ObjectiveSense::kMinimize);
  return solve_column_lp(lp, query).value;
}

EnvelopeGap envelope_gap_to_function(const BinaryDomain& domain,
                                     const std::vector<double>& values,
                                     const std::vector<Vector>& samples) {
  EnvelopeGap out;
  for (size_t s = 0; s < samples.size(); ++s) {
    const double upper = concave_envelope(domain, values, samples[s]).value;
    const double lower = convex_envelope_value(domain, values, samples[s]);
    const double gap = std::max(0.0, upper - lower);
    if (out.argmax < 0 || gap > out.gap) {
      out.gap = gap;
      out.argmax = static_cast<int>(s);
    }
  }
  return out;
}

}  // namespace socvexify
