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


// Concave envelope of a function given on a finite binary domain:
//   f_hat(q) = max { sum_k l_k f(x^k) : sum_k l_k x^k = q, l in simplex },
// with the optimal weights returned as a certificate.

#ifndef SOCVEXIFY_ENVELOPE_HPP_
#define SOCVEXIFY_ENVELOPE_HPP_

#include <vector>

#include "socvexify/core.hpp"

namespace socvexify {

// Throws QueryOutsideHull when query is not in conv(domain). Support points
// are the positive basic weights (> 1e-9), sorted by domain index; there are
// at most dim + 1 of them.
EnvelopeCertificate concave_envelope(const BinaryDomain& domain,
                                     const std::vector<double>& values,
                                     const Vector& query);

// Convex envelope (the lowest interpolation of the values) at query.
double convex_envelope_value(const BinaryDomain& domain,
                             const std::vector<double>& values,
                             const Vector& query);

struct EnvelopeGap {
  double gap = 0.0;   // max over samples of concave minus convex envelope
  int argmax = -1;    // first sample attaining it
};

EnvelopeGap envelope_gap_to_function(const BinaryDomain& domain,
                                     const std::vector<double>& values,
                                     const std::vector<Vector>& samples);

}  // namespace socvexify

#endif  // SOCVEXIFY_ENVELOPE_HPP_
