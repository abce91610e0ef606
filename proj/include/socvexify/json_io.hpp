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


// JSON text forms of the public value types. Matrices are written as flat
// row-major arrays (nested row arrays are also accepted on input) and
// infinite bounds as null. Doubles are written in shortest round-trip form,
// so parse(write(v)) == v bit for bit. Malformed input throws InvalidInput.

#ifndef SOCVEXIFY_JSON_IO_HPP_
#define SOCVEXIFY_JSON_IO_HPP_

#include <string>

#include "socvexify/core.hpp"
#include "socvexify/knapsack.hpp"
#include "socvexify/model_ir.hpp"
#include "socvexify/solvers.hpp"

namespace socvexify {

std::string conic_set_to_json(const ConicSet& set);
ConicSet conic_set_from_json(const std::string& text);

std::string certificate_to_json(const EnvelopeCertificate& cert);
EnvelopeCertificate certificate_from_json(const std::string& text);

std::string verdict_to_json(const MembershipVerdict& verdict);
MembershipVerdict verdict_from_json(const std::string& text);

std::string model_to_json(const ModelIR& model);
ModelIR model_from_json(const std::string& text);

std::string instance_to_json(const KnapsackInstance& inst);
KnapsackInstance instance_from_json(const std::string& text);

// Output only: status, value, dual bound, residuals and the primal point, plus
// the enumeration counters when given.
std::string solve_result_to_json(const SolveResult& result, const ModelIR& model,
                                 const BruteForceResult* brute = nullptr);

}  // namespace socvexify

#endif  // SOCVEXIFY_JSON_IO_HPP_
