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


// Text renderings of a ModelIR: the canonical JSON document and an LP-format
// file for external MIQCP solvers.

#ifndef SOCVEXIFY_MODEL_EXPORT_HPP_
#define SOCVEXIFY_MODEL_EXPORT_HPP_

#include <string>
#include <string_view>

#include "socvexify/model_ir.hpp"

namespace socvexify {

enum class ExportFormat { kJson, kLpText };

ExportFormat parse_export_format(std::string_view name);  // "json" | "lp_text"

// JSON is lossless (model_from_json inverts it). In LP text quadratic parts sit
// in [ ] brackets; a cone row ||(e_1, .., e_k)|| <= b becomes
// sum e_i^2 - b^2 <= 0 together with the linear row b >= 0, and a rotated row
// becomes [ eta ^ 2 ] - tau <= 0. Throws UnrepresentableConstraint for names
// the format cannot hold or non-finite coefficients.
std::string export_model(const ModelIR& model, ExportFormat format);

}  // namespace socvexify

#endif  // SOCVEXIFY_MODEL_EXPORT_HPP_
