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


// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input error (including bad flags), 3 numerical limit.

#ifndef SOCVEXIFY_CLI_HPP_
#define SOCVEXIFY_CLI_HPP_

#include <iosfwd>

namespace socvexify {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalLimit = 3;

// Runs one subcommand. Tolerances come from --tol, else SOCVEXIFY_TOL, else the
// built-in defaults; they are restored before returning.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace socvexify

#endif  // SOCVEXIFY_CLI_HPP_
