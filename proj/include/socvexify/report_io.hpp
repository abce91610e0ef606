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


// Small output helpers: number formatting, CSV rows and atomic file writes.

#ifndef SOCVEXIFY_REPORT_IO_HPP_
#define SOCVEXIFY_REPORT_IO_HPP_

#include <string>
#include <vector>

namespace socvexify {

// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

// Joins cells with commas; cells holding a comma, quote or newline are quoted.
std::string csv_row(const std::vector<std::string>& cells);

// Writes to a temporary file next to `path`, then renames it into place.
// Throws Error on failure.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace socvexify

#endif  // SOCVEXIFY_REPORT_IO_HPP_
