# Copyright 2026 The socvexify Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for socvexify."""

from ._core import (
    ConicSet,
    Error,
    InvalidInput,
    InvalidRange,
    NumericalLimit,
    QueryOutsideHull,
    SigmaTildeNotPD,
    build_model,
    cli,
    concave_envelope,
    example1_fixture,
    example2_fixture,
    gap_bound,
    generate_kp,
    generate_mkp,
    membership_hull,
    membership_w,
    membership_z,
    normalize,
    random_normalized_set,
    solve_brute,
    verify_hull,
)

__all__ = [
    "ConicSet",
    "Error",
    "InvalidInput",
    "InvalidRange",
    "NumericalLimit",
    "QueryOutsideHull",
    "SigmaTildeNotPD",
    "build_model",
    "cli",
    "concave_envelope",
    "example1_fixture",
    "example2_fixture",
    "gap_bound",
    "generate_kp",
    "generate_mkp",
    "membership_hull",
    "membership_w",
    "membership_z",
    "normalize",
    "random_normalized_set",
    "solve_brute",
    "verify_hull",
]
