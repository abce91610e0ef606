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

// Dense kernels used by the reformulations and the membership oracles.

#ifndef SOCVEXIFY_LINALG_HPP_
#define SOCVEXIFY_LINALG_HPP_

#include <random>
#include <vector>

#include "socvexify/core.hpp"

namespace socvexify {

// Diagonal entries of R count toward the rank iff > kRankTol * |R(0,0)|.
inline constexpr double kRankTol = 1e-10;

// Rank-revealing QR with column pivoting: A P = Q R.
struct QrFactors {
  Matrix Q;                       // p x rank, orthonormal columns
  Matrix R;                       // rank x m, upper trapezoidal
  int rank = 0;
  std::vector<int> permutation;   // column j of A P is column permutation[j] of A
};

QrFactors qr_factor(const Matrix& A);

// Lower-triangular L with L L' = M. Throws NotPositiveDefinite when a pivot
// falls to or below pivot_tol * max diagonal, and InvalidInput when M is not
// symmetric.
Matrix cholesky(const Matrix& M, double pivot_tol = 1e-10);

// Orthogonal split of the columns of V against col(B): V = V_in + V_perp with
// V_in in col(B) and B' V_perp = 0.
struct Projection {
  Matrix in_span;
  Matrix orthogonal;
};

Projection project_onto_colspace(const Matrix& B, const Matrix& V);

// Full-column-rank B_hat with col(B_hat) = col(B), formed from the independent
// columns of B in their original order, and the coefficients C with
// B = B_hat C.
struct ColumnCompression {
  Matrix basis;                // p x rank
  Matrix coefficients;         // rank x m
  std::vector<int> columns;    // columns of B kept in `basis`
};

ColumnCompression column_compress(const Matrix& B);

// Orthogonal eigenvector matrix of G + G' + n I for a standard Gaussian G.
Matrix random_orthogonal(int n, std::mt19937_64& rng);

// Smallest singular value (0 for an empty matrix).
double smallest_singular_value(const Matrix& A);

}  // namespace socvexify

#endif  // SOCVEXIFY_LINALG_HPP_
