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

#include "socvexify/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace socvexify {

QrFactors qr_factor(const Matrix& A) {
  QrFactors out;
  const Eigen::Index p = A.rows();
  const Eigen::Index m = A.cols();
  if (p == 0 || m == 0) {
    out.Q = Matrix(p, 0);
    out.R = Matrix(0, m);
    out.permutation.resize(m);
    for (Eigen::Index j = 0; j < m; ++j) out.permutation[j] = static_cast<int>(j);
    return out;
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(A);
  const Matrix R_full = qr.matrixR().triangularView<Eigen::Upper>();
  const double lead = std::abs(R_full(0, 0));
  int rank = 0;
  const Eigen::Index diag = std::min(p, m);
  for (Eigen::Index i = 0; i < diag; ++i) {
    if (lead > 0.0 && std::abs(R_full(i, i)) > kRankTol * lead) ++rank;
  }
  out.rank = rank;
  const Matrix Q_full = qr.householderQ() * Matrix::Identity(p, p);
  out.Q = Q_full.leftCols(rank);
  out.R = R_full.topRows(rank);
  const auto& perm = qr.colsPermutation().indices();
  out.permutation.assign(perm.data(), perm.data() + perm.size());
  return out;
}

Matrix cholesky(const Matrix& M, double pivot_tol) {
  const Eigen::Index n = M.rows();
  if (M.cols() != n) throw InvalidInput("cholesky needs a square matrix");
  if (n == 0) return Matrix(0, 0);
  const double scale = M.cwiseAbs().maxCoeff();
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, scale)) {
    throw InvalidInput("cholesky needs a symmetric matrix");
  }
  const double max_diag = M.diagonal().maxCoeff();
  if (!(max_diag > 0.0)) throw NotPositiveDefinite("matrix has no positive diagonal");
  const double threshold = pivot_tol * max_diag;
  Matrix L = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double pivot = M(j, j) - L.row(j).head(j).squaredNorm();
    if (!(pivot > threshold)) {
      std::ostringstream msg;
      msg << "pivot " << pivot << " at column " << j << " is below " << threshold;
      throw NotPositiveDefinite(msg.str());
    }
    const double ljj = std::sqrt(pivot);
    L(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      L(i, j) = (M(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / ljj;
    }
  }
  return L;
}

Projection project_onto_colspace(const Matrix& B, const Matrix& V) {
  if (B.rows() != V.rows()) {
    throw InvalidInput("project_onto_colspace: B and V must have equal rows");
  }
  const QrFactors qr = qr_factor(B);
  Projection out;
  out.in_span = qr.Q * (qr.Q.transpose() * V);
  out.orthogonal = V - out.in_span;
  return out;
}

ColumnCompression column_compress(const Matrix& B) {
  const QrFactors qr = qr_factor(B);
  ColumnCompression out;
  out.columns.assign(qr.permutation.begin(), qr.permutation.begin() + qr.rank);
  std::sort(out.columns.begin(), out.columns.end());
  out.basis.resize(B.rows(), qr.rank);
  for (int j = 0; j < qr.rank; ++j) out.basis.col(j) = B.col(out.columns[j]);
  if (qr.rank == 0) {
    out.coefficients = Matrix(0, B.cols());
    return out;
  }
  // basis has full column rank, so the normal equations are well posed.
  out.coefficients = out.basis.colPivHouseholderQr().solve(B);
  for (int j = 0; j < qr.rank; ++j) {
    out.coefficients.col(out.columns[j]) = Vector::Unit(qr.rank, j);
  }
  return out;
}

Matrix random_orthogonal(int n, std::mt19937_64& rng) {
  if (n < 1) throw InvalidInput("random_orthogonal needs n >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix G(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) G(i, j) = gauss(rng);
  }
  const Matrix S = G + G.transpose() + static_cast<double>(n) * Matrix::Identity(n, n);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(S);
  return eig.eigenvectors();
}

double smallest_singular_value(const Matrix& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(A);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace socvexify
