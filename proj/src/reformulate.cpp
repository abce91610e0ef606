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


#include "socvexify/reformulate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "socvexify/linalg.hpp"

namespace socvexify {
namespace {

Matrix stacked(const ConicSet& set) {
  Matrix V(set.p(), set.n() + 1);
  V.leftCols(set.n()) = set.A;
  V.col(set.n()) = set.d;
  return V;
}

void require_valid(const ConicSet& set) {
  const std::vector<std::string> issues = validate(set);
  if (!issues.empty()) throw InvalidInput("invalid conic set: " + issues.front());
}

// f(x^k)^2 without the clamp.
double squared_value(const RhsFunction& f, const BinaryDomain& domain, int k) {
  if (const auto* t = std::get_if<TableRhs>(&f)) return t->values[k] * t->values[k];
  return radicand(std::get<SqrtQuadraticRhs>(f), domain.point(k));
}

}  // namespace

double assumption2_residual(const ConicSet& set) {
  if (set.p() == 0) return 0.0;
  const Projection proj = project_onto_colspace(set.B, stacked(set));
  return proj.orthogonal.size() ? proj.orthogonal.cwiseAbs().maxCoeff() : 0.0;
}

NormalizeResult normalize_assumption2(const ConicSet& set) {
  require_valid(set);
  const int n = set.n();
  const Matrix V = stacked(set);
  const Projection proj = project_onto_colspace(set.B, V);
  const double scale = 1.0 + (V.size() ? V.cwiseAbs().maxCoeff() : 0.0);
  NormalizeResult out;
  out.report.residual_before =
      proj.orthogonal.size() ? proj.orthogonal.cwiseAbs().maxCoeff() : 0.0;
  const bool already = out.report.residual_before <= 1e-12 * scale;

  if (set.norm != NormKind::kL2 && out.report.residual_before > 1e-9 * scale) {
    std::ostringstream msg;
    msg << "the " << norm_name(set.norm)
        << " norm has no projection rewrite; [A d] must already lie in col(B) (residual "
        << out.report.residual_before << ")";
    throw InvalidInput(msg.str());
  }

  std::vector<int> keep;
  std::vector<double> values;
  for (int k = 0; k < set.domain.size(); ++k) {
    double rad = squared_value(set.f, set.domain, k);
    if (!already && set.norm == NormKind::kL2) {
      const Vector x = set.domain.point(k);
      const Vector r = proj.orthogonal.leftCols(n) * x + proj.orthogonal.col(n);
      rad -= r.squaredNorm();
    }
    if (rad < -kRadicandClamp) {
      out.report.dropped.push_back(k);
      out.report.dropped_points.push_back(set.domain.point(k));
      continue;
    }
    keep.push_back(k);
    if (const auto* t = std::get_if<TableRhs>(&set.f); t && already) {
      values.push_back(t->values[k]);
    } else {
      values.push_back(std::sqrt(std::max(rad, 0.0)));
    }
  }
  if (keep.empty()) {
    throw EmptyDomainAfterRestriction("no domain point has a nonnegative radicand");
  }
  out.set = set;
  out.set.domain = set.domain.subset(keep);
  out.set.f = TableRhs{values};
  if (!already && set.norm == NormKind::kL2) {
    out.set.A = proj.in_span.leftCols(n);
    out.set.d = proj.in_span.col(n);
    out.report.residual_after = assumption2_residual(out.set);
  } else {
    out.report.residual_after = out.report.residual_before;
  }
  return out;
}

double quad_lhs(const QuadConstraint& q, const Vector& x, const Vector& y) {
  return x.dot(q.Qxx * x) + 2.0 * x.dot(q.Qxy * y) + y.dot(q.Qyy * y) + q.ax.dot(x) +
         q.ay.dot(y);
}

QuadSocPieces quad_to_soc(const QuadConstraint& q, const std::optional<BinaryDomain>& domain) {
  const int n = q.n();
  const int m = q.m();
  if (q.Qxx.cols() != n || q.Qxy.rows() != n || q.Qxy.cols() != m || q.Qyy.cols() != m ||
      q.ax.size() != n || q.ay.size() != m) {
    throw InvalidInput("quad_to_soc: inconsistent block dimensions");
  }
  if (m == 0) throw InvalidInput("quad_to_soc: needs at least one continuous variable");
  const Matrix L = cholesky(q.Qyy);
  QuadSocPieces out;
  out.B = L.transpose();
  const auto lower = L.triangularView<Eigen::Lower>();
  out.A = lower.solve(q.Qxy.transpose());
  out.d = 0.5 * lower.solve(q.ay);
  SqrtQuadraticRhs sq;
  sq.P = out.A.transpose() * out.A - q.Qxx;
  sq.P = 0.5 * (sq.P + sq.P.transpose());
  sq.r = 2.0 * out.A.transpose() * out.d - q.ax;
  sq.s = out.d.squaredNorm();
  if (const double* g = std::get_if<double>(&q.g)) {
    sq.s += *g;
    out.f = sq;
    return out;
  }
  if (!domain) throw InvalidInput("quad_to_soc: a table g needs its domain");
  const TableRhs& g = std::get<TableRhs>(q.g);
  if (static_cast<int>(g.values.size()) != domain->size()) {
    throw InvalidInput("quad_to_soc: g table size does not match the domain");
  }
  TableRhs f;
  for (int k = 0; k < domain->size(); ++k) {
    const double rad = g.values[k] + radicand(sq, domain->point(k));
    if (rad < -kRadicandClamp) {
      std::ostringstream msg;
      msg << "quad_to_soc: radicand " << rad << " at domain point " << k;
      throw InvalidInput(msg.str());
    }
    f.values.push_back(std::sqrt(std::max(rad, 0.0)));
  }
  out.f = f;
  return out;
}

double squared_rhs(const QuadSocPieces& pieces, const Vector& x,
                   const std::optional<BinaryDomain>& domain) {
  if (const auto* sq = std::get_if<SqrtQuadraticRhs>(&pieces.f)) return radicand(*sq, x);
  if (!domain) throw InvalidInput("squared_rhs: a table f needs its domain");
  const std::optional<int> k = domain->find(x);
  if (!k) throw PointNotInDomain("squared_rhs: x is not a domain point");
  const double v = std::get<TableRhs>(pieces.f).values[*k];
  return v * v;
}

double drcc_slack(const DrccConstraint& dr, const Vector& x, const Vector& y) {
  const double at = (1.0 - dr.alpha) / dr.alpha;
  const double quad = x.dot(dr.Sxx * x) + 2.0 * x.dot(dr.Sxy * y) + y.dot(dr.Syy * y);
  return dr.c - dr.mux.dot(x) - dr.muy.dot(y) - std::sqrt(at * std::max(quad, 0.0));
}

DrccQuad drcc_to_quad(const DrccConstraint& dr) {
  if (!(dr.alpha > 0.0 && dr.alpha < 1.0)) throw InvalidInput("drcc_to_quad: alpha must be in (0, 1)");
  const int n = dr.n();
  const int m = dr.m();
  if (dr.Sxx.rows() != n || dr.Sxx.cols() != n || dr.Sxy.rows() != n || dr.Sxy.cols() != m ||
      dr.Syy.rows() != m || dr.Syy.cols() != m) {
    throw InvalidInput("drcc_to_quad: inconsistent covariance blocks");
  }
  DrccQuad out;
  const double at = (1.0 - dr.alpha) / dr.alpha;
  out.alpha_tilde = at;
  out.quad.Qxx = at * dr.Sxx - dr.mux * dr.mux.transpose();
  out.quad.Qxy = at * dr.Sxy - dr.mux * dr.muy.transpose();
  out.quad.Qyy = at * dr.Syy - dr.muy * dr.muy.transpose();
  out.quad.ax = 2.0 * dr.c * dr.mux;
  out.quad.ay = 2.0 * dr.c * dr.muy;
  out.quad.g = dr.c * dr.c;
  out.linear_x = dr.mux;
  out.linear_y = dr.muy;
  out.linear_rhs = dr.c;
  out.sigma_yy_pd = true;
  if (m > 0) {
    try {
      cholesky(out.quad.Qyy);
    } catch (const NotPositiveDefinite&) {
      out.sigma_yy_pd = false;
    }
  }
  return out;
}

}  // namespace socvexify
