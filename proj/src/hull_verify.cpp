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


#include "socvexify/hull_verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "socvexify/envelope.hpp"
#include "socvexify/linalg.hpp"
#include "socvexify/reformulate.hpp"
#include "socvexify/report_io.hpp"
#include "socvexify/solvers.hpp"

namespace socvexify {
namespace {

void check_point(const ConicSet& set, const Vector& x, const Vector& y) {
  if (x.size() != set.n() || y.size() != set.m()) {
    throw InvalidInput("point dimensions do not match the set");
  }
}

// Smallest distance of y to a violated or active box face; +inf without a box.
double box_slack(const ConicSet& set, const Vector& y) {
  double slack = kInf;
  if (!set.y_box) return slack;
  for (int i = 0; i < set.m(); ++i) {
    if (std::isfinite(set.y_box->lower(i))) slack = std::min(slack, y(i) - set.y_box->lower(i));
    if (std::isfinite(set.y_box->upper(i))) slack = std::min(slack, set.y_box->upper(i) - y(i));
  }
  return slack;
}

bool polyhedral(NormKind norm) { return norm != NormKind::kL2; }

SolveResult run(const SocpProblem& p, bool use_lp) {
  if (use_lp) {
    const std::optional<LpProblem> lp = as_lp(linearize_polyhedral_cones(p));
    return solve_lp(*lp);
  }
  return solve_socp(p);
}

// Domain points that can carry positive weight in a representation of x, and
// a weight vector that is positive on exactly those points.
void active_weights(const BinaryDomain& domain, const Vector& x, std::vector<int>& active,
                    Vector& weights) {
  const int K = domain.size();
  const int n = domain.dim;
  active.clear();
  // Full cube with x strictly inside: the product measure works.
  bool interior = K == (1 << n);
  for (int i = 0; i < n && interior; ++i) interior = x(i) > 1e-9 && x(i) < 1.0 - 1e-9;
  if (interior) {
    weights.resize(K);
    for (int k = 0; k < K; ++k) {
      double w = 1.0;
      for (int i = 0; i < n; ++i) w *= domain.points(i, k) > 0.5 ? x(i) : 1.0 - x(i);
      weights(k) = w;
      active.push_back(k);
    }
    weights /= weights.sum();
    return;
  }
  LpProblem lp(K);
  for (int i = 0; i < n; ++i) lp.add_row(domain.points.row(i).transpose(), RowSense::kEqual, x(i));
  lp.add_row(Vector::Ones(K), RowSense::kEqual, 1.0);
  Vector sum = Vector::Zero(K);
  int solved = 0;
  std::vector<bool> seen(K, false);
  for (int k = 0; k < K; ++k) {
    if (seen[k]) continue;
    lp.objective.setZero();
    lp.objective(k) = 1.0;
    const SolveResult r = solve_lp(lp);
    if (r.status == SolveStatus::kInfeasible) {
      throw QueryOutsideHull("x is outside the hull of the domain");
    }
    if (!r.optimal()) throw NumericalLimit("weight support LP: " + r.message);
    if (r.value <= 1e-9) continue;
    sum += r.primal.cwiseMax(0.0);
    ++solved;
    for (int j = 0; j < K; ++j) {
      if (r.primal(j) > 1e-9) seen[j] = true;
    }
  }
  if (solved == 0) throw QueryOutsideHull("x is outside the hull of the domain");
  for (int k = 0; k < K; ++k) {
    if (sum(k) > 1e-9 * solved) active.push_back(k);
  }
  weights = sum / static_cast<double>(solved);
}

}  // namespace

MembershipVerdict membership_Z(const ConicSet& set, const Vector& x, const Vector& y) {
  check_point(set, x, y);
  const std::optional<int> k = set.domain.find(x);
  if (!k) throw PointNotInDomain("x is not a point of the domain");
  const double f = evaluate_rhs(set.f, set.domain, *k);
  const Vector r = set.A * x + set.B * y + set.d;
  const double margin = std::min(f - norm_of(r, set.norm), box_slack(set, y));
  return MembershipVerdict::from_margin(margin, tolerances().feasibility);
}

WDetail membership_W_detail(const ConicSet& set, const Vector& x, const Vector& y) {
  check_point(set, x, y);
  WDetail out;
  out.certificate = concave_envelope(set.domain, rhs_values(set.f, set.domain), x);
  const Vector r = set.A * x + set.B * y + set.d;
  const double margin =
      std::min(out.certificate.value - norm_of(r, set.norm), box_slack(set, y));
  out.verdict = MembershipVerdict::from_margin(margin, tolerances().feasibility);
  return out;
}

MembershipVerdict membership_W(const ConicSet& set, const Vector& x, const Vector& y) {
  return membership_W_detail(set, x, y).verdict;
}

HullDetail membership_conv_perspective_detail(const ConicSet& set, const Vector& x,
                                              const Vector& y, const HullOptions& options) {
  check_point(set, x, y);
  const bool use_lp = options.backend == HullBackend::kLp ||
                      (options.backend == HullBackend::kAuto && polyhedral(set.norm));
  if (use_lp && !polyhedral(set.norm)) {
    throw InvalidInput("the LP backend needs an L1 or LINF norm");
  }
  const Tolerances tol = tolerances();
  const int n = set.n();
  const int p = set.p();

  Matrix Bh;
  Vector w;
  if (set.y_box) {
    if (qr_factor(set.B).rank < set.m()) {
      throw InvalidInput("a y_box needs B with full column rank");
    }
    Bh = set.B;
    w = y;
  } else {
    const ColumnCompression cc = column_compress(set.B);
    Bh = cc.basis;
    w = cc.coefficients * y;
  }
  const int r = static_cast<int>(Bh.cols());

  std::vector<int> active;
  Vector lam;
  active_weights(set.domain, x, active, lam);
  const int S = static_cast<int>(active.size());
  const std::vector<double> f = rhs_values(set.f, set.domain);

  HullDetail out;
  out.active_slices = S;
  const int block = r + 2;  // lambda, z (r), t or u
  const int nv = S * block;
  auto lam_idx = [block](int j) { return j * block; };
  auto z_idx = [block](int j, int i) { return j * block + 1 + i; };
  auto t_idx = [block, r](int j) { return j * block + 1 + r; };

  auto build = [&](bool margin_problem) {
    SocpProblem prob(nv);
    prob.sense = margin_problem ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize;
    Vector start(nv);
    Vector sum_row = Vector::Zero(nv);
    std::vector<Vector> x_rows(n, Vector::Zero(nv));
    std::vector<Vector> z_rows(r, Vector::Zero(nv));
    for (int j = 0; j < S; ++j) {
      const int k = active[j];
      const Vector xk = set.domain.point(k);
      const Vector a = set.A * xk + set.d;
      prob.lower(lam_idx(j)) = 0.0;
      sum_row(lam_idx(j)) = 1.0;
      for (int i = 0; i < n; ++i) x_rows[i](lam_idx(j)) = xk(i);
      for (int i = 0; i < r; ++i) z_rows[i](z_idx(j, i)) = 1.0;

      ConeRow cone;
      cone.F = Matrix::Zero(p, nv);
      cone.F.col(lam_idx(j)) = a;
      for (int i = 0; i < r; ++i) cone.F.col(z_idx(j, i)) = Bh.col(i);
      cone.g = Vector::Zero(p);
      cone.h = Vector::Zero(nv);
      cone.h(t_idx(j)) = 1.0;
      if (!margin_problem) cone.h(lam_idx(j)) = f[k];
      cone.norm = set.norm;

      const double lj = lam(j);
      start(lam_idx(j)) = lj;
      for (int i = 0; i < r; ++i) start(z_idx(j, i)) = lj * w(i);
      const Vector v = lj * a + Bh * (lj * w);
      double need = norm_of(v, set.norm) - (margin_problem ? 0.0 : lj * f[k]);
      if (set.y_box) {
        for (int i = 0; i < set.m(); ++i) {
          const double lo = set.y_box->lower(i);
          const double hi = set.y_box->upper(i);
          if (std::isfinite(lo)) {
            Vector row = Vector::Zero(nv);
            row(z_idx(j, i)) = 1.0;
            row(lam_idx(j)) = -lo;
            if (!margin_problem) row(t_idx(j)) = 1.0;
            prob.add_row(row, RowSense::kGreaterEqual, 0.0);
            if (!margin_problem) need = std::max(need, lj * (lo - w(i)));
          }
          if (std::isfinite(hi)) {
            Vector row = Vector::Zero(nv);
            row(z_idx(j, i)) = -1.0;
            row(lam_idx(j)) = hi;
            if (!margin_problem) row(t_idx(j)) = 1.0;
            prob.add_row(row, RowSense::kGreaterEqual, 0.0);
            if (!margin_problem) need = std::max(need, lj * (w(i) - hi));
          }
        }
      }
      if (margin_problem) {
        prob.objective(lam_idx(j)) = f[k];
        prob.objective(t_idx(j)) = -1.0;
        start(t_idx(j)) = norm_of(v, set.norm) + 1.0;
      } else {
        prob.objective(t_idx(j)) = 1.0;
        prob.lower(t_idx(j)) = 0.0;
        start(t_idx(j)) = std::max(need, 0.0) + 1.0;
      }
      prob.cones.push_back(std::move(cone));
    }
    prob.add_row(sum_row, RowSense::kEqual, 1.0);
    for (int i = 0; i < n; ++i) prob.add_row(x_rows[i], RowSense::kEqual, x(i));
    for (int i = 0; i < r; ++i) prob.add_row(z_rows[i], RowSense::kEqual, w(i));
    prob.start = start;
    return prob;
  };

  const SolveResult p1 = run(build(false), use_lp);
  if (p1.status == SolveStatus::kInfeasible) {
    // Only the equality rows can fail; they hold for any x in the hull.
    throw QueryOutsideHull("perspective system infeasible at x");
  }
  if (!p1.optimal()) throw NumericalLimit("perspective phase-one problem: " + p1.message);
  out.phase_one = std::max(0.0, p1.value);
  if (out.phase_one > tol.equality) {
    out.verdict = MembershipVerdict::from_margin(-out.phase_one, tol.feasibility);
    return out;
  }
  const double slack = box_slack(set, y);
  if (slack <= tol.feasibility) {
    out.verdict = MembershipVerdict::from_margin(slack, tol.feasibility);
    out.margin_problem = slack;
    return out;
  }
  const SolveResult p2 = run(build(true), use_lp);
  if (!p2.optimal()) throw NumericalLimit("perspective margin problem: " + p2.message);
  out.margin_problem = p2.value;
  out.verdict = MembershipVerdict::from_margin(std::min(p2.value, slack), tol.feasibility);
  return out;
}

MembershipVerdict membership_conv_perspective(const ConicSet& set, const Vector& x,
                                              const Vector& y, const HullOptions& options) {
  return membership_conv_perspective_detail(set, x, y, options).verdict;
}

double sampling_half_width(const ConicSet& set) {
  const std::vector<double> f = rhs_values(set.f, set.domain);
  const double fmax = *std::max_element(f.begin(), f.end());
  double a_norm = 0.0;
  if (set.A.size() > 0) {
    Eigen::JacobiSVD<Matrix> svd(set.A);
    a_norm = svd.singularValues()(0);
  }
  const double sigma = smallest_singular_value(column_compress(set.B).basis);
  if (!(sigma > 0.0)) return 1.0;
  return (fmax + set.d.norm() + a_norm * std::sqrt(static_cast<double>(set.n()))) / sigma;
}

HullReport verify_hull_equivalence(const ConicSet& set, int trials, std::mt19937_64& rng,
                                   const HullOptions& options) {
  if (trials < 0) throw InvalidInput("trials must be nonnegative");
  if (const auto issues = validate(set); !issues.empty()) {
    throw InvalidInput("invalid conic set: " + issues.front());
  }
  const double band = 10.0 * tolerances().feasibility;
  HullReport report;
  report.trials = trials;
  report.y_max = sampling_half_width(set);
  const int K = set.domain.size();
  const int n = set.n();
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> uni(-report.y_max, report.y_max);
  const std::vector<double> values = rhs_values(set.f, set.domain);
  const Eigen::CompleteOrthogonalDecomposition<Matrix> bpinv(set.B);
  std::uniform_real_distribution<double> radius(
      0.0, 2.0 * std::max(1e-9, *std::max_element(values.begin(), values.end())));
  for (int t = 0; t < trials; ++t) {
    HullPoint pt;
    pt.id = t;
    Vector wts(K);
    for (int k = 0; k < K; ++k) wts(k) = expo(rng);
    wts /= wts.sum();
    pt.x = set.domain.points * wts;
    pt.y.resize(set.m());
    for (int i = 0; i < set.m(); ++i) pt.y(i) = uni(rng);
    if (t % 2 == 1) {
      // Every other point is aimed at the boundary: y0 centres the cone at x and
      // the offset has ||B dy|| spread over [0, 2 max f].
      const Vector y0 = bpinv.solve(-(set.A * pt.x + set.d));
      const Vector By = set.B * pt.y;
      if (By.norm() > 1e-12) pt.y = y0 + pt.y * (radius(rng) / norm_of(By, set.norm));
    }
    try {
      const WDetail w = membership_W_detail(set, pt.x, pt.y);
      pt.w_status = w.verdict.status;
      pt.w_margin = w.verdict.margin;
      ++report.envelope_queries;
      const double res = certificate_residual(w.certificate, values);
      const int support = static_cast<int>(w.certificate.support.size());
      report.max_certificate_residual = std::max(report.max_certificate_residual, res);
      report.max_support = std::max(report.max_support, support);
      if (res > 1e-6 || support > n + 1) ++report.certificate_violations;
      const HullDetail h = membership_conv_perspective_detail(set, pt.x, pt.y, options);
      pt.hull_status = h.verdict.status;
      pt.hull_margin = h.verdict.margin;
    } catch (const Error& e) {
      pt.error = e.what();
      ++report.errors;
      report.points.push_back(std::move(pt));
      continue;
    }
    if (std::abs(pt.w_margin) <= band || std::abs(pt.hull_margin) <= band) {
      pt.skipped = true;
      ++report.skipped;
    } else if (pt.w_status == pt.hull_status) {
      ++report.agreements;
      if (pt.w_status == Membership::kInside) {
        report.max_margin_difference =
            std::max(report.max_margin_difference, std::abs(pt.w_margin - pt.hull_margin));
      }
    } else {
      ++report.disagreements;
    }
    report.points.push_back(std::move(pt));
  }
  return report;
}

ConicSet random_normalized_set(int n, int m, int p, NormKind norm, std::mt19937_64& rng) {
  if (n < 1 || n > kMaxDomainDim || m < 1 || p < 1) {
    throw InvalidInput("random_normalized_set: need n in [1, 20], m >= 1, p >= 1");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> fdist(0.2, 3.0);
  std::uniform_int_distribution<int> coin(0, 3);
  auto gaussian = [&](int rows, int cols) {
    Matrix M(rows, cols);
    for (int j = 0; j < cols; ++j) {
      for (int i = 0; i < rows; ++i) M(i, j) = gauss(rng);
    }
    return M;
  };
  ConicSet set;
  set.domain = BinaryDomain::full_cube(n);
  set.norm = norm;
  set.B = gaussian(p, m);
  // Occasionally repeat a column so that B is rank deficient.
  if (m >= 2 && coin(rng) == 0) set.B.col(m - 1) = 0.5 * set.B.col(0);
  const int K = set.domain.size();
  if (norm == NormKind::kL2) {
    set.A = gaussian(p, n);
    set.d = gaussian(p, 1).col(0);
    // f(x)^2 = |A_perp x + d_perp|^2 + g^2 keeps every point after the projection.
    Matrix V(p, n + 1);
    V << set.A, set.d;
    const Projection proj = project_onto_colspace(set.B, V);
    TableRhs f;
    for (int k = 0; k < K; ++k) {
      const Vector r = proj.orthogonal.leftCols(n) * set.domain.point(k) + proj.orthogonal.col(n);
      const double g = fdist(rng);
      f.values.push_back(std::sqrt(r.squaredNorm() + g * g));
    }
    set.f = f;
    return normalize_assumption2(set).set;
  }
  set.A = set.B * gaussian(m, n);
  set.d = set.B * gaussian(m, 1).col(0);
  TableRhs f;
  for (int k = 0; k < K; ++k) f.values.push_back(fdist(rng));
  set.f = f;
  return set;
}

CharacterizationCheck characterization_applies(const ConicSet& set) {
  CharacterizationCheck out;
  if (set.y_box) {
    out.applies = false;
    out.reasons.push_back("y is further constrained by a box");
  }
  const double res = assumption2_residual(set);
  const double scale = 1.0 + std::max(set.A.size() ? set.A.cwiseAbs().maxCoeff() : 0.0,
                                      set.d.size() ? set.d.cwiseAbs().maxCoeff() : 0.0);
  if (res > 1e-9 * scale) {
    out.applies = false;
    std::ostringstream msg;
    msg << "[A d] is not in col(B) (residual " << res << ")";
    out.reasons.push_back(msg.str());
  }
  // Slice k is empty iff min_y ||a_k + B y|| > f_k (with the box, a small LP or
  // SOCP; without it, the distance from a_k to col(B)).
  const std::vector<double> f = rhs_values(set.f, set.domain);
  for (int k = 0; k < set.domain.size(); ++k) {
    const Vector a = set.A * set.domain.point(k) + set.d;
    bool empty = false;
    if (!set.y_box) {
      const Projection proj = project_onto_colspace(set.B, a);
      empty = norm_of(proj.orthogonal.col(0), set.norm) > f[k] + tolerances().feasibility;
    } else {
      SocpProblem prob(set.m() + 1);
      prob.objective(set.m()) = 1.0;
      prob.lower.head(set.m()) = set.y_box->lower;
      prob.upper.head(set.m()) = set.y_box->upper;
      ConeRow cone;
      cone.F = Matrix::Zero(set.p(), set.m() + 1);
      cone.F.leftCols(set.m()) = set.B;
      cone.g = a;
      cone.h = Vector::Unit(set.m() + 1, set.m());
      cone.norm = set.norm;
      prob.cones.push_back(cone);
      const SolveResult r = solve_socp(prob);
      empty = r.optimal() && r.value > f[k] + tolerances().feasibility;
    }
    if (empty) {
      out.applies = false;
      std::ostringstream msg;
      msg << "slice of domain point " << k << " is empty";
      out.reasons.push_back(msg.str());
    }
  }
  return out;
}

ConicSet example1_fixture() {
  ConicSet set;
  set.domain = BinaryDomain::full_cube(1);
  set.A = Matrix(2, 1);
  set.A << 1.0, 0.0;
  set.B = Matrix(2, 1);
  set.B << 0.0, 1.0;
  set.d = Vector::Zero(2);
  set.f = TableRhs{{std::sqrt(2.0), std::sqrt(2.0)}};
  set.norm = NormKind::kL2;
  return set;
}

ConicSet example2_fixture() {
  ConicSet set;
  set.domain = BinaryDomain::full_cube(1);
  set.A = Matrix(2, 1);
  set.A << 3.0, 3.0;
  set.B = Matrix::Identity(2, 2);
  set.d = Vector(2);
  set.d << 1.0, -1.0;
  set.f = TableRhs{{std::sqrt(2.0), std::sqrt(2.0)}};
  set.norm = NormKind::kL2;
  set.y_box = YBox{Vector::Zero(2), Vector::Constant(2, kInf)};
  return set;
}

std::string hull_report_csv(const HullReport& report) {
  std::string out;
  int n = 0;
  int m = 0;
  if (!report.points.empty()) {
    n = static_cast<int>(report.points.front().x.size());
    m = static_cast<int>(report.points.front().y.size());
  }
  std::vector<std::string> header = {"point_id"};
  for (int i = 0; i < n; ++i) header.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i) header.push_back("y" + std::to_string(i + 1));
  for (const char* c : {"W_status", "hull_status", "W_margin", "hull_margin"}) header.push_back(c);
  out += csv_row(header);
  for (const HullPoint& pt : report.points) {
    std::vector<std::string> row = {std::to_string(pt.id)};
    for (int i = 0; i < n; ++i) row.push_back(format_double(pt.x(i)));
    for (int i = 0; i < m; ++i) row.push_back(format_double(pt.y(i)));
    if (!pt.error.empty()) {
      row.insert(row.end(), {"ERROR", "ERROR", "nan", "nan"});
    } else {
      row.push_back(std::string(membership_name(pt.w_status)));
      row.push_back(std::string(membership_name(pt.hull_status)));
      row.push_back(format_double(pt.w_margin));
      row.push_back(format_double(pt.hull_margin));
    }
    out += csv_row(row);
  }
  return out;
}

}  // namespace socvexify
