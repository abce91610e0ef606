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

// Primal log-barrier method for small dense SOCPs.
//
// Equalities are eliminated up front (v = v0 + Z xi with Z an orthonormal
// null-space basis), so the path is followed over xi only. Barrier terms:
//   -log(h - g'xi)                      for each linear inequality,
//   -log(t - |u|) - log(t + |u|)        for each cone, t = a'xi + b, u = F xi + g.

#include <algorithm>
#include <cmath>
#include <functional>

#include "socvexify/solvers.hpp"

namespace socvexify {
namespace {

struct Cone {
  Matrix F;
  Vector g;
  Vector a;
  double b = 0.0;
};

// minimize c'xi  s.t.  G xi <= h,  cones.
struct Reduced {
  Matrix G;
  Vector h;
  std::vector<Cone> cones;
  Vector c;
  // All cones stacked, filled by pack(): rows of F and g per cone, one row of
  // a and b per cone.
  Matrix F_all;
  Vector g_all;
  Matrix a_all;
  Vector b_all;
  std::vector<Eigen::Index> offsets;

  int dim() const { return static_cast<int>(c.size()); }
  double nu() const { return static_cast<double>(G.rows() + 2 * cones.size()); }
};

// Smallest slack over all rows (cone slack is t - |u|); negative if violated.
double min_slack(const Reduced& R, const Vector& xi) {
  double worst = kInf;
  if (R.G.rows() > 0) worst = (R.h - R.G * xi).minCoeff();
  for (const Cone& k : R.cones) {
    const double t = k.a.dot(xi) + k.b;
    const double u = (k.F * xi + k.g).norm();
    worst = std::min(worst, t - u);
  }
  return worst;
}

// Barrier plus tau * objective; +inf outside the interior.
double merit(const Reduced& R, const Vector& xi, double tau) {
  double val = tau * R.c.dot(xi);
  if (R.G.rows() > 0) {
    const Vector s = R.h - R.G * xi;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (!(s(i) > 0.0)) return kInf;
      val -= std::log(s(i));
    }
  }
  for (const Cone& k : R.cones) {
    const double t = k.a.dot(xi) + k.b;
    const double u = (k.F * xi + k.g).norm();
    if (!(t - u > 0.0)) return kInf;
    val -= std::log(t - u) + std::log(t + u);
  }
  return val;
}

void pack(Reduced& R) {
  const Eigen::Index n = R.dim();
  Eigen::Index rows = 0;
  R.offsets.clear();
  for (const Cone& k : R.cones) {
    R.offsets.push_back(rows);
    rows += k.F.rows();
  }
  R.offsets.push_back(rows);
  R.F_all.resize(rows, n);
  R.g_all.resize(rows);
  R.a_all.resize(static_cast<Eigen::Index>(R.cones.size()), n);
  R.b_all.resize(static_cast<Eigen::Index>(R.cones.size()));
  for (size_t j = 0; j < R.cones.size(); ++j) {
    const Cone& k = R.cones[j];
    R.F_all.middleRows(R.offsets[j], k.F.rows()) = k.F;
    R.g_all.segment(R.offsets[j], k.F.rows()) = k.g;
    R.a_all.row(static_cast<Eigen::Index>(j)) = k.a.transpose();
    R.b_all(static_cast<Eigen::Index>(j)) = k.b;
  }
}

// Hessian assembled as S'S - V'V with S = [G / s; F_k sqrt(2/D_k); gD_k' / D_k]
// and V = [a_k' sqrt(2/D_k)], so one symmetric rank-k update does the work.
void derivatives(const Reduced& R, const Vector& xi, double tau, Vector& grad,
                 Matrix& hess) {
  const Eigen::Index n = R.dim();
  const Eigen::Index mi = R.G.rows();
  const Eigen::Index nc = static_cast<Eigen::Index>(R.cones.size());
  const Eigen::Index fr = R.F_all.rows();
  grad = tau * R.c;
  Matrix S(mi + fr + nc, n);
  Matrix V(nc, n);
  if (mi > 0) {
    const Vector inv = (R.h - R.G * xi).cwiseInverse();
    grad.noalias() += R.G.transpose() * inv;
    S.topRows(mi) = inv.asDiagonal() * R.G;
  }
  if (nc > 0) {
    const Vector u = R.F_all * xi + R.g_all;
    const Vector t = R.a_all * xi + R.b_all;
    Vector wu(fr);   // 2 u / D per cone row
    Vector wt(nc);   // 2 t / D
    Vector root(fr);
    for (Eigen::Index j = 0; j < nc; ++j) {
      const Eigen::Index o = R.offsets[j];
      const Eigen::Index len = R.offsets[j + 1] - o;
      const double un = u.segment(o, len).norm();
      const double D = (t(j) - un) * (t(j) + un);
      wu.segment(o, len) = u.segment(o, len) * (2.0 / D);
      wt(j) = 2.0 * t(j) / D;
      root.segment(o, len).setConstant(std::sqrt(2.0 / D));
      V.row(j) = R.a_all.row(j) * std::sqrt(2.0 / D);
    }
    // gD_k / D_k = 2 t a / D - 2 F'u / D.
    Matrix gd = wt.asDiagonal() * R.a_all;
    for (Eigen::Index j = 0; j < nc; ++j) {
      const Eigen::Index o = R.offsets[j];
      const Eigen::Index len = R.offsets[j + 1] - o;
      gd.row(j).noalias() -= wu.segment(o, len).transpose() * R.F_all.middleRows(o, len);
    }
    grad.noalias() -= gd.colwise().sum().transpose();
    S.middleRows(mi, fr) = root.asDiagonal() * R.F_all;
    S.bottomRows(nc) = gd;
  }
  hess.setZero(n, n);
  hess.selfadjointView<Eigen::Lower>().rankUpdate(S.transpose());
  if (nc > 0) hess.selfadjointView<Eigen::Lower>().rankUpdate(V.transpose(), -1.0);
  hess.triangularView<Eigen::StrictlyUpper>() = hess.transpose();
}

struct PathOutcome {
  Vector xi;
  double tau = 1.0;
  double kkt = 0.0;
  bool unbounded = false;
  bool limit = false;
  bool stopped_early = false;
};

Vector newton_direction(Matrix H, const Vector& grad) {
  const double scale = std::max(1.0, H.diagonal().cwiseAbs().maxCoeff());
  double reg = 1e-14 * scale;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::LLT<Matrix> llt(H + reg * Matrix::Identity(H.rows(), H.cols()));
    if (llt.info() == Eigen::Success) return -llt.solve(grad);
    reg *= 100.0;
  }
  return -(H + reg * Matrix::Identity(H.rows(), H.cols())).ldlt().solve(grad);
}

PathOutcome follow_path(const Reduced& R, Vector xi, const SocpOptions& options,
                        const std::function<bool(const Vector&)>& early_stop,
                        int& steps) {
  PathOutcome out;
  const double nu = std::max(1.0, R.nu());
  double tau = 1.0;
  Vector grad;
  Matrix hess;
  while (true) {
    // Centering.
    int inner = 0;
    for (;;) {
      derivatives(R, xi, tau, grad, hess);
      const Vector dir = newton_direction(hess, grad);
      const double decrement = -grad.dot(dir);
      if (decrement < 1e-8 || !std::isfinite(decrement)) break;
      if (++inner > 100) break;
      if (++steps > options.max_newton_steps) {
        out.xi = xi;
        out.tau = tau;
        out.limit = true;
        return out;
      }
      const double f0 = merit(R, xi, tau);
      double alpha = 1.0;
      // Full step first; the merit is +inf outside the interior, so
      // backtracking also keeps iterates strictly feasible.
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls) {
        const Vector trial = xi + alpha * dir;
        const double f1 = merit(R, trial, tau);
        if (f1 <= f0 - 0.01 * alpha * decrement) {
          moved = (trial - xi).norm() > 1e-15 * (1.0 + xi.norm());
          xi = trial;
          break;
        }
        alpha *= 0.5;
      }
      if (!moved) break;
      if (xi.norm() > 1e10) {
        // Divergence with a flat objective means the barrier has no center.
        out.xi = xi;
        out.tau = tau;
        out.unbounded = R.c.dot(xi) < -1e8;
        out.limit = !out.unbounded;
        return out;
      }
      if (early_stop && early_stop(xi)) {
        out.xi = xi;
        out.tau = tau;
        out.stopped_early = true;
        return out;
      }
    }
    if (nu / tau < options.mu_stop) break;
    tau /= options.mu_factor;
  }
  derivatives(R, xi, tau, grad, hess);
  out.xi = xi;
  out.tau = tau;
  out.kkt = std::max(grad.norm() / tau, nu / tau);
  return out;
}

// Adds sigma to every right-hand side: variables (xi, sigma), minimize sigma,
// sigma >= -1.
Reduced phase_one_problem(const Reduced& R) {
  const int n = R.dim();
  Reduced P;
  const Eigen::Index rows = R.G.rows();
  P.G = Matrix::Zero(rows + 1, n + 1);
  P.h = Vector::Zero(rows + 1);
  if (rows > 0) {
    P.G.topLeftCorner(rows, n) = R.G;
    P.G.col(n).head(rows).setConstant(-1.0);
    P.h.head(rows) = R.h;
  }
  P.G(rows, n) = -1.0;
  P.h(rows) = 1.0;
  for (const Cone& k : R.cones) {
    Cone q;
    q.F = Matrix::Zero(k.F.rows(), n + 1);
    q.F.leftCols(n) = k.F;
    q.g = k.g;
    q.a = Vector::Zero(n + 1);
    q.a.head(n) = k.a;
    q.a(n) = 1.0;
    q.b = k.b;
    P.cones.push_back(std::move(q));
  }
  P.c = Vector::Unit(n + 1, n);
  pack(P);
  return P;
}

void relax(Reduced& R, double eps) {
  R.h.array() += eps;
  for (Cone& k : R.cones) k.b += eps;
  R.b_all.array() += eps;
}

double socp_violation(const SocpProblem& p, const Vector& v) {
  double worst = 0.0;
  for (int j = 0; j < p.num_vars(); ++j) {
    worst = std::max({worst, p.lower(j) - v(j), v(j) - p.upper(j)});
  }
  for (const LinearRow& row : p.rows) {
    const double lhs = row.coeffs.dot(v);
    switch (row.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  for (const ConeRow& k : p.cones) {
    const Vector u = k.F * v + k.g;
    const double lhs = u.size() ? norm_of(u, k.norm) : 0.0;
    worst = std::max(worst, lhs - k.h.dot(v) - k.e);
  }
  return worst;
}

void check_shapes(const SocpProblem& p) {
  const int n = p.num_vars();
  if (p.lower.size() != n || p.upper.size() != n) {
    throw InvalidInput("solve_socp: bounds must match the objective length");
  }
  for (const LinearRow& row : p.rows) {
    if (row.coeffs.size() != n) throw InvalidInput("solve_socp: row length mismatch");
  }
  for (const ConeRow& k : p.cones) {
    if (k.F.cols() != n || k.h.size() != n || k.g.size() != k.F.rows()) {
      throw InvalidInput("solve_socp: cone shape mismatch");
    }
  }
  if (p.start && p.start->size() != n) {
    throw InvalidInput("solve_socp: start has the wrong length");
  }
}

SolveResult solve_l2(const SocpProblem& p, const SocpOptions& options) {
  const int n = p.num_vars();
  const double feas_tol = tolerances().feasibility;
  SolveResult result;
  const double sgn = p.sense == ObjectiveSense::kMinimize ? 1.0 : -1.0;

  // Split rows into inequalities (Gv <= h) and equalities (Ev = f).
  std::vector<std::pair<Vector, double>> ineq;
  std::vector<std::pair<Vector, double>> eq;
  for (const LinearRow& row : p.rows) {
    switch (row.sense) {
      case RowSense::kLessEqual:
        ineq.emplace_back(row.coeffs, row.rhs);
        break;
      case RowSense::kGreaterEqual:
        ineq.emplace_back(-row.coeffs, -row.rhs);
        break;
      case RowSense::kEqual:
        eq.emplace_back(row.coeffs, row.rhs);
        break;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (p.lower(j) > p.upper(j)) {
      result.status = SolveStatus::kInfeasible;
      result.message = "empty variable bounds";
      return result;
    }
    if (p.lower(j) == p.upper(j)) {
      eq.emplace_back(Vector::Unit(n, j), p.lower(j));
      continue;
    }
    if (std::isfinite(p.lower(j))) ineq.emplace_back(-Vector::Unit(n, j), -p.lower(j));
    if (std::isfinite(p.upper(j))) ineq.emplace_back(Vector::Unit(n, j), p.upper(j));
  }
  std::vector<ConeRow> cones;
  for (const ConeRow& k : p.cones) {
    if (k.F.rows() == 0) {
      ineq.emplace_back(-k.h, k.e);
    } else {
      cones.push_back(k);
    }
  }

  // Null space of the equalities.
  Vector v0 = Vector::Zero(n);
  Matrix Z = Matrix::Identity(n, n);
  if (!eq.empty()) {
    const int k = static_cast<int>(eq.size());
    Matrix E(k, n);
    Vector f(k);
    for (int i = 0; i < k; ++i) {
      E.row(i) = eq[i].first.transpose();
      f(i) = eq[i].second;
    }
    Eigen::ColPivHouseholderQR<Matrix> qr_e(E);
    qr_e.setThreshold(1e-11);
    v0 = qr_e.solve(f);
    const double scale = 1.0 + f.cwiseAbs().maxCoeff() + E.cwiseAbs().maxCoeff() * v0.cwiseAbs().maxCoeff();
    if ((E * v0 - f).cwiseAbs().maxCoeff() > 1e-9 * scale) {
      result.status = SolveStatus::kInfeasible;
      result.message = "inconsistent equality rows";
      return result;
    }
    if (p.start && (E * *p.start - f).cwiseAbs().maxCoeff() <= 1e-12 * scale) {
      v0 = *p.start;
    }
    Eigen::ColPivHouseholderQR<Matrix> qr_t(E.transpose());
    qr_t.setThreshold(1e-11);
    const int rank = static_cast<int>(qr_t.rank());
    const Matrix Q = qr_t.householderQ() * Matrix::Identity(n, n);
    Z = Q.rightCols(n - rank);
  }
  const int q = static_cast<int>(Z.cols());

  Reduced R;
  R.c = sgn * (Z.transpose() * p.objective);
  const int mi = static_cast<int>(ineq.size());
  R.G.resize(mi, q);
  R.h.resize(mi);
  for (int i = 0; i < mi; ++i) {
    R.G.row(i) = (Z.transpose() * ineq[i].first).transpose();
    R.h(i) = ineq[i].second - ineq[i].first.dot(v0);
  }
  for (const ConeRow& k : cones) {
    Cone c;
    c.F = k.F * Z;
    c.g = k.F * v0 + k.g;
    c.a = Z.transpose() * k.h;
    c.b = k.h.dot(v0) + k.e;
    R.cones.push_back(std::move(c));
  }
  pack(R);

  auto finish = [&](const Vector& xi, double gap, double kkt) {
    result.primal = v0 + Z * xi;
    result.value = p.objective.dot(result.primal);
    result.duality_gap = gap;
    result.dual_bound = result.value - sgn * gap;
    result.primal_residual = socp_violation(p, result.primal);
    result.kkt_residual = std::max(kkt, result.primal_residual);
  };

  Vector xi = Vector::Zero(q);
  if (p.start) xi = Z.transpose() * (*p.start - v0);
  if (q == 0) {
    result.primal = v0;
    const double viol = socp_violation(p, v0);
    if (viol > feas_tol) {
      result.status = SolveStatus::kInfeasible;
      result.primal_residual = viol;
      result.message = "the equality rows fix a point outside the cones";
      return result;
    }
    result.status = SolveStatus::kOptimal;
    finish(xi, 0.0, 0.0);
    return result;
  }

  int steps = 0;
  if (!(min_slack(R, xi) > 0.0)) {
    const Reduced P = phase_one_problem(R);
    Vector z(q + 1);
    z.head(q) = xi;
    z(q) = std::max(-min_slack(R, xi), -1.0) + 1.0;
    const PathOutcome ph1 = follow_path(
        P, z, options, [q](const Vector& w) { return w(q) < -1e-3; }, steps);
    const double sigma = ph1.xi(q);
    if (ph1.limit) {
      result.status = SolveStatus::kNumericalLimit;
      result.iterations = steps;
      result.message = "phase 1 did not converge";
      return result;
    }
    if (sigma > feas_tol) {
      result.status = SolveStatus::kInfeasible;
      result.primal_residual = sigma;
      result.iterations = steps;
      result.message = "phase 1 optimum is positive";
      return result;
    }
    xi = ph1.xi.head(q);
    // No interior: relax every row by slightly more than the phase 1 optimum.
    if (sigma >= 0.0) relax(R, sigma + 1e-9);
    if (!(min_slack(R, xi) > 0.0)) relax(R, 1e-9 - min_slack(R, xi));
  }

  const PathOutcome ph2 = follow_path(R, xi, options, nullptr, steps);
  result.iterations = steps;
  if (ph2.unbounded) {
    result.status = SolveStatus::kUnbounded;
    result.primal = v0 + Z * ph2.xi;
    result.message = "iterates diverge";
    return result;
  }
  if (ph2.limit) {
    result.status = SolveStatus::kNumericalLimit;
    finish(ph2.xi, R.nu() / ph2.tau, kInf);
    result.message = "Newton step budget exhausted";
    return result;
  }
  result.status = SolveStatus::kOptimal;
  finish(ph2.xi, R.nu() / ph2.tau, ph2.kkt);
  return result;
}

}  // namespace

SocpProblem::SocpProblem(int num_vars)
    : objective(Vector::Zero(num_vars)),
      lower(Vector::Constant(num_vars, -kInf)),
      upper(Vector::Constant(num_vars, kInf)) {}

void SocpProblem::add_row(Vector coeffs, RowSense sense, double rhs) {
  rows.push_back({std::move(coeffs), sense, rhs});
}

SocpProblem linearize_polyhedral_cones(const SocpProblem& problem) {
  check_shapes(problem);
  const int n = problem.num_vars();
  int aux = 0;
  for (const ConeRow& k : problem.cones) {
    if (k.norm == NormKind::kL1 && k.F.rows() > 0) aux += static_cast<int>(k.F.rows());
  }
  const int total = n + aux;
  SocpProblem out(total);
  out.sense = problem.sense;
  out.objective.head(n) = problem.objective;
  out.lower.head(n) = problem.lower;
  out.upper.head(n) = problem.upper;
  auto pad = [total, n](const Vector& v) {
    Vector w = Vector::Zero(total);
    w.head(n) = v;
    return w;
  };
  for (const LinearRow& row : problem.rows) out.add_row(pad(row.coeffs), row.sense, row.rhs);
  if (problem.start) out.start = pad(*problem.start);
  int next = n;
  for (const ConeRow& k : problem.cones) {
    const int rows = static_cast<int>(k.F.rows());
    const Vector h = pad(k.h);
    if (rows == 0) {
      out.add_row(-h, RowSense::kLessEqual, k.e);
      continue;
    }
    if (k.norm == NormKind::kL2) {
      ConeRow c;
      c.F = Matrix::Zero(rows, total);
      c.F.leftCols(n) = k.F;
      c.g = k.g;
      c.h = h;
      c.e = k.e;
      out.cones.push_back(std::move(c));
      continue;
    }
    if (k.norm == NormKind::kLinf) {
      for (int i = 0; i < rows; ++i) {
        const Vector fi = pad(k.F.row(i).transpose());
        out.add_row(fi - h, RowSense::kLessEqual, k.e - k.g(i));
        out.add_row(-fi - h, RowSense::kLessEqual, k.e + k.g(i));
      }
      continue;
    }
    // L1: |u_i| <= w_i, sum w <= h'v + e.
    Vector sum_row = -h;
    for (int i = 0; i < rows; ++i) {
      const int w = next + i;
      Vector fi = pad(k.F.row(i).transpose());
      fi(w) = -1.0;
      out.add_row(fi, RowSense::kLessEqual, -k.g(i));
      Vector gi = -pad(k.F.row(i).transpose());
      gi(w) = -1.0;
      out.add_row(gi, RowSense::kLessEqual, k.g(i));
      sum_row(w) = 1.0;
    }
    out.add_row(sum_row, RowSense::kLessEqual, k.e);
    if (problem.start) {
      const Vector u = k.F * *problem.start + k.g;
      const double rhs = k.h.dot(*problem.start) + k.e;
      const double spread = (rhs - u.lpNorm<1>()) / (2.0 * rows);
      for (int i = 0; i < rows; ++i) (*out.start)(next + i) = std::abs(u(i)) + spread;
    }
    next += rows;
  }
  return out;
}

std::optional<LpProblem> as_lp(const SocpProblem& problem) {
  for (const ConeRow& k : problem.cones) {
    if (k.F.rows() > 0) return std::nullopt;
  }
  LpProblem lp(problem.num_vars());
  lp.sense = problem.sense;
  lp.objective = problem.objective;
  lp.lower = problem.lower;
  lp.upper = problem.upper;
  lp.rows = problem.rows;
  for (const ConeRow& k : problem.cones) lp.add_row(-k.h, RowSense::kLessEqual, k.e);
  return lp;
}

SolveResult solve_socp(const SocpProblem& problem, const SocpOptions& options) {
  check_shapes(problem);
  bool polyhedral = false;
  for (const ConeRow& k : problem.cones) {
    if (k.norm != NormKind::kL2 && k.F.rows() > 0) polyhedral = true;
  }
  if (!polyhedral) return solve_l2(problem, options);
  const SocpProblem lin = linearize_polyhedral_cones(problem);
  SolveResult result = solve_l2(lin, options);
  const int n = problem.num_vars();
  if (result.primal.size() > n) {
    const Vector v = result.primal.head(n);
    result.primal = v;
    result.primal_residual = socp_violation(problem, v);
  }
  return result;
}

}  // namespace socvexify
