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


#include "socvexify/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "socvexify/linalg.hpp"

namespace socvexify {
namespace {

// Uniform integer in [lo, hi] by rejection, so a seed gives the same draws on
// every standard library.
long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<long long>(draw % range);
}

std::mt19937_64 seeded(std::initializer_list<std::uint64_t> parts) {
  std::vector<std::uint32_t> words;
  for (std::uint64_t p : parts) {
    words.push_back(static_cast<std::uint32_t>(p));
    words.push_back(static_cast<std::uint32_t>(p >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

Matrix covariance(const Vector& w, std::mt19937_64& rng) {
  const Matrix U = random_orthogonal(static_cast<int>(w.size()), rng);
  const Matrix D = w.cwiseAbs2().asDiagonal();
  Matrix S = U.transpose() * D * U / 4.0;
  return 0.5 * (S + S.transpose());
}

std::string var_name(char prefix, int i) { return std::string(1, prefix) + std::to_string(i + 1); }

void add_quadratic_terms(const Matrix& M, int offset, double sign, std::vector<QuadTerm>& out) {
  for (int i = 0; i < M.rows(); ++i) {
    if (M(i, i) != 0.0) out.push_back({offset + i, offset + i, sign * M(i, i)});
    for (int j = i + 1; j < M.cols(); ++j) {
      const double v = M(i, j) + M(j, i);
      if (v != 0.0) out.push_back({offset + i, offset + j, sign * v});
    }
  }
}

// Declares x then y and sets the objective.
ModelIR base_model(const KnapsackInstance& inst, const std::string& name) {
  ModelIR model;
  model.name = name;
  for (int i = 0; i < inst.n; ++i) model.add_variable(var_name('x', i), 0.0, 1.0, true);
  for (int i = 0; i < inst.m; ++i) model.add_variable(var_name('y', i), 0.0, 1.0);
  model.objective.sense = ObjectiveSense::kMaximize;
  for (int i = 0; i < inst.n; ++i) model.objective.terms.push_back({i, inst.px(i)});
  for (int i = 0; i < inst.m; ++i) model.objective.terms.push_back({inst.n + i, inst.py(i)});
  return model;
}

LinearConstraint mean_row(const KnapsackInstance& inst, int j) {
  const KnapsackResource& r = inst.resources[j];
  LinearConstraint row;
  row.name = "mean_" + std::to_string(j + 1);
  for (int i = 0; i < inst.n + inst.m; ++i) {
    if (r.mu(i) != 0.0) row.terms.push_back({i, r.mu(i)});
  }
  row.sense = RowSense::kLessEqual;
  row.rhs = r.capacity;
  return row;
}

QuadSocPieces soc_pieces(const KnapsackInstance& inst, int j) {
  const DrccQuad dq = drcc_to_quad(resource_drcc(inst, j));
  if (!dq.sigma_yy_pd) {
    std::ostringstream msg;
    msg << "resource " << j + 1
        << ": alpha~ Sigma_yy - mu_y mu_y' is not positive definite; lower alpha";
    throw SigmaTildeNotPD(j, msg.str());
  }
  return quad_to_soc(dq.quad);
}

Vector profits(const KnapsackInstance& inst) {
  Vector p(inst.n + inst.m);
  p << inst.px, inst.py;
  return p;
}

}  // namespace

bool KnapsackResource::operator==(const KnapsackResource& other) const {
  return identical(mu, other.mu) && identical(sigma, other.sigma) && capacity == other.capacity;
}

bool KnapsackInstance::operator==(const KnapsackInstance& other) const {
  return n == other.n && m == other.m && identical(px, other.px) && identical(py, other.py) &&
         resources == other.resources && alpha == other.alpha && type == other.type &&
         seed == other.seed && index == other.index && scale == other.scale &&
         synthetic_base == other.synthetic_base;
}

std::vector<std::string> validate(const KnapsackInstance& inst) {
  std::vector<std::string> issues;
  const int N = inst.n + inst.m;
  if (inst.n < 0 || inst.m < 0) issues.push_back("item counts must be nonnegative");
  if (inst.px.size() != inst.n || inst.py.size() != inst.m) {
    issues.push_back("profit vectors do not match the item counts");
  } else if ((inst.px.size() && inst.px.minCoeff() < 0.0) ||
             (inst.py.size() && inst.py.minCoeff() < 0.0)) {
    issues.push_back("profits must be nonnegative");
  }
  if (!(inst.alpha > 0.0 && inst.alpha < 1.0)) issues.push_back("alpha must lie in (0, 1)");
  if (inst.resources.empty()) issues.push_back("at least one resource is required");
  for (size_t j = 0; j < inst.resources.size(); ++j) {
    const KnapsackResource& r = inst.resources[j];
    const std::string tag = "resource " + std::to_string(j + 1) + ": ";
    if (r.mu.size() != N || r.sigma.rows() != N || r.sigma.cols() != N) {
      issues.push_back(tag + "mu / sigma dimensions do not match the items");
      continue;
    }
    if (!(r.capacity >= 0.0)) issues.push_back(tag + "capacity must be nonnegative");
    if (N == 0) continue;
    const double scale = std::max(1.0, r.sigma.cwiseAbs().maxCoeff());
    if ((r.sigma - r.sigma.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale) {
      issues.push_back(tag + "sigma is not symmetric");
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (r.sigma + r.sigma.transpose()),
                                              Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-8 * scale) {
      issues.push_back(tag + "sigma is not positive semidefinite");
    }
  }
  return issues;
}

KnapsackInstance generate_kp(int n_total, int type, int index, std::uint64_t seed) {
  if (type < 1 || type > 4) throw InvalidType("instance type must be 1, 2, 3 or 4");
  if (n_total < 2 || n_total % 2 != 0) throw InvalidInput("n_total must be even and >= 2");
  if (index < 1 || index > 5) throw InvalidInput("instance index must lie in 1..5");
  std::mt19937_64 rng = seeded({seed, static_cast<std::uint64_t>(type),
                                static_cast<std::uint64_t>(index),
                                static_cast<std::uint64_t>(n_total)});
  const int N = n_total;
  std::vector<double> w(N);
  std::vector<double> p(N);
  for (int j = 0; j < N; ++j) {
    switch (type) {
      case 1:
        w[j] = static_cast<double>(uniform_int(rng, 1, 10000));
        p[j] = static_cast<double>(uniform_int(rng, 1, 10000));
        break;
      case 2:
        w[j] = static_cast<double>(uniform_int(rng, 1, 10000));
        p[j] = std::max(w[j] + static_cast<double>(uniform_int(rng, -1000, 1000)), 1.0);
        break;
      case 3:
        w[j] = static_cast<double>(uniform_int(rng, 1, 10000));
        p[j] = w[j] + 1000.0;
        break;
      default:
        p[j] = static_cast<double>(uniform_int(rng, 1, 10000));
        w[j] = p[j] + 1000.0;
        break;
    }
  }
  double wsum = 0.0;
  for (double v : w) wsum += v;
  const double raw_capacity = wsum * index / 6.0;

  KnapsackInstance inst;
  inst.n = N / 2;
  inst.m = N - inst.n;
  inst.type = type;
  inst.seed = seed;
  inst.index = index;
  inst.scale.weight_divisor = 1000.0;
  inst.scale.capacity_divisor = 1000.0;
  inst.scale.continuous_profit_divisor = 5.0;
  inst.scale.capacity_multiplier = 1.5;
  inst.scale.raw_profits = p;
  inst.scale.raw_weights = {w};
  inst.scale.raw_capacities = {raw_capacity};

  Vector wv(N);
  for (int j = 0; j < N; ++j) wv(j) = w[j] / 1000.0;
  const double capacity = raw_capacity / 1000.0;
  inst.px.resize(inst.n);
  inst.py.resize(inst.m);
  for (int j = 0; j < inst.n; ++j) inst.px(j) = p[j];
  for (int j = 0; j < inst.m; ++j) inst.py(j) = p[inst.n + j] / 5.0;
  KnapsackResource r;
  r.mu = wv;
  r.sigma = covariance(wv, rng);
  r.capacity = capacity * 1.5;
  inst.resources.push_back(std::move(r));
  return inst;
}

KnapsackInstance generate_mkp(int n, int num_resources, std::uint64_t seed) {
  if (n < 2) throw InvalidInput("generate_mkp needs n >= 2");
  if (num_resources < 1) throw InvalidInput("generate_mkp needs at least one resource");
  std::mt19937_64 rng = seeded({seed, static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(num_resources), 0x6d6b70ULL});
  const int m = (n + 1) / 2;
  const int N = n + m;
  KnapsackInstance inst;
  inst.n = n;
  inst.m = m;
  inst.synthetic_base = true;
  inst.seed = seed;
  inst.scale.weight_divisor = 100.0;
  inst.scale.capacity_divisor = 10.0;

  // Synthetic base: discrete profits and weights, capacity half the weight.
  std::vector<double> p(N);
  for (int j = 0; j < n; ++j) p[j] = static_cast<double>(uniform_int(rng, 1, 10000));
  std::vector<std::vector<double>> w(num_resources, std::vector<double>(N));
  std::vector<double> caps(num_resources);
  for (int r = 0; r < num_resources; ++r) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      w[r][j] = static_cast<double>(uniform_int(rng, 1, 10000));
      sum += w[r][j];
    }
    caps[r] = sum / 2.0;
  }
  // Continuous items.
  const double pmax = *std::max_element(p.begin(), p.begin() + n);
  const long long phi = std::max(1LL, static_cast<long long>(std::floor(pmax / 10.0)));
  for (int r = 0; r < num_resources; ++r) {
    const auto [lo_it, hi_it] = std::minmax_element(w[r].begin(), w[r].begin() + n);
    const long long lo = static_cast<long long>(std::ceil(*lo_it / 2.0));
    const long long hi = static_cast<long long>(*hi_it);
    for (int j = n; j < N; ++j) w[r][j] = static_cast<double>(uniform_int(rng, lo, hi));
  }
  for (int j = n; j < N; ++j) p[j] = static_cast<double>(uniform_int(rng, 1, phi));

  inst.scale.raw_profits = p;
  inst.scale.raw_weights = w;
  inst.scale.raw_capacities = caps;
  inst.px.resize(n);
  inst.py.resize(m);
  for (int j = 0; j < n; ++j) inst.px(j) = p[j];
  for (int j = 0; j < m; ++j) inst.py(j) = p[n + j];
  for (int r = 0; r < num_resources; ++r) {
    Vector wv(N);
    for (int j = 0; j < N; ++j) wv(j) = w[r][j] / 100.0;
    KnapsackResource res;
    res.mu = wv;
    res.sigma = covariance(wv, rng);
    res.capacity = caps[r] / 10.0;
    inst.resources.push_back(std::move(res));
  }
  return inst;
}

DrccConstraint resource_drcc(const KnapsackInstance& inst, int j) {
  if (j < 0 || j >= static_cast<int>(inst.resources.size())) {
    throw InvalidInput("resource index out of range");
  }
  const KnapsackResource& r = inst.resources[j];
  const int n = inst.n;
  const int m = inst.m;
  DrccConstraint dr;
  dr.mux = r.mu.head(n);
  dr.muy = r.mu.tail(m);
  dr.Sxx = r.sigma.topLeftCorner(n, n);
  dr.Sxy = r.sigma.topRightCorner(n, m);
  dr.Syy = r.sigma.bottomRightCorner(m, m);
  dr.c = r.capacity;
  dr.alpha = inst.alpha;
  return dr;
}

ModelIR build_ccp(const KnapsackInstance& inst) {
  if (const auto issues = validate(inst); !issues.empty()) {
    throw InvalidInput("invalid instance: " + issues.front());
  }
  ModelIR model = base_model(inst, "ccp");
  const int n = inst.n;
  const int m = inst.m;
  for (int j = 0; j < static_cast<int>(inst.resources.size()); ++j) {
    const DrccQuad dq = drcc_to_quad(resource_drcc(inst, j));
    Matrix S(n + m, n + m);
    S << dq.quad.Qxx, dq.quad.Qxy, dq.quad.Qxy.transpose(), dq.quad.Qyy;
    QuadraticConstraint row;
    row.name = "drcc_" + std::to_string(j + 1);
    add_quadratic_terms(S, 0, 1.0, row.quad);
    for (int i = 0; i < n; ++i) {
      if (dq.quad.ax(i) != 0.0) row.linear.push_back({i, dq.quad.ax(i)});
    }
    for (int i = 0; i < m; ++i) {
      if (dq.quad.ay(i) != 0.0) row.linear.push_back({n + i, dq.quad.ay(i)});
    }
    row.rhs = std::get<double>(dq.quad.g);
    model.quadratic.push_back(std::move(row));
    model.linear.push_back(mean_row(inst, j));
  }
  return model;
}

ModelIR build_soc(const KnapsackInstance& inst) {
  if (const auto issues = validate(inst); !issues.empty()) {
    throw InvalidInput("invalid instance: " + issues.front());
  }
  ModelIR model = base_model(inst, "soc");
  const int n = inst.n;
  const int m = inst.m;
  for (int j = 0; j < static_cast<int>(inst.resources.size()); ++j) {
    const QuadSocPieces pc = soc_pieces(inst, j);
    const auto& q = std::get<SqrtQuadraticRhs>(pc.f);
    const std::string tag = std::to_string(j + 1);
    const int eta = model.add_variable("eta_" + tag, 0.0, kInf);
    const int tau = model.add_variable("tau_" + tag, 0.0, kInf);

    SocConstraint soc;
    soc.name = "soc_" + tag;
    for (int r = 0; r < pc.B.rows(); ++r) {
      AffineExpr e;
      for (int i = 0; i < n; ++i) {
        if (pc.A(r, i) != 0.0) e.terms.push_back({i, pc.A(r, i)});
      }
      for (int i = 0; i < m; ++i) {
        if (pc.B(r, i) != 0.0) e.terms.push_back({n + i, pc.B(r, i)});
      }
      e.constant = pc.d(r);
      soc.entries.push_back(std::move(e));
    }
    soc.bound.terms.push_back({eta, 1.0});
    model.soc.push_back(std::move(soc));
    model.rotated.push_back({"rot_" + tag, eta, tau});

    // tau - x'Px - r'x <= s
    QuadraticConstraint hyp;
    hyp.name = "hyp_" + tag;
    add_quadratic_terms(q.P, 0, -1.0, hyp.quad);
    hyp.linear.push_back({tau, 1.0});
    for (int i = 0; i < n; ++i) {
      if (q.r(i) != 0.0) hyp.linear.push_back({i, -q.r(i)});
    }
    hyp.rhs = q.s;
    model.quadratic.push_back(std::move(hyp));
    model.linear.push_back(mean_row(inst, j));
  }
  return model;
}

KnapsackInstance toy_instance() {
  KnapsackInstance inst;
  inst.n = 1;
  inst.m = 1;
  inst.px = Vector::Constant(1, 3.0);
  inst.py = Vector::Constant(1, 1.0);
  inst.alpha = 0.5;
  KnapsackResource r;
  r.mu = Vector::Ones(2);
  r.sigma = Matrix::Identity(2, 2);
  r.capacity = 2.0;
  inst.resources.push_back(r);
  return inst;
}

SolveResult ccp_relaxation_bound(const KnapsackInstance& inst) {
  if (const auto issues = validate(inst); !issues.empty()) {
    throw InvalidInput("invalid instance: " + issues.front());
  }
  const int N = inst.n + inst.m;
  SocpProblem prob(N);
  prob.sense = ObjectiveSense::kMaximize;
  prob.objective = profits(inst);
  prob.lower.setZero();
  prob.upper.setOnes();
  const double at = (1.0 - inst.alpha) / inst.alpha;
  for (const KnapsackResource& r : inst.resources) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(r.sigma);
    ConeRow cone;
    cone.F = std::sqrt(at) * eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
             eig.eigenvectors().transpose();
    cone.g = Vector::Zero(N);
    cone.h = -r.mu;
    cone.e = r.capacity;
    prob.cones.push_back(std::move(cone));
  }
  return solve_socp(prob);
}

SolveResult soc_envelope_relaxation_bound(const KnapsackInstance& inst) {
  if (const auto issues = validate(inst); !issues.empty()) {
    throw InvalidInput("invalid instance: " + issues.front());
  }
  if (inst.n > 12) throw InvalidInput("the envelope relaxation enumerates {0,1}^n; n <= 12");
  const int n = inst.n;
  const int N = n + inst.m;
  const BinaryDomain cube = n > 0 ? BinaryDomain::full_cube(n) : BinaryDomain{0, Matrix(0, 1)};
  const int K = cube.size();
  const int R = static_cast<int>(inst.resources.size());
  const int nv = N + R * K;
  SocpProblem prob(nv);
  prob.sense = ObjectiveSense::kMaximize;
  prob.objective.head(N) = profits(inst);
  prob.lower.setZero();
  prob.upper.head(N).setOnes();
  for (int j = 0; j < R; ++j) {
    const QuadSocPieces pc = soc_pieces(inst, j);
    const auto& q = std::get<SqrtQuadraticRhs>(pc.f);
    const int off = N + j * K;
    Vector sum = Vector::Zero(nv);
    sum.segment(off, K).setOnes();
    prob.add_row(sum, RowSense::kEqual, 1.0);
    for (int i = 0; i < n; ++i) {
      Vector row = Vector::Zero(nv);
      row.segment(off, K) = cube.points.row(i).transpose();
      row(i) = -1.0;
      prob.add_row(row, RowSense::kEqual, 0.0);
    }
    // ||v||^2 <= tau  <=>  ||(2v, tau - 1)|| <= tau + 1, tau = sum_k l_k q(x^k).
    Vector qk(K);
    for (int k = 0; k < K; ++k) qk(k) = radicand(q, cube.point(k));
    const int p = static_cast<int>(pc.B.rows());
    ConeRow cone;
    cone.F = Matrix::Zero(p + 1, nv);
    cone.F.block(0, 0, p, n) = 2.0 * pc.A;
    cone.F.block(0, n, p, inst.m) = 2.0 * pc.B;
    cone.F.row(p).segment(off, K) = qk.transpose();
    cone.g = Vector(p + 1);
    cone.g << 2.0 * pc.d, -1.0;
    cone.h = Vector::Zero(nv);
    cone.h.segment(off, K) = qk;
    cone.e = 1.0;
    prob.cones.push_back(std::move(cone));
    const KnapsackResource& r = inst.resources[j];
    Vector lin = Vector::Zero(nv);
    lin.head(N) = r.mu;
    prob.add_row(lin, RowSense::kLessEqual, r.capacity);
  }
  return solve_socp(prob);
}

std::vector<KnapsackInstance> tiny_instances(std::uint64_t seed) {
  std::vector<KnapsackInstance> out;
  for (int type = 1; type <= 4; ++type) {
    for (int i = 1; i <= 5; ++i) {
      // The SOC lifting needs alpha~ Sigma_yy - mu_y mu_y' > 0; move to the next
      // seed when a draw violates it.
      for (std::uint64_t s = seed;; ++s) {
        KnapsackInstance inst = generate_kp(2 + 2 * ((type + i) % 3), type, i, s);
        if (drcc_to_quad(resource_drcc(inst, 0)).sigma_yy_pd) {
          out.push_back(std::move(inst));
          break;
        }
        if (s - seed > 1000) throw NumericalLimit("no admissible tiny instance found");
      }
    }
  }
  return out;
}

}  // namespace socvexify
