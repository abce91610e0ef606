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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "socvexify/core.hpp"
#include "socvexify/envelope.hpp"
#include "socvexify/hull_verify.hpp"
#include "socvexify/json_io.hpp"
#include "socvexify/knapsack.hpp"
#include "socvexify/linalg.hpp"
#include "socvexify/reformulate.hpp"
#include "socvexify/relaxation.hpp"
#include "socvexify/report_io.hpp"
#include "socvexify/solvers.hpp"

using namespace socvexify;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " unexpected exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("criterion %2d %s  %s:%s [%.1f s]\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
              o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

Matrix gaussian(int r, int c, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return Matrix::NullaryExpr(r, c, [&](Eigen::Index, Eigen::Index) { return g(rng); });
}

// Aggregate certificate statistics over suites 1 to 3.
struct CertStats {
  int queries = 0;
  int violations = 0;
  double max_residual = 0.0;
  int worst_support_excess = -1000;  // support size minus (n + 1)
} certs;

struct SuiteStats {
  int sets = 0;
  int points = 0;
  int disagreements = 0;
  int errors = 0;
  int skipped = 0;
  int inside = 0;
};

SuiteStats run_suite(NormKind norm, std::uint64_t seed_base) {
  SuiteStats s;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 4;
    const int m = 1 + (i / 4) % 3;
    const int p = 1 + (i / 12) % 5;
    std::mt19937_64 rng(seed_base + static_cast<std::uint64_t>(i));
    const ConicSet set = random_normalized_set(n, m, p, norm, rng);
    const HullReport rep = verify_hull_equivalence(set, 200, rng);
    ++s.sets;
    s.points += rep.trials;
    s.disagreements += rep.disagreements;
    s.errors += rep.errors;
    s.skipped += rep.skipped;
    for (const HullPoint& pt : rep.points) {
      if (!pt.skipped && pt.error.empty() && pt.hull_status == Membership::kInside) ++s.inside;
    }
    certs.queries += rep.envelope_queries;
    certs.violations += rep.certificate_violations;
    certs.max_residual = std::max(certs.max_residual, rep.max_certificate_residual);
    certs.worst_support_excess = std::max(certs.worst_support_excess, rep.max_support - (n + 1));
  }
  return s;
}

void describe(Outcome& o, const SuiteStats& s) {
  o.detail << " sets " << s.sets << ", points " << s.points << " (hull inside " << s.inside
           << "), skipped in band " << s.skipped << ", disagreements " << s.disagreements
           << ", solver errors " << s.errors;
}

// Independent certificate check: weights on the simplex, reconstruction of the
// query and of the value from the listed points.
double cert_residual(const EnvelopeCertificate& c, const BinaryDomain& dom,
                     const std::vector<double>& f) {
  double wsum = 0.0, value = 0.0;
  Vector q = Vector::Zero(dom.dim);
  double worst = 0.0;
  for (const SupportPoint& s : c.support) {
    worst = std::max(worst, -s.weight);
    wsum += s.weight;
    value += s.weight * f[s.index];
    q += s.weight * dom.point(s.index);
    worst = std::max(worst, (s.point - dom.point(s.index)).cwiseAbs().maxCoeff());
  }
  worst = std::max(worst, std::abs(wsum - 1.0));
  worst = std::max(worst, (q - c.query).cwiseAbs().maxCoeff());
  return std::max(worst, std::abs(value - c.value));
}

}  // namespace

int main() {
  std::printf("socvexify acceptance run\n");

  report(1, "conv(Z) equals the envelope set, L2", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteStats s = run_suite(NormKind::kL2, 1000);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    describe(o, s);
    o.pass = s.disagreements == 0 && s.errors == 0 && s.points == 20000 && secs < 300.0;
  });

  report(2, "conv(Z) equals the envelope set, L1 and LINF via LP", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteStats a = run_suite(NormKind::kL1, 2000);
    const SuiteStats b = run_suite(NormKind::kLinf, 3000);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.detail << " l1:";
    describe(o, a);
    o.detail << "; linf:";
    describe(o, b);
    o.pass = a.disagreements + b.disagreements == 0 && a.errors + b.errors == 0 && secs < 180.0;
  });

  report(3, "Example 1 closed form and naive envelope behaviour", [](Outcome& o) {
    const ConicSet raw = example1_fixture();
    const ConicSet norm = normalize_assumption2(raw).set;
    const std::vector<double> f = rhs_values(norm.f, norm.domain);
    double worst = 0.0;
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const EnvelopeCertificate c = concave_envelope(norm.domain, f, vec({x}));
      worst = std::max(worst, std::abs(c.value - ((1.0 - std::sqrt(2.0)) * x + std::sqrt(2.0))));
      const double res = cert_residual(c, norm.domain, f);
      ++certs.queries;
      certs.max_residual = std::max(certs.max_residual, res);
      certs.worst_support_excess =
          std::max(certs.worst_support_excess, static_cast<int>(c.support.size()) - 2);
      if (res > 1e-6 || c.support.size() > 2) ++certs.violations;
    }
    const Vector x = vec({0.5}), y = vec({1.3});
    const Membership w_raw = membership_W(raw, x, y).status;
    const Membership h_raw = membership_conv_perspective(raw, x, y).status;
    const Membership w_norm = membership_W(norm, x, y).status;
    const Membership h_norm = membership_conv_perspective(norm, x, y).status;
    // Consistency after normalization, at this point and at an interior one.
    const Vector y_in = vec({0.3});
    const Membership w_in = membership_W(norm, x, y_in).status;
    const Membership h_in = membership_conv_perspective(norm, x, y_in).status;
    o.detail << " max |f_hat' - ((1-sqrt2)x + sqrt2)| = " << worst << "; (0.5, 1.3) raw W "
             << membership_name(w_raw) << " / conv(Z) " << membership_name(h_raw)
             << ", normalized W " << membership_name(w_norm) << " / conv(Z) "
             << membership_name(h_norm) << "; (0.5, 0.3) normalized " << membership_name(w_in)
             << " / " << membership_name(h_in);
    o.pass = worst <= 1e-9 && w_raw == Membership::kInside && h_raw == Membership::kOutside &&
             w_norm == h_norm && w_in == Membership::kInside && h_in == Membership::kInside;
  });

  report(4, "envelope certificates from suites 1-3", [](Outcome& o) {
    o.detail << " queries " << certs.queries << ", violations " << certs.violations
             << ", max residual " << certs.max_residual << ", max support - (n+1) = "
             << certs.worst_support_excess;
    o.pass = certs.queries > 0 && certs.violations == 0 && certs.max_residual <= 1e-6 &&
             certs.worst_support_excess <= 0;
  });

  report(5, "sqrt(q_hat) - f_hat gap bound and Bhatia-Davis", [](Outcome& o) {
    const BinaryDomain line = BinaryDomain::full_cube(1);
    std::vector<Vector> quarter;
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) quarter.push_back(vec({x}));
    const Prop1Report two = verify_prop1(line, {1.0, 2.0}, quarter, 1e-6);
    const double expect_gap = std::sqrt(2.5) - 1.5;
    const bool fixture_ok = two.holds && two.argmax == 2 && std::abs(two.max_gap - expect_gap) <= 1e-6 &&
                            std::abs(two.max_gap - 0.08114) <= 1e-5 &&
                            std::abs(two.bound - 1.0 / 12.0) <= 1e-6;
    o.detail << " fixture max gap " << two.max_gap << " at x = " << quarter[two.argmax](0)
             << ", bound " << two.bound;

    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const BinaryDomain cube = BinaryDomain::full_cube(4);
    int violated = 0;
    double worst_ratio = 0.0;
    for (int t = 0; t < 50; ++t) {
      std::vector<double> f(cube.size());
      for (double& v : f) v = 5.0 * u(rng);
      const Prop1Report rep = verify_prop1(cube, f, default_grid(cube, 200, rng), 1e-7);
      if (!rep.holds) ++violated;
      if (rep.bound > 0) worst_ratio = std::max(worst_ratio, rep.max_gap / rep.bound);
    }
    o.detail << "; random cubes violating: " << violated << " of 50 (max gap/bound "
             << worst_ratio << ")";

    std::vector<WeightedSample> samples;
    for (int t = 0; t < 1000; ++t) {
      WeightedSample s;
      const int k = 1 + t % 9;
      double total = 0.0;
      for (int i = 0; i < k; ++i) {
        s.values.push_back(-2.0 + 5.0 * u(rng));
        s.weights.push_back(u(rng) + 1e-3);
        total += s.weights.back();
      }
      for (double& w : s.weights) w /= total;
      samples.push_back(std::move(s));
    }
    const bool bd = bhatia_davis_check(-2.0, 3.0, samples, 1e-12);
    const double sym = bhatia_davis_slack(-2.0, 3.0, WeightedSample{{-2.0, 3.0}, {0.5, 0.5}});
    o.detail << "; Bhatia-Davis on 1000 samples " << (bd ? "holds" : "fails")
             << ", symmetric two-point slack " << sym;
    o.pass = fixture_ok && violated == 0 && bd && sym == 0.0;
  });

  report(6, "quadratic row equals its SOC form", [](Outcome& o) {
    std::mt19937_64 rng(606);
    double worst = 0.0;
    int evals = 0;
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + t % 5;
      const int m = 1 + (t / 5) % 5;
      QuadConstraint q;
      const Matrix S = gaussian(n, n, rng);
      q.Qxx = S + S.transpose();
      q.Qxy = gaussian(n, m, rng);
      const Matrix G = gaussian(m, m, rng);
      q.Qyy = G * G.transpose() + 0.1 * Matrix::Identity(m, m);
      q.ax = gaussian(n, 1, rng).col(0);
      q.ay = gaussian(m, 1, rng).col(0);
      q.g = 1.0 + std::abs(gaussian(1, 1, rng)(0, 0));
      const QuadSocPieces pc = quad_to_soc(q);
      for (int s = 0; s < 100; ++s) {
        const Vector x = gaussian(n, 1, rng).col(0);
        const Vector y = gaussian(m, 1, rng).col(0);
        const double cone = (pc.A * x + pc.B * y + pc.d).squaredNorm();
        const double rhs2 = squared_rhs(pc, x);
        const double quad = quad_lhs(q, x, y);
        const double g = std::get<double>(q.g);
        const double scale = 1.0 + std::abs(quad) + std::abs(g) + cone + std::abs(rhs2);
        worst = std::max(worst, std::abs((cone - rhs2) - (quad - g)) / scale);
        ++evals;
      }
    }
    o.detail << " constraints 100, evaluations " << evals << ", max residual / scale " << worst;
    o.pass = worst <= 1e-8;
  });

  report(7, "chance constraint equals its quadratic form", [](Outcome& o) {
    std::mt19937_64 rng(707);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double tol = tolerances().feasibility;
    int compared = 0, disagree = 0;
    const double alphas[] = {0.005, 0.05, 0.2, 0.5};
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + t % 5;
      const int m = 1 + (t / 5) % 3;
      DrccConstraint dr;
      dr.mux = gaussian(n, 1, rng).col(0).cwiseAbs();
      dr.muy = gaussian(m, 1, rng).col(0).cwiseAbs();
      const Matrix G = 0.3 * gaussian(n + m, n + m, rng);
      const Matrix S = G * G.transpose();
      dr.Sxx = S.topLeftCorner(n, n);
      dr.Sxy = S.topRightCorner(n, m);
      dr.Syy = S.bottomRightCorner(m, m);
      dr.c = 0.5 + 3.0 * u(rng);
      dr.alpha = alphas[t % 4];
      const DrccQuad dq = drcc_to_quad(dr);
      for (int s = 0; s < 1000; ++s) {
        const Vector x = Vector::NullaryExpr(n, [&](Eigen::Index) { return u(rng) < 0.5 ? 0.0 : 1.0; });
        const Vector y = Vector::NullaryExpr(m, [&](Eigen::Index) { return 1.5 * u(rng); });
        const double a = drcc_slack(dr, x, y);
        const double quad = dr.c * dr.c - quad_lhs(dq.quad, x, y);
        const double lin = dq.linear_rhs - dq.linear_x.dot(x) - dq.linear_y.dot(y);
        const double b = std::min(quad, lin);
        if (std::abs(a) < tol || std::abs(b) < tol) continue;
        ++compared;
        if ((a >= 0.0) != (b >= 0.0)) ++disagree;
      }
    }
    std::mt19937_64 r2(1);
    DrccConstraint half;
    half.mux = vec({1.0});
    half.muy = vec({2.0});
    half.Sxx = Matrix::Identity(1, 1);
    half.Sxy = Matrix::Zero(1, 1);
    half.Syy = Matrix::Identity(1, 1);
    half.c = 3.0;
    half.alpha = 0.5;
    const double at = drcc_to_quad(half).alpha_tilde;
    o.detail << " compared " << compared << " of 100000, disagreements " << disagree
             << ", alpha 0.5 gives alpha~ = " << format_double(at);
    o.pass = disagree == 0 && compared > 0 && at == 1.0;
  });

  report(8, "CCP and SOC knapsack formulations agree", [](Outcome& o) {
    const std::vector<KnapsackInstance> tiny = tiny_instances(0);
    double worst = 0.0;
    bool shapes = tiny.size() == 20;
    std::set<int> types;
    for (const KnapsackInstance& inst : tiny) {
      shapes = shapes && inst.n <= 10 && inst.m <= 3;
      types.insert(inst.type);
      const BinaryDomain dom = BinaryDomain::full_cube(inst.n);
      const BruteForceResult a = solve_bruteforce(build_ccp(inst), dom);
      const BruteForceResult b = solve_bruteforce(build_soc(inst), dom);
      if (!a.result.optimal() || !b.result.optimal()) {
        worst = kInf;
        continue;
      }
      worst = std::max(worst, std::abs(a.result.value - b.result.value) /
                                  std::max(1.0, std::abs(a.result.value)));
    }
    const KnapsackInstance toy = toy_instance();
    const BruteForceResult t = solve_bruteforce(build_ccp(toy), BinaryDomain::full_cube(1));
    const bool toy_ok = t.result.optimal() && std::abs(t.result.value - 3.0) <= 1e-6 &&
                        t.result.primal(0) == 1.0 && std::abs(t.result.primal(1)) <= 1e-6;
    std::string soc_toy = "builds";
    try {
      build_soc(toy);
    } catch (const SigmaTildeNotPD&) {
      soc_toy = "rejected (Sigma~yy = 0)";
    }
    o.detail << " 20 tiny instances, types " << types.size() << ", max relative difference "
             << worst << "; toy CCP optimum " << t.result.value << " at (" << t.result.primal(0)
             << ", " << t.result.primal(1) << "), toy SOC " << soc_toy;
    o.pass = shapes && types.size() == 4 && worst <= 1e-5 && toy_ok;
  });

  report(9, "envelope-tightened SOC relaxation dominates CCP relaxation", [](Outcome& o) {
    int checked = 0, violated = 0, violated_indefinite = 0;
    double worst = 0.0;
    for (const KnapsackInstance& inst : tiny_instances(0)) {
      if (inst.n > 12) continue;
      ++checked;
      const SolveResult c = ccp_relaxation_bound(inst);
      const SolveResult s = soc_envelope_relaxation_bound(inst);
      if (!c.optimal() || !s.optimal()) {
        ++violated;
        continue;
      }
      const double excess = s.value - c.value;
      if (excess > 1e-6) {
        ++violated;
        worst = std::max(worst, excess);
        const DrccQuad dq = drcc_to_quad(resource_drcc(inst, 0));
        const int N = inst.n + inst.m;
        Matrix St(N, N);
        St << dq.quad.Qxx, dq.quad.Qxy, dq.quad.Qxy.transpose(), dq.quad.Qyy;
        if (Eigen::SelfAdjointEigenSolver<Matrix>(St).eigenvalues().minCoeff() < 0.0) {
          ++violated_indefinite;
        }
      }
    }
    o.detail << " instances " << checked << ", violations " << violated << " (max excess "
             << worst << "; " << violated_indefinite
             << " of them with indefinite alpha~ Sigma - mu mu')";
    o.pass = checked > 0 && violated == 0;
  });

  report(10, "instance generator conformance", [](Outcome& o) {
    bool rules = true, capacity = true, psd = true;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      for (int index = 1; index <= 5; ++index) {
        for (int type = 1; type <= 4; ++type) {
          const KnapsackInstance inst = generate_kp(12, type, index, seed);
          const auto& p = inst.scale.raw_profits;
          const auto& w = inst.scale.raw_weights[0];
          double sum = 0.0;
          for (size_t j = 0; j < w.size(); ++j) {
            if (type == 3) rules = rules && p[j] == w[j] + 1000.0;
            if (type == 4) rules = rules && w[j] == p[j] + 1000.0;
            sum += w[j];
          }
          capacity = capacity && inst.scale.raw_capacities[0] == sum * index / 6.0;
          try {
            cholesky(inst.resources[0].sigma, 1e-10);
          } catch (const Error&) {
            psd = false;
          }
        }
      }
    }
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "socvexify_acceptance";
    fs::create_directories(dir);
    const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
    write_file_atomic(a, instance_to_json(generate_kp(10, 3, 3, 1)));
    write_file_atomic(b, instance_to_json(generate_kp(10, 3, 3, 1)));
    const bool same = read_file(a) == read_file(b);
    write_file_atomic(b, instance_to_json(generate_mkp(8, 3, 1)));
    write_file_atomic(a, instance_to_json(generate_mkp(8, 3, 1)));
    const bool same_mkp = read_file(a) == read_file(b);
    fs::remove_all(dir);
    o.detail << " type rules " << (rules ? "exact" : "broken") << ", capacity rule "
             << (capacity ? "exact" : "broken") << ", Sigma Cholesky " << (psd ? "ok" : "fails")
             << ", repeat files " << (same && same_mkp ? "byte-identical" : "differ");
    o.pass = rules && capacity && psd && same && same_mkp;
  });

  report(11, "solver unit suite", [](Outcome& o) {
    std::mt19937_64 rng(1111);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst_gap = 0.0;
    int lp_fail = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 9;
      const int rows = 1 + trial % 6;
      LpProblem lp(n);
      Vector x0(n);
      for (int j = 0; j < n; ++j) {
        lp.objective(j) = u(rng);
        lp.upper(j) = 5.0;
        x0(j) = 2.5 + 2.0 * u(rng);
      }
      lp.sense = trial % 2 ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize;
      for (int i = 0; i < rows; ++i) {
        Vector a(n);
        for (int j = 0; j < n; ++j) a(j) = u(rng);
        const RowSense sense = i % 3 == 0   ? RowSense::kEqual
                               : i % 3 == 1 ? RowSense::kLessEqual
                                            : RowSense::kGreaterEqual;
        const double slack = sense == RowSense::kEqual ? 0.0 : sense == RowSense::kLessEqual ? 0.5 : -0.5;
        lp.add_row(a, sense, a.dot(x0) + slack);
      }
      const SolveResult r = solve_lp(lp);
      if (!r.optimal()) {
        ++lp_fail;
        continue;
      }
      worst_gap = std::max(worst_gap, std::abs(r.value - r.dual_bound));
    }

    double worst_socp = 0.0;
    int socp_fail = 0;
    for (int trial = 0; trial < 10; ++trial) {
      SocpProblem p(2);
      p.sense = ObjectiveSense::kMaximize;
      p.objective = vec({u(rng), u(rng)});
      p.lower = vec({-2.0, -2.0});
      p.upper = vec({2.0, 2.0});
      for (int k = 0; k < 2; ++k) {
        Matrix F(2, 2);
        F << u(rng), u(rng), u(rng), u(rng);
        const Vector g = vec({0.3 * u(rng), 0.3 * u(rng)});
        p.cones.push_back({F, g, vec({0.2 * u(rng), 0.2 * u(rng)}), 1.0, NormKind::kL2});
      }
      const SolveResult r = solve_socp(p);
      if (!r.optimal()) {
        ++socp_fail;
        continue;
      }
      // Grid scan of the box, then repeated local scans: a window keeps its
      // size while the best point moves and shrinks once it settles.
      auto scan = [&](const Vector& center, double half, int N, Vector& arg) {
        double best = -kInf;
        for (int i = 0; i <= N; ++i) {
          for (int j = 0; j <= N; ++j) {
            const Vector v = vec({std::clamp(center(0) - half + 2.0 * half * i / N, -2.0, 2.0),
                                  std::clamp(center(1) - half + 2.0 * half * j / N, -2.0, 2.0)});
            bool ok = true;
            for (const ConeRow& c : p.cones) ok = ok && (c.F * v + c.g).norm() <= c.h.dot(v) + c.e;
            const double val = p.objective.dot(v);
            if (ok && val > best) {
              best = val;
              arg = v;
            }
          }
        }
        return best;
      };
      Vector arg(2);
      double fine = scan(Vector::Zero(2), 2.0, 2000, arg);
      int rounds = 0;
      for (double half = 4.0 * 4.0 / 2000.0; half > 1e-8 && rounds < 1000; ++rounds) {
        const Vector before = arg;
        fine = std::max(fine, scan(before, half, 200, arg));
        if ((arg - before).norm() < 0.25 * half) half *= 0.25;
      }
      worst_socp = std::max(worst_socp, std::abs(r.value - fine));
    }

    const KnapsackInstance base = generate_kp(8, 2, 3, 11);
    double previous = -kInf;
    bool monotone = true;
    std::ostringstream values;
    for (int k = 0; k < 10; ++k) {
      KnapsackInstance inst = base;
      inst.resources[0].capacity = base.resources[0].capacity * (0.2 + 0.2 * k);
      const BruteForceResult r = solve_bruteforce(build_ccp(inst), BinaryDomain::full_cube(inst.n));
      if (!r.result.optimal() || r.result.value < previous - 1e-9) monotone = false;
      previous = r.result.value;
    }
    o.detail << " LP: 200 random, failures " << lp_fail << ", max |primal - dual| " << worst_gap
             << "; SOCP: 10 two-variable, failures " << socp_fail << ", max |value - scan| "
             << worst_socp << "; brute force capacity sweep " << (monotone ? "nondecreasing" : "decreases");
    o.pass = lp_fail == 0 && worst_gap <= 1e-7 && socp_fail == 0 && worst_socp <= 1e-4 && monotone;
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
