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


#include "socvexify/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "socvexify/core.hpp"
#include "socvexify/envelope.hpp"
#include "socvexify/hull_verify.hpp"
#include "socvexify/json_io.hpp"
#include "socvexify/knapsack.hpp"
#include "socvexify/model_export.hpp"
#include "socvexify/reformulate.hpp"
#include "socvexify/relaxation.hpp"
#include "socvexify/report_io.hpp"
#include "socvexify/solvers.hpp"

namespace socvexify {
namespace {

// Feasibility tolerance from text; equality keeps its default ratio of 10.
Tolerances tolerances_from(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidInput("tolerance must be positive");
  return Tolerances{tol, 10.0 * tol};
}

Vector parse_query(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  for (std::string cell; std::getline(ss, cell, ',');) {
    try {
      size_t used = 0;
      values.push_back(std::stod(cell, &used));
      if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw InvalidInput("cannot read query entry '" + cell + "'");
    }
  }
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

ConicSet load_set(const std::string& path) { return conic_set_from_json(read_file(path)); }

ModelIR build_model(const KnapsackInstance& inst, const std::string& formulation) {
  return formulation == "soc" ? build_soc(inst) : build_ccp(inst);
}

std::string fmt(double v) { return format_double(v); }

void print_verdict(std::ostream& out, const std::string& label, const MembershipVerdict& v) {
  out << "  " << label << ": " << membership_name(v.status) << " (margin " << fmt(v.margin) << ")\n";
}

void describe_set(std::ostream& out, const ConicSet& set) {
  out << "  n = " << set.n() << ", m = " << set.m() << ", p = " << set.p()
      << ", norm = " << norm_name(set.norm) << "\n";
  const auto row = [&](const char* name, const Matrix& M) {
    out << "  " << name << " = [";
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
      out << (i ? "; " : "");
      for (Eigen::Index j = 0; j < M.cols(); ++j) out << (j ? " " : "") << fmt(M(i, j));
    }
    out << "]\n";
  };
  row("A", set.A);
  row("B", set.B);
  row("d", set.d);
  const std::vector<double> f = rhs_values(set.f, set.domain);
  out << "  f on X =";
  for (double v : f) out << ' ' << fmt(v);
  out << "\n";
  if (set.y_box) {
    out << "  y box: lower";
    for (Eigen::Index i = 0; i < set.m(); ++i) out << ' ' << fmt(set.y_box->lower(i));
    out << ", upper";
    for (Eigen::Index i = 0; i < set.m(); ++i) out << ' ' << fmt(set.y_box->upper(i));
    out << "\n";
  }
}

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

int example_one(std::ostream& out) {
  const ConicSet raw = example1_fixture();
  out << "Example 1\n";
  describe_set(out, raw);
  const NormalizeResult norm = normalize_assumption2(raw);
  const std::vector<double> f = rhs_values(norm.set.f, norm.set.domain);
  const double b = concave_envelope(norm.set.domain, f, vec({0.0})).value;
  const double a = concave_envelope(norm.set.domain, f, vec({1.0})).value - b;
  out << "normalized f' on X = " << fmt(f[0]) << ' ' << fmt(f[1]) << "\n";
  out << "f_hat'(x) = a x + b with a = " << fmt(a) << ", b = " << fmt(b) << "\n";
  out << "coefficients: " << fmt(a) << ' ' << fmt(b) << "\n";
  for (const auto& [x, y] : {std::pair{0.5, 0.3}, {0.5, 1.0}, {0.5, 1.3}}) {
    out << "point x = " << fmt(x) << ", y = " << fmt(y) << "\n";
    print_verdict(out, "W (unnormalized)", membership_W(raw, vec({x}), vec({y})));
    print_verdict(out, "W (normalized)", membership_W(norm.set, vec({x}), vec({y})));
    print_verdict(out, "conv(Z)", membership_conv_perspective(raw, vec({x}), vec({y})));
  }
  return kExitOk;
}

int example_two(std::ostream& out) {
  const ConicSet set = example2_fixture();
  out << "Example 2\n";
  describe_set(out, set);
  const CharacterizationCheck check = characterization_applies(set);
  out << "characterization applies: " << (check.applies ? "yes" : "no") << "\n";
  for (const std::string& r : check.reasons) out << "  reason: " << r << "\n";
  const std::vector<std::pair<double, Vector>> points = {
      {0.0, vec({0.2, 1.0})}, {0.5, vec({0.0, 0.5})}};
  for (const auto& [x, y] : points) {
    out << "point x = " << fmt(x) << ", y = (" << fmt(y(0)) << ", " << fmt(y(1)) << ")\n";
    print_verdict(out, "W", membership_W(set, vec({x}), y));
    print_verdict(out, "conv(Z)", membership_conv_perspective(set, vec({x}), y));
  }
  // Count grid points W accepts while the hull rejects them.
  int w_only = 0, total = 0;
  std::optional<std::pair<Vector, Vector>> first;
  for (int i = 1; i <= 6; ++i) {
    for (int a = 0; a <= 15; ++a) {
      for (int c = 0; c <= 15; ++c) {
        const Vector x = vec({0.05 * i});
        const Vector y = vec({0.1 * a, 0.1 * c});
        const Membership w = membership_W(set, x, y).status;
        const Membership h = membership_conv_perspective(set, x, y).status;
        ++total;
        if (w == Membership::kInside && h == Membership::kOutside) {
          if (!first) first.emplace(x, y);
          ++w_only;
        }
      }
    }
  }
  out << "grid x in {0.05..0.3}, y in [0,1.5]^2: W inside but hull outside at " << w_only
      << " of " << total << " points\n";
  if (first) {
    const auto& [x, y] = *first;
    out << "first such point x = " << fmt(x(0)) << ", y = (" << fmt(y(0)) << ", " << fmt(y(1))
        << ")\n";
    print_verdict(out, "W", membership_W(set, x, y));
    print_verdict(out, "conv(Z)", membership_conv_perspective(set, x, y));
  }
  return kExitOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex hulls of conic sets over binary domains and knapsack models"};
  app.require_subcommand(1);
  double tol = 0.0;
  app.add_option("--tol", tol, "Feasibility tolerance (equality uses 10x)");

  std::function<int()> run;
  std::string in, out_path, set_path, report, formulation = "ccp", query, lp_text, method = "brute";
  int type = 1, n = 10, index = 3, resources = 1, trials = 50, m = 2, p = 3, grid = 200, id = 1;
  std::uint64_t seed = 0;
  std::string norm = "l2";

  auto* gen_kp = app.add_subcommand("gen-kp", "Generate a single-resource knapsack instance");
  gen_kp->add_option("--type", type, "Correlation type 1..4")->required();
  gen_kp->add_option("--n", n, "Total items (binary plus continuous)")->required();
  gen_kp->add_option("--index", index, "Capacity index 1..5")->capture_default_str();
  gen_kp->add_option("--seed", seed)->capture_default_str();
  gen_kp->add_option("--out", out_path)->required();
  gen_kp->callback([&] {
    run = [&] {
      write_file_atomic(out_path, instance_to_json(generate_kp(n, type, index, seed)));
      return kExitOk;
    };
  });

  auto* gen_mkp = app.add_subcommand("gen-mkp", "Generate a multi-resource knapsack instance");
  gen_mkp->add_option("--n", n, "Binary items")->required();
  gen_mkp->add_option("--resources", resources)->required();
  gen_mkp->add_option("--seed", seed)->capture_default_str();
  gen_mkp->add_option("--out", out_path)->required();
  gen_mkp->callback([&] {
    run = [&] {
      write_file_atomic(out_path, instance_to_json(generate_mkp(n, resources, seed)));
      return kExitOk;
    };
  });

  auto* build = app.add_subcommand("build", "Build the CCP or SOC model of an instance");
  build->add_option("--formulation", formulation)->check(CLI::IsMember({"ccp", "soc"}))->required();
  build->add_option("--in", in)->required();
  build->add_option("--out", out_path)->required();
  build->add_option("--lp-text", lp_text, "Also write the model in LP format");
  build->callback([&] {
    run = [&] {
      const ModelIR model = build_model(instance_from_json(read_file(in)), formulation);
      const std::string json = export_model(model, ExportFormat::kJson);
      std::string lp;
      if (!lp_text.empty()) lp = export_model(model, ExportFormat::kLpText);
      write_file_atomic(out_path, json);
      if (!lp_text.empty()) write_file_atomic(lp_text, lp);
      return kExitOk;
    };
  });

  auto* solve = app.add_subcommand("solve", "Solve an instance by enumeration");
  solve->add_option("--in", in)->required();
  solve->add_option("--formulation", formulation)->check(CLI::IsMember({"ccp", "soc"}))->required();
  solve->add_option("--method", method)->check(CLI::IsMember({"brute"}))->capture_default_str();
  solve->add_option("--out", out_path)->required();
  solve->callback([&] {
    run = [&] {
      const KnapsackInstance inst = instance_from_json(read_file(in));
      if (inst.n > kMaxDomainDim) {
        throw InvalidInput("enumeration supports at most 20 binary items");
      }
      const ModelIR model = build_model(inst, formulation);
      const BruteForceResult res = solve_bruteforce(model, BinaryDomain::full_cube(inst.n));
      write_file_atomic(out_path, solve_result_to_json(res.result, model, &res));
      out << status_name(res.result.status) << ' ' << fmt(res.result.value) << "\n";
      return res.result.status == SolveStatus::kNumericalLimit ? kExitNumericalLimit : kExitOk;
    };
  });

  auto* normalize = app.add_subcommand("normalize", "Project [A d] onto the column space of B");
  normalize->add_option("--set", set_path)->required();
  normalize->add_option("--out", out_path)->required();
  normalize->callback([&] {
    run = [&] {
      const NormalizeResult res = normalize_assumption2(load_set(set_path));
      write_file_atomic(out_path, conic_set_to_json(res.set));
      out << "residual before " << fmt(res.report.residual_before) << ", after "
          << fmt(res.report.residual_after) << ", dropped " << res.report.dropped.size()
          << " point(s)\n";
      return kExitOk;
    };
  });

  auto* envelope = app.add_subcommand("envelope", "Concave envelope of f at a query point");
  envelope->add_option("--set", set_path)->required();
  envelope->add_option("--query", query, "Comma separated coordinates")->required();
  envelope->callback([&] {
    run = [&] {
      const ConicSet set = load_set(set_path);
      const Vector q = parse_query(query);
      if (q.size() != set.n()) throw InvalidInput("query has the wrong dimension");
      out << certificate_to_json(concave_envelope(set.domain, rhs_values(set.f, set.domain), q))
          << "\n";
      return kExitOk;
    };
  });

  auto* verify = app.add_subcommand("verify-hull", "Compare the envelope set with conv(Z)");
  verify->add_option("--trials", trials)->capture_default_str();
  verify->add_option("--n", n)->capture_default_str();
  verify->add_option("--m", m)->capture_default_str();
  verify->add_option("--p", p)->capture_default_str();
  verify->add_option("--norm", norm)->check(CLI::IsMember({"l1", "l2", "linf"}))->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--set", set_path, "Use this set instead of a random normalized one");
  verify->add_option("--report", report, "CSV report path");
  verify->callback([&] {
    run = [&] {
      if (trials < 0) throw InvalidInput("trials must be nonnegative");
      std::mt19937_64 rng(seed);
      const ConicSet set = set_path.empty()
                               ? random_normalized_set(n, m, p, parse_norm(norm), rng)
                               : load_set(set_path);
      const HullReport rep = verify_hull_equivalence(set, trials, rng);
      if (!report.empty()) write_file_atomic(report, hull_report_csv(rep));
      out << "trials " << rep.trials << ", agreements " << rep.agreements << ", disagreements "
          << rep.disagreements << ", skipped " << rep.skipped << ", errors " << rep.errors
          << ", certificate violations " << rep.certificate_violations << "\n";
      if (rep.disagreements > 0 || rep.certificate_violations > 0) return kExitVerificationFailed;
      return rep.errors > 0 ? kExitNumericalLimit : kExitOk;
    };
  });

  auto* gap = app.add_subcommand("gap-check", "Check the sqrt(q_hat) - f_hat gap bound");
  gap->add_option("--set", set_path)->required();
  gap->add_option("--grid", grid, "Random interior samples")->capture_default_str();
  gap->add_option("--seed", seed)->capture_default_str();
  gap->add_option("--report", report, "CSV report path");
  gap->callback([&] {
    run = [&] {
      if (grid < 0) throw InvalidInput("grid must be nonnegative");
      const ConicSet set = load_set(set_path);
      std::mt19937_64 rng(seed);
      const std::vector<Vector> pts = default_grid(set.domain, grid, rng);
      const Prop1Report rep =
          verify_prop1(set.domain, rhs_values(set.f, set.domain), pts, tolerances().equality);
      if (!report.empty()) {
        std::vector<std::string> header;
        for (int i = 0; i < set.n(); ++i) header.push_back("x" + std::to_string(i + 1));
        for (const char* h : {"f_hat", "sqrt_q_hat", "gap", "bound"}) header.push_back(h);
        std::string csv = csv_row(header);
        for (const Prop1Row& r : rep.rows) {
          std::vector<std::string> cells;
          for (Eigen::Index i = 0; i < r.x.size(); ++i) cells.push_back(fmt(r.x(i)));
          for (double v : {r.f_hat, r.sqrt_q_hat, r.gap, rep.bound}) cells.push_back(fmt(v));
          csv += csv_row(cells);
        }
        write_file_atomic(report, csv);
      }
      out << "L " << fmt(rep.L) << ", U " << fmt(rep.U) << ", bound " << fmt(rep.bound)
          << ", max gap " << fmt(rep.max_gap) << ", min gap " << fmt(rep.min_gap) << ", "
          << (rep.holds ? "holds" : "VIOLATED") << "\n";
      return rep.holds ? kExitOk : kExitVerificationFailed;
    };
  });

  auto* example = app.add_subcommand("example", "Print a worked example and its verdicts");
  example->add_option("--id", id)->check(CLI::IsMember({1, 2}))->required();
  example->callback([&] { run = [&] { return id == 1 ? example_one(out) : example_two(out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return kExitOk;
    err << app.help();
    return kExitInputError;
  }

  std::optional<ScopedTolerances> scoped;
  try {
    if (app.count("--tol") > 0) {
      scoped.emplace(tolerances_from(tol));
    } else if (const char* env = std::getenv("SOCVEXIFY_TOL"); env && *env) {
      double v = 0.0;
      try {
        v = std::stod(env);
      } catch (const std::exception&) {
        throw InvalidInput(std::string("SOCVEXIFY_TOL is not a number: ") + env);
      }
      scoped.emplace(tolerances_from(v));
    }
    return run();
  } catch (const NumericalLimit& e) {
    err << "numerical limit: " << e.what() << "\n";
    return kExitNumericalLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace socvexify
