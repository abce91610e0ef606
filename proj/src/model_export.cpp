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


#include "socvexify/model_export.hpp"

#include <cmath>
#include <map>
#include <regex>
#include <sstream>
#include <utility>

#include "socvexify/json_io.hpp"
#include "socvexify/report_io.hpp"

namespace socvexify {
namespace {

bool valid_name(const std::string& name) {
  static const std::regex pattern("[A-Za-z_][A-Za-z0-9_.]{0,254}");
  return std::regex_match(name, pattern);
}

class LpWriter {
 public:
  explicit LpWriter(const ModelIR& model) : model_(model) {
    for (const ModelVariable& v : model.variables) {
      if (!valid_name(v.name)) {
        throw UnrepresentableConstraint("variable name '" + v.name + "' is not valid in LP text");
      }
    }
  }

  std::string render() {
    out_ << "\\ " << (model_.name.empty() ? "model" : model_.name) << "\n";
    out_ << (model_.objective.sense == ObjectiveSense::kMaximize ? "Maximize" : "Minimize") << "\n";
    out_ << " obj:";
    std::map<int, double> obj;
    for (const Term& t : model_.objective.terms) obj[t.var] += t.coef;
    const size_t written = linear(obj);
    if (model_.objective.constant != 0.0 || written == 0) {
      out_ << ' ' << signed_number(checked(model_.objective.constant, "objective"));
    }
    out_ << "\nSubject To\n";
    for (const LinearConstraint& r : model_.linear) {
      std::map<int, double> lin;
      for (const Term& t : r.terms) lin[t.var] += t.coef;
      row(r.name, lin, {}, r.sense, r.rhs);
    }
    for (const QuadraticConstraint& r : model_.quadratic) {
      std::map<int, double> lin;
      for (const Term& t : r.linear) lin[t.var] += t.coef;
      std::map<std::pair<int, int>, double> quad;
      for (const QuadTerm& t : r.quad) add_quad(quad, t.row, t.col, t.coef);
      row(r.name, lin, quad, RowSense::kLessEqual, r.rhs);
    }
    for (const SocConstraint& r : model_.soc) soc_row(r);
    for (const RotatedConeConstraint& r : model_.rotated) {
      std::map<std::pair<int, int>, double> quad;
      add_quad(quad, r.eta, r.eta, 1.0);
      row(r.name, {{r.tau, -1.0}}, quad, RowSense::kLessEqual, 0.0);
    }
    bounds();
    out_ << "End\n";
    return out_.str();
  }

 private:
  double checked(double v, const std::string& where) const {
    if (!std::isfinite(v)) {
      throw UnrepresentableConstraint("non-finite coefficient in " + where);
    }
    return v;
  }

  static std::string signed_number(double v) {
    return (v < 0 ? "- " : "+ ") + format_double(std::abs(v));
  }

  static void add_quad(std::map<std::pair<int, int>, double>& quad, int i, int j, double c) {
    quad[{std::min(i, j), std::max(i, j)}] += c;
  }

  const std::string& var(int i) const { return model_.variables.at(i).name; }

  size_t linear(const std::map<int, double>& terms) {
    size_t count = 0;
    for (const auto& [v, c] : terms) {
      if (c == 0.0) continue;
      out_ << ' ' << signed_number(checked(c, var(v))) << ' ' << var(v);
      ++count;
    }
    return count;
  }

  std::string row_name(const std::string& name) {
    ++rows_;
    const std::string n = name.empty() ? "r" + std::to_string(rows_) : name;
    if (!valid_name(n)) {
      throw UnrepresentableConstraint("row name '" + n + "' is not valid in LP text");
    }
    return n;
  }

  void row(const std::string& name, const std::map<int, double>& lin,
           const std::map<std::pair<int, int>, double>& quad, RowSense sense, double rhs) {
    const std::string n = row_name(name);
    out_ << ' ' << n << ':';
    size_t count = linear(lin);
    bool any_quad = false;
    for (const auto& [ij, c] : quad) any_quad = any_quad || c != 0.0;
    if (any_quad) {
      out_ << " + [";
      bool first = true;
      for (const auto& [ij, c] : quad) {
        if (c == 0.0) continue;
        checked(c, n);
        out_ << ' ' << (first && c > 0 ? format_double(c) : signed_number(c));
        first = false;
        if (ij.first == ij.second) {
          out_ << ' ' << var(ij.first) << " ^ 2";
        } else {
          out_ << ' ' << var(ij.first) << " * " << var(ij.second);
        }
      }
      out_ << " ]";
      ++count;
    }
    if (count == 0) out_ << " 0 " << var(0);
    const char* op = sense == RowSense::kLessEqual ? "<=" : sense == RowSense::kGreaterEqual ? ">=" : "=";
    out_ << ' ' << op << ' ' << format_double(checked(rhs, n) + 0.0) << "\n";
  }

  // sum_i (a_i'v + c_i)^2 - (b'v + c0)^2 <= 0, expanded, plus b'v + c0 >= 0.
  void soc_row(const SocConstraint& r) {
    std::map<std::pair<int, int>, double> quad;
    std::map<int, double> lin;
    double constant = 0.0;
    auto square = [&](const AffineExpr& e, double sign) {
      std::map<int, double> a;
      for (const Term& t : e.terms) a[t.var] += t.coef;
      for (const auto& [i, ci] : a) {
        for (const auto& [j, cj] : a) {
          if (i <= j) add_quad(quad, i, j, sign * ci * cj * (i == j ? 1.0 : 2.0));
        }
        lin[i] += sign * 2.0 * ci * e.constant;
      }
      constant += sign * e.constant * e.constant;
    };
    for (const AffineExpr& e : r.entries) square(e, 1.0);
    square(r.bound, -1.0);
    row(r.name, lin, quad, RowSense::kLessEqual, -constant);
    std::map<int, double> b;
    for (const Term& t : r.bound.terms) b[t.var] += t.coef;
    row(r.name.empty() ? std::string() : r.name + "_t", b, {}, RowSense::kGreaterEqual,
        -r.bound.constant);
  }

  void bounds() {
    out_ << "Bounds\n";
    for (const ModelVariable& v : model_.variables) {
      if (std::isnan(v.lower) || std::isnan(v.upper)) {
        throw UnrepresentableConstraint("NaN bound on " + v.name);
      }
      if (std::isinf(v.lower) && std::isinf(v.upper)) {
        out_ << ' ' << v.name << " free\n";
        continue;
      }
      out_ << ' ' << (std::isinf(v.lower) ? "-inf" : format_double(v.lower)) << " <= " << v.name
           << " <= " << (std::isinf(v.upper) ? "+inf" : format_double(v.upper)) << "\n";
    }
    std::vector<std::string> bin, gen;
    for (const ModelVariable& v : model_.variables) {
      if (!v.integer) continue;
      (v.lower == 0.0 && v.upper == 1.0 ? bin : gen).push_back(v.name);
    }
    if (!bin.empty()) {
      out_ << "Binaries\n";
      for (const auto& n : bin) out_ << ' ' << n << "\n";
    }
    if (!gen.empty()) {
      out_ << "Generals\n";
      for (const auto& n : gen) out_ << ' ' << n << "\n";
    }
  }

  const ModelIR& model_;
  std::ostringstream out_;
  int rows_ = 0;
};

}  // namespace

ExportFormat parse_export_format(std::string_view name) {
  if (name == "json") return ExportFormat::kJson;
  if (name == "lp_text" || name == "lp") return ExportFormat::kLpText;
  throw InvalidInput("unknown export format '" + std::string(name) + "'");
}

std::string export_model(const ModelIR& model, ExportFormat format) {
  if (const auto issues = validate(model); !issues.empty()) {
    throw InvalidInput("invalid model: " + issues.front());
  }
  if (format == ExportFormat::kJson) return model_to_json(model);
  if (model.num_variables() == 0 &&
      (!model.linear.empty() || !model.quadratic.empty() || !model.soc.empty())) {
    throw UnrepresentableConstraint("rows without variables");
  }
  return LpWriter(model).render();
}

}  // namespace socvexify
