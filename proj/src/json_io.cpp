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


#include "socvexify/json_io.hpp"

#include <cmath>

#include "json.hpp"

namespace socvexify {
namespace {

using json = nlohmann::json;

json number(double v) {
  if (std::isinf(v)) return nullptr;
  if (std::isnan(v)) throw InvalidInput("NaN cannot be written to JSON");
  return v;
}

// null stands for the infinity of the given sign.
double read_number(const json& j, double null_value = kInf) {
  if (j.is_null()) return null_value;
  if (!j.is_number()) throw InvalidInput("expected a number, got " + j.dump());
  return j.get<double>();
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(number(v(i)));
  return out;
}

json vector_json(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

Vector read_vector(const json& j, Eigen::Index expected = -1, double null_value = kInf) {
  if (!j.is_array()) throw InvalidInput("expected an array, got " + j.dump());
  if (expected >= 0 && static_cast<Eigen::Index>(j.size()) != expected) {
    throw InvalidInput("array of length " + std::to_string(j.size()) + ", expected " +
                       std::to_string(expected));
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = read_number(j[i], null_value);
  return v;
}

std::vector<double> read_list(const json& j) {
  const Vector v = read_vector(j);
  return std::vector<double>(v.data(), v.data() + v.size());
}

json matrix_json(const Matrix& M) {
  json out = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index c = 0; c < M.cols(); ++c) out.push_back(number(M(i, c)));
  }
  return out;
}

Matrix read_matrix(const json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array()) throw InvalidInput("expected a matrix array, got " + j.dump());
  Matrix M(rows, cols);
  if (!j.empty() && j[0].is_array()) {
    if (static_cast<Eigen::Index>(j.size()) != rows) throw InvalidInput("matrix row count mismatch");
    for (Eigen::Index i = 0; i < rows; ++i) M.row(i) = read_vector(j[i], cols).transpose();
    return M;
  }
  if (static_cast<Eigen::Index>(j.size()) != rows * cols) {
    throw InvalidInput("matrix has " + std::to_string(j.size()) + " entries, expected " +
                       std::to_string(rows * cols));
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < cols; ++c) M(i, c) = read_number(j[i * cols + c]);
  }
  return M;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

// Runs a reader and turns library exceptions about missing keys or wrong types
// into InvalidInput.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("JSON schema error: ") + e.what());
  }
}

std::string sense_text(RowSense s) {
  switch (s) {
    case RowSense::kLessEqual:
      return "<=";
    case RowSense::kGreaterEqual:
      return ">=";
    case RowSense::kEqual:
      return "=";
  }
  return "<=";
}

RowSense read_sense(const json& j) {
  const std::string s = j.get<std::string>();
  if (s == "<=") return RowSense::kLessEqual;
  if (s == ">=") return RowSense::kGreaterEqual;
  if (s == "=" || s == "==") return RowSense::kEqual;
  throw InvalidInput("unknown row sense '" + s + "'");
}

json terms_json(const std::vector<Term>& terms) {
  json out = json::array();
  for (const Term& t : terms) out.push_back({{"var", t.var}, {"coef", number(t.coef)}});
  return out;
}

std::vector<Term> read_terms(const json& j) {
  std::vector<Term> out;
  for (const json& t : j) out.push_back({t.at("var").get<int>(), read_number(t.at("coef"))});
  return out;
}

json affine_json(const AffineExpr& e) {
  return {{"terms", terms_json(e.terms)}, {"constant", number(e.constant)}};
}

AffineExpr read_affine(const json& j) {
  AffineExpr e;
  e.terms = read_terms(j.at("terms"));
  e.constant = read_number(j.value("constant", json(0.0)));
  return e;
}

json ybox_json(const YBox& box) {
  return {{"lower", vector_json(box.lower)}, {"upper", vector_json(box.upper)}};
}

}  // namespace

std::string conic_set_to_json(const ConicSet& set) {
  json j;
  j["n"] = set.n();
  j["m"] = set.m();
  j["p"] = set.p();
  json dom = json::array();
  for (int k = 0; k < set.domain.size(); ++k) {
    json pt = json::array();
    for (int i = 0; i < set.n(); ++i) pt.push_back(static_cast<int>(set.domain.points(i, k)));
    dom.push_back(pt);
  }
  j["domain"] = dom;
  j["A"] = matrix_json(set.A);
  j["B"] = matrix_json(set.B);
  j["d"] = vector_json(set.d);
  if (const auto* t = std::get_if<TableRhs>(&set.f)) {
    j["f"] = {{"table", vector_json(t->values)}};
  } else {
    const auto& q = std::get<SqrtQuadraticRhs>(set.f);
    j["f"] = {{"sqrt_quadratic",
               {{"P", matrix_json(q.P)}, {"r", vector_json(q.r)}, {"s", number(q.s)}}}};
  }
  j["norm"] = std::string(norm_name(set.norm));
  if (set.y_box) j["y_box"] = ybox_json(*set.y_box);
  return j.dump(2);
}

ConicSet conic_set_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] {
    ConicSet set;
    const int n = j.at("n").get<int>();
    const int m = j.at("m").get<int>();
    const int p = j.at("p").get<int>();
    if (n < 1 || n > kMaxDomainDim || m < 0 || p < 0) {
      throw InvalidInput("n must lie in [1, 20] and m, p must be nonnegative");
    }
    const json& dom = j.at("domain");
    set.domain.dim = n;
    set.domain.points.resize(n, static_cast<Eigen::Index>(dom.size()));
    for (size_t k = 0; k < dom.size(); ++k) {
      set.domain.points.col(static_cast<Eigen::Index>(k)) = read_vector(dom[k], n);
    }
    set.A = read_matrix(j.at("A"), p, n);
    set.B = read_matrix(j.at("B"), p, m);
    set.d = read_vector(j.at("d"), p);
    const json& f = j.at("f");
    if (f.contains("table")) {
      set.f = TableRhs{read_list(f.at("table"))};
    } else if (f.contains("sqrt_quadratic")) {
      const json& q = f.at("sqrt_quadratic");
      SqrtQuadraticRhs sq;
      sq.P = read_matrix(q.at("P"), n, n);
      sq.r = read_vector(q.at("r"), n);
      sq.s = read_number(q.at("s"));
      set.f = sq;
    } else {
      throw InvalidInput("f must hold 'table' or 'sqrt_quadratic'");
    }
    set.norm = parse_norm(j.value("norm", std::string("l2")));
    if (j.contains("y_box") && !j.at("y_box").is_null()) {
      YBox box;
      box.lower = read_vector(j.at("y_box").at("lower"), m, -kInf);
      box.upper = read_vector(j.at("y_box").at("upper"), m, kInf);
      set.y_box = box;
    }
    return set;
  });
}

std::string certificate_to_json(const EnvelopeCertificate& cert) {
  json j;
  j["value"] = number(cert.value);
  j["query"] = vector_json(cert.query);
  json support = json::array();
  for (const SupportPoint& s : cert.support) {
    support.push_back(
        {{"index", s.index}, {"point", vector_json(s.point)}, {"weight", number(s.weight)}});
  }
  j["support"] = support;
  return j.dump(2);
}

EnvelopeCertificate certificate_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] {
    EnvelopeCertificate cert;
    cert.value = read_number(j.at("value"));
    cert.query = read_vector(j.at("query"));
    for (const json& s : j.at("support")) {
      cert.support.push_back(
          {s.at("index").get<int>(), read_vector(s.at("point")), read_number(s.at("weight"))});
    }
    return cert;
  });
}

std::string verdict_to_json(const MembershipVerdict& verdict) {
  json j;
  j["status"] = std::string(membership_name(verdict.status));
  j["margin"] = number(verdict.margin);
  return j.dump(2);
}

MembershipVerdict verdict_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded([&] {
    MembershipVerdict v;
    const std::string s = j.at("status").get<std::string>();
    if (s == "INSIDE") {
      v.status = Membership::kInside;
    } else if (s == "OUTSIDE") {
      v.status = Membership::kOutside;
    } else if (s == "BOUNDARY") {
      v.status = Membership::kBoundary;
    } else {
      throw InvalidInput("unknown verdict status '" + s + "'");
    }
    v.margin = read_number(j.at("margin"));
    return v;
  });
}

std::string model_to_json(const ModelIR& model) {
  json j;
  j["name"] = model.name;
  json vars = json::array();
  for (const ModelVariable& v : model.variables) {
    vars.push_back({{"name", v.name},
                    {"lower", number(v.lower)},
                    {"upper", number(v.upper)},
                    {"integer", v.integer}});
  }
  j["variables"] = vars;
  json lin = json::array();
  for (const LinearConstraint& r : model.linear) {
    lin.push_back({{"name", r.name},
                   {"terms", terms_json(r.terms)},
                   {"sense", sense_text(r.sense)},
                   {"rhs", number(r.rhs)}});
  }
  j["linear"] = lin;
  json soc = json::array();
  for (const SocConstraint& r : model.soc) {
    json entries = json::array();
    for (const AffineExpr& e : r.entries) entries.push_back(affine_json(e));
    soc.push_back({{"name", r.name}, {"entries", entries}, {"bound", affine_json(r.bound)}});
  }
  j["soc"] = soc;
  json quad = json::array();
  for (const QuadraticConstraint& r : model.quadratic) {
    json q = json::array();
    for (const QuadTerm& t : r.quad) {
      q.push_back({{"row", t.row}, {"col", t.col}, {"coef", number(t.coef)}});
    }
    quad.push_back({{"name", r.name},
                    {"quad", q},
                    {"linear", terms_json(r.linear)},
                    {"rhs", number(r.rhs)}});
  }
  j["quadratic"] = quad;
  json rot = json::array();
  for (const RotatedConeConstraint& r : model.rotated) {
    rot.push_back({{"name", r.name}, {"eta", r.eta}, {"tau", r.tau}});
  }
  j["rotated"] = rot;
  j["objective"] = {
      {"sense", model.objective.sense == ObjectiveSense::kMaximize ? "max" : "min"},
      {"terms", terms_json(model.objective.terms)},
      {"constant", number(model.objective.constant)}};
  return j.dump(2);
}

ModelIR model_from_json(const std::string& text) {
  const json j = parse(text);
  ModelIR model = guarded([&] {
    ModelIR m;
    m.name = j.value("name", std::string());
    for (const json& v : j.at("variables")) {
      m.variables.push_back({v.at("name").get<std::string>(), read_number(v.at("lower"), -kInf),
                             read_number(v.at("upper"), kInf), v.value("integer", false)});
    }
    for (const json& r : j.value("linear", json::array())) {
      m.linear.push_back({r.value("name", std::string()), read_terms(r.at("terms")),
                          read_sense(r.at("sense")), read_number(r.at("rhs"))});
    }
    for (const json& r : j.value("soc", json::array())) {
      SocConstraint c;
      c.name = r.value("name", std::string());
      for (const json& e : r.at("entries")) c.entries.push_back(read_affine(e));
      c.bound = read_affine(r.at("bound"));
      m.soc.push_back(std::move(c));
    }
    for (const json& r : j.value("quadratic", json::array())) {
      QuadraticConstraint c;
      c.name = r.value("name", std::string());
      for (const json& t : r.at("quad")) {
        c.quad.push_back({t.at("row").get<int>(), t.at("col").get<int>(), read_number(t.at("coef"))});
      }
      c.linear = read_terms(r.value("linear", json::array()));
      c.rhs = read_number(r.at("rhs"));
      m.quadratic.push_back(std::move(c));
    }
    for (const json& r : j.value("rotated", json::array())) {
      m.rotated.push_back({r.value("name", std::string()), r.at("eta").get<int>(), r.at("tau").get<int>()});
    }
    const json& obj = j.at("objective");
    const std::string sense = obj.value("sense", std::string("max"));
    if (sense != "max" && sense != "min") throw InvalidInput("objective sense must be max or min");
    m.objective.sense = sense == "max" ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize;
    m.objective.terms = read_terms(obj.value("terms", json::array()));
    m.objective.constant = read_number(obj.value("constant", json(0.0)));
    return m;
  });
  if (const auto issues = validate(model); !issues.empty()) {
    throw InvalidInput("invalid model: " + issues.front());
  }
  return model;
}

std::string instance_to_json(const KnapsackInstance& inst) {
  json j;
  j["n"] = inst.n;
  j["m"] = inst.m;
  j["type"] = inst.type;
  j["seed"] = inst.seed;
  j["index"] = inst.index;
  j["alpha"] = number(inst.alpha);
  j["profits_x"] = vector_json(inst.px);
  j["profits_y"] = vector_json(inst.py);
  json res = json::array();
  for (const KnapsackResource& r : inst.resources) {
    res.push_back({{"mu", vector_json(r.mu)},
                   {"sigma", matrix_json(r.sigma)},
                   {"capacity", number(r.capacity)}});
  }
  j["resources"] = res;
  json raw_w = json::array();
  for (const auto& w : inst.scale.raw_weights) raw_w.push_back(vector_json(w));
  j["scale"] = {{"weight_divisor", number(inst.scale.weight_divisor)},
                {"capacity_divisor", number(inst.scale.capacity_divisor)},
                {"continuous_profit_divisor", number(inst.scale.continuous_profit_divisor)},
                {"capacity_multiplier", number(inst.scale.capacity_multiplier)},
                {"raw_profits", vector_json(inst.scale.raw_profits)},
                {"raw_weights", raw_w},
                {"raw_capacities", vector_json(inst.scale.raw_capacities)}};
  j["synthetic_base"] = inst.synthetic_base;
  return j.dump(2);
}

KnapsackInstance instance_from_json(const std::string& text) {
  const json j = parse(text);
  KnapsackInstance inst = guarded([&] {
    KnapsackInstance in;
    in.n = j.at("n").get<int>();
    in.m = j.at("m").get<int>();
    if (in.n < 0 || in.m < 0) throw InvalidInput("item counts must be nonnegative");
    in.type = j.value("type", 0);
    in.seed = j.value("seed", std::uint64_t{0});
    in.index = j.value("index", 0);
    in.alpha = read_number(j.value("alpha", json(0.005)));
    in.px = read_vector(j.at("profits_x"), in.n);
    in.py = read_vector(j.at("profits_y"), in.m);
    const int N = in.n + in.m;
    for (const json& r : j.at("resources")) {
      KnapsackResource res;
      res.mu = read_vector(r.at("mu"), N);
      res.sigma = read_matrix(r.at("sigma"), N, N);
      res.capacity = read_number(r.at("capacity"));
      in.resources.push_back(std::move(res));
    }
    if (j.contains("scale")) {
      const json& s = j.at("scale");
      in.scale.weight_divisor = read_number(s.value("weight_divisor", json(1.0)));
      in.scale.capacity_divisor = read_number(s.value("capacity_divisor", json(1.0)));
      in.scale.continuous_profit_divisor =
          read_number(s.value("continuous_profit_divisor", json(1.0)));
      in.scale.capacity_multiplier = read_number(s.value("capacity_multiplier", json(1.0)));
      in.scale.raw_profits = read_list(s.value("raw_profits", json::array()));
      for (const json& w : s.value("raw_weights", json::array())) {
        in.scale.raw_weights.push_back(read_list(w));
      }
      in.scale.raw_capacities = read_list(s.value("raw_capacities", json::array()));
    }
    in.synthetic_base = j.value("synthetic_base", false);
    return in;
  });
  if (const auto issues = validate(inst); !issues.empty()) {
    throw InvalidInput("invalid instance: " + issues.front());
  }
  return inst;
}

std::string solve_result_to_json(const SolveResult& result, const ModelIR& model,
                                 const BruteForceResult* brute) {
  json j;
  j["status"] = std::string(status_name(result.status));
  j["value"] = number(result.value);
  j["dual_bound"] = number(result.dual_bound);
  j["primal_residual"] = number(result.primal_residual);
  j["message"] = result.message;
  json point = json::object();
  if (result.primal.size() == model.num_variables()) {
    for (int i = 0; i < model.num_variables(); ++i) {
      point[model.variables[i].name] = number(result.primal(i));
    }
  }
  j["solution"] = point;
  if (brute) {
    j["fixings"] = brute->fixings;
    j["infeasible_fixings"] = brute->infeasible;
    j["pruned_fixings"] = brute->pruned;
  }
  return j.dump(2);
}

}  // namespace socvexify
