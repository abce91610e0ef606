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

#include "socvexify/core.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

namespace socvexify {
namespace {

Tolerances& mutable_tolerances() {
  static Tolerances tol;
  return tol;
}

bool is_binary(double v) { return v == 0.0 || v == 1.0; }

}  // namespace

bool identical(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return a.size() == 0 ||
         std::memcmp(a.data(), b.data(), sizeof(double) * a.size()) == 0;
}

bool identical(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  return a.size() == 0 ||
         std::memcmp(a.data(), b.data(), sizeof(double) * a.size()) == 0;
}

bool BinaryDomain::operator==(const BinaryDomain& other) const {
  return dim == other.dim && identical(points, other.points);
}

bool SqrtQuadraticRhs::operator==(const SqrtQuadraticRhs& other) const {
  return identical(P, other.P) && identical(r, other.r) &&
         std::memcmp(&s, &other.s, sizeof(double)) == 0;
}

bool YBox::operator==(const YBox& other) const {
  return identical(lower, other.lower) && identical(upper, other.upper);
}

bool ConicSet::operator==(const ConicSet& other) const {
  return domain == other.domain && identical(A, other.A) &&
         identical(B, other.B) && identical(d, other.d) && f == other.f &&
         norm == other.norm && y_box == other.y_box;
}

bool SupportPoint::operator==(const SupportPoint& other) const {
  return index == other.index && identical(point, other.point) &&
         weight == other.weight;
}

bool EnvelopeCertificate::operator==(const EnvelopeCertificate& other) const {
  return value == other.value && support == other.support &&
         identical(query, other.query);
}

const Tolerances& tolerances() { return mutable_tolerances(); }

void set_tolerances(const Tolerances& tol) {
  if (!(tol.feasibility > 0.0) || !(tol.equality > 0.0)) {
    throw InvalidInput("tolerances must be positive");
  }
  mutable_tolerances() = tol;
}

ScopedTolerances::ScopedTolerances(const Tolerances& tol)
    : saved_(tolerances()) {
  set_tolerances(tol);
}

ScopedTolerances::~ScopedTolerances() { mutable_tolerances() = saved_; }

double norm_of(const Vector& v, NormKind kind) {
  if (v.size() == 0) return 0.0;
  switch (kind) {
    case NormKind::kL1:
      return v.lpNorm<1>();
    case NormKind::kL2:
      return v.norm();
    case NormKind::kLinf:
      return v.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

std::string_view norm_name(NormKind kind) {
  switch (kind) {
    case NormKind::kL1:
      return "l1";
    case NormKind::kL2:
      return "l2";
    case NormKind::kLinf:
      return "linf";
  }
  return "l2";
}

NormKind parse_norm(std::string_view name) {
  if (name == "l1") return NormKind::kL1;
  if (name == "l2") return NormKind::kL2;
  if (name == "linf") return NormKind::kLinf;
  throw InvalidInput("unknown norm '" + std::string(name) +
                     "' (expected l1, l2 or linf)");
}

std::optional<int> BinaryDomain::find(const Vector& x, double tol) const {
  if (x.size() != dim) return std::nullopt;
  for (int k = 0; k < size(); ++k) {
    if ((points.col(k) - x).lpNorm<Eigen::Infinity>() <= tol) return k;
  }
  return std::nullopt;
}

BinaryDomain BinaryDomain::full_cube(int n) {
  if (n < 1 || n > kMaxDomainDim) {
    throw InvalidInput("cube dimension must lie in [1, 20]");
  }
  const long count = 1L << n;
  BinaryDomain domain;
  domain.dim = n;
  domain.points.resize(n, count);
  for (long k = 0; k < count; ++k) {
    for (int i = 0; i < n; ++i) {
      domain.points(i, k) = static_cast<double>((k >> i) & 1L);
    }
  }
  return domain;
}

BinaryDomain BinaryDomain::subset(const std::vector<int>& keep) const {
  BinaryDomain out;
  out.dim = dim;
  out.points.resize(dim, static_cast<Eigen::Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) out.points.col(j) = points.col(keep[j]);
  return out;
}

double radicand(const SqrtQuadraticRhs& f, const Vector& x) {
  return x.dot(f.P * x) + f.r.dot(x) + f.s;
}

double evaluate_rhs(const RhsFunction& f, const BinaryDomain& domain, int k) {
  if (const auto* table = std::get_if<TableRhs>(&f)) {
    if (k < 0 || k >= static_cast<int>(table->values.size())) {
      throw InvalidInput("table rhs has no value for domain point " +
                         std::to_string(k));
    }
    return table->values[k];
  }
  const auto& sq = std::get<SqrtQuadraticRhs>(f);
  const double q = radicand(sq, domain.point(k));
  if (q >= 0.0) return std::sqrt(q);
  if (q >= -kRadicandClamp) return 0.0;
  std::ostringstream msg;
  msg << "negative radicand " << q << " at domain point " << k;
  throw InvalidInput(msg.str());
}

std::vector<double> rhs_values(const RhsFunction& f,
                               const BinaryDomain& domain) {
  std::vector<double> out(domain.size());
  for (int k = 0; k < domain.size(); ++k) out[k] = evaluate_rhs(f, domain, k);
  return out;
}

std::vector<std::string> validate(const ConicSet& set) {
  std::vector<std::string> issues;
  const BinaryDomain& dom = set.domain;
  if (dom.dim < 1) issues.push_back("domain dimension must be positive");
  if (dom.dim > kMaxDomainDim) {
    issues.push_back("domain dimension exceeds the enumeration cap of 20");
  }
  if (dom.points.rows() != dom.dim) {
    issues.push_back("domain points must have length n");
  }
  if (dom.size() < 1) issues.push_back("domain must contain at least one point");
  if (dom.dim >= 1 && dom.dim <= kMaxDomainDim &&
      dom.size() > (1L << dom.dim)) {
    issues.push_back("domain has more than 2^n points");
  }
  bool binary = true;
  for (Eigen::Index i = 0; i < dom.points.size(); ++i) {
    if (!is_binary(dom.points.data()[i])) binary = false;
  }
  if (!binary) issues.push_back("domain coordinates must be 0 or 1");
  bool distinct = true;
  for (int a = 0; a < dom.size() && distinct; ++a) {
    for (int b = a + 1; b < dom.size(); ++b) {
      if (dom.points.col(a) == dom.points.col(b)) {
        distinct = false;
        break;
      }
    }
  }
  if (!distinct) issues.push_back("domain points must be distinct");

  const Eigen::Index p = set.B.rows();
  if (set.A.rows() != p || set.d.size() != p) {
    issues.push_back("A, B and d must have the same number of rows p");
  }
  if (set.A.cols() != dom.dim) issues.push_back("A must have n columns");
  if (!set.A.allFinite() || !set.B.allFinite() || !set.d.allFinite()) {
    issues.push_back("A, B and d must be finite");
  }

  if (const auto* table = std::get_if<TableRhs>(&set.f)) {
    if (static_cast<int>(table->values.size()) != dom.size()) {
      issues.push_back("table rhs must have one value per domain point");
    }
    for (double v : table->values) {
      if (!(v >= 0.0) || !std::isfinite(v)) {
        issues.push_back("table rhs values must be finite and nonnegative");
        break;
      }
    }
  } else {
    const auto& sq = std::get<SqrtQuadraticRhs>(set.f);
    if (dom.dim < 1 || sq.P.rows() != dom.dim || sq.P.cols() != dom.dim ||
        sq.r.size() != dom.dim) {
      issues.push_back("sqrt_quadratic rhs must have P n x n and r of length n");
    } else {
      const double scale = 1.0 + sq.P.cwiseAbs().maxCoeff();
      if ((sq.P - sq.P.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        issues.push_back("sqrt_quadratic P must be symmetric");
      }
      if (dom.points.rows() == dom.dim) {
        for (int k = 0; k < dom.size(); ++k) {
          if (radicand(sq, dom.point(k)) < -kRadicandClamp) {
            issues.push_back("sqrt_quadratic radicand is negative at domain point " +
                             std::to_string(k));
            break;
          }
        }
      }
    }
  }

  if (set.y_box) {
    if (set.y_box->lower.size() != set.B.cols() ||
        set.y_box->upper.size() != set.B.cols()) {
      issues.push_back("y_box bounds must have length m");
    } else if ((set.y_box->lower.array() > set.y_box->upper.array()).any()) {
      issues.push_back("y_box lower bounds must not exceed upper bounds");
    }
  }
  return issues;
}

double certificate_residual(const EnvelopeCertificate& cert,
                            const std::vector<double>& values) {
  double weight_sum = 0.0;
  double value = 0.0;
  Vector point = Vector::Zero(cert.query.size());
  for (const SupportPoint& s : cert.support) {
    weight_sum += s.weight;
    point += s.weight * s.point;
    value += s.weight * values.at(s.index);
  }
  double res = std::abs(weight_sum - 1.0);
  if (point.size() > 0) {
    res = std::max(res, (point - cert.query).lpNorm<Eigen::Infinity>());
  }
  return std::max(res, std::abs(value - cert.value));
}

std::string_view membership_name(Membership status) {
  switch (status) {
    case Membership::kInside:
      return "INSIDE";
    case Membership::kOutside:
      return "OUTSIDE";
    case Membership::kBoundary:
      return "BOUNDARY";
  }
  return "BOUNDARY";
}

MembershipVerdict MembershipVerdict::from_margin(double margin, double tol) {
  MembershipVerdict v;
  v.margin = margin;
  if (std::abs(margin) <= tol) {
    v.status = Membership::kBoundary;
  } else {
    v.status = margin > 0.0 ? Membership::kInside : Membership::kOutside;
  }
  return v;
}

}  // namespace socvexify
