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

// Domain types shared by every module: finite binary domains, the conic set
//   Z = { (x, y) in X x R^m : ||A x + B y + d|| <= f(x) },
// envelope certificates and membership verdicts.

#ifndef SOCVEXIFY_CORE_HPP_
#define SOCVEXIFY_CORE_HPP_

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace socvexify {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Same shape and bitwise-identical entries.
bool identical(const Matrix& a, const Matrix& b);
bool identical(const Vector& a, const Vector& b);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest dimension for which a domain may be enumerated.
inline constexpr int kMaxDomainDim = 20;

// Radicands in [-kRadicandClamp, 0) are treated as exact zeros.
inline constexpr double kRadicandClamp = 1e-9;

struct Tolerances {
  double feasibility = 1e-7;
  double equality = 1e-6;
};

// Process-wide tolerances. Set once at startup (CLI --tol or SOCVEXIFY_TOL);
// library code only reads them.
const Tolerances& tolerances();
void set_tolerances(const Tolerances& tol);

// Restores the previous tolerances on destruction. Intended for tests.
class ScopedTolerances {
 public:
  explicit ScopedTolerances(const Tolerances& tol);
  ~ScopedTolerances();
  ScopedTolerances(const ScopedTolerances&) = delete;
  ScopedTolerances& operator=(const ScopedTolerances&) = delete;

 private:
  Tolerances saved_;
};

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};
class QueryOutsideHull : public Error {
 public:
  using Error::Error;
};
class PointNotInDomain : public Error {
 public:
  using Error::Error;
};
class EmptyDomainAfterRestriction : public Error {
 public:
  using Error::Error;
};
class InvalidRange : public Error {
 public:
  using Error::Error;
};
class InvalidType : public Error {
 public:
  using Error::Error;
};
class SigmaTildeNotPD : public Error {
 public:
  SigmaTildeNotPD(int resource, const std::string& what)
      : Error(what), resource_(resource) {}
  int resource() const { return resource_; }

 private:
  int resource_;
};
class NonConvexContinuousPart : public Error {
 public:
  using Error::Error;
};
class UnrepresentableConstraint : public Error {
 public:
  using Error::Error;
};
class NumericalLimit : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Norms

enum class NormKind { kL1, kL2, kLinf };

double norm_of(const Vector& v, NormKind kind);
std::string_view norm_name(NormKind kind);  // "l1" | "l2" | "linf"
NormKind parse_norm(std::string_view name);

// ---------------------------------------------------------------------------
// Domain and right-hand side

// A finite subset of {0,1}^dim. Points are stored as the columns of `points`.
struct BinaryDomain {
  int dim = 0;
  Matrix points;  // dim x K, entries 0.0 / 1.0

  int size() const { return static_cast<int>(points.cols()); }
  Vector point(int k) const { return points.col(k); }

  // Index of the column equal to x (entrywise within tol), if any.
  std::optional<int> find(const Vector& x, double tol = 1e-9) const;

  // All 2^n points, enumerated in binary counting order with coordinate 0 as
  // the least significant bit.
  static BinaryDomain full_cube(int n);

  // Keeps the listed columns, in the given order.
  BinaryDomain subset(const std::vector<int>& keep) const;

  bool operator==(const BinaryDomain& other) const;
};

// f given by its values on the domain points (indexed like domain columns).
struct TableRhs {
  std::vector<double> values;
  bool operator==(const TableRhs&) const = default;
};

// f(x) = sqrt(x' P x + r' x + s).
struct SqrtQuadraticRhs {
  Matrix P;
  Vector r;
  double s = 0.0;
  bool operator==(const SqrtQuadraticRhs& other) const;
};

using RhsFunction = std::variant<TableRhs, SqrtQuadraticRhs>;

// Radicand x' P x + r' x + s.
double radicand(const SqrtQuadraticRhs& f, const Vector& x);

// f evaluated at domain point k. Throws InvalidInput for a negative radicand
// beyond the clamp or a missing table entry.
double evaluate_rhs(const RhsFunction& f, const BinaryDomain& domain, int k);

// f evaluated at every domain point, in domain order.
std::vector<double> rhs_values(const RhsFunction& f, const BinaryDomain& domain);

// ---------------------------------------------------------------------------
// The conic set

struct YBox {
  Vector lower;  // may hold -kInf
  Vector upper;  // may hold +kInf
  bool operator==(const YBox& other) const;
};

struct ConicSet {
  BinaryDomain domain;
  Matrix A;  // p x n
  Matrix B;  // p x m
  Vector d;  // p
  RhsFunction f = TableRhs{};
  NormKind norm = NormKind::kL2;
  std::optional<YBox> y_box;

  int n() const { return domain.dim; }
  int m() const { return static_cast<int>(B.cols()); }
  int p() const { return static_cast<int>(B.rows()); }

  bool operator==(const ConicSet& other) const;
};

// Returns one human-readable description per violated invariant; empty when
// the set is well formed. A y_box is structurally valid; whether the hull
// characterization applies is a separate question (see hull_verify.hpp).
std::vector<std::string> validate(const ConicSet& set);

// ---------------------------------------------------------------------------
// Certificates and verdicts

struct SupportPoint {
  int index = 0;  // column of the domain
  Vector point;
  double weight = 0.0;
  bool operator==(const SupportPoint& other) const;
};

// value = sum_k weight_k f(x^k) and query = sum_k weight_k x^k, with at most
// dim + 1 support points.
struct EnvelopeCertificate {
  double value = 0.0;
  std::vector<SupportPoint> support;
  Vector query;
  bool operator==(const EnvelopeCertificate& other) const;
};

// Largest reconstruction error of a certificate: weight sum, query and value.
double certificate_residual(const EnvelopeCertificate& cert,
                            const std::vector<double>& values);

enum class Membership { kInside, kOutside, kBoundary };

std::string_view membership_name(Membership status);

struct MembershipVerdict {
  Membership status = Membership::kBoundary;
  double margin = 0.0;

  // BOUNDARY iff |margin| <= tol.
  static MembershipVerdict from_margin(double margin, double tol);
  bool operator==(const MembershipVerdict&) const = default;
};

}  // namespace socvexify

#endif  // SOCVEXIFY_CORE_HPP_
