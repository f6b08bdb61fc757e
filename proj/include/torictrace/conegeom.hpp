// Copyright 2026 The torictrace Authors. All Rights Reserved.
//
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torictrace/arith.hpp"

namespace torictrace {

/// Rays a_i (rows of A) and inner normals u_i (rows of U) of a full
/// dimensional simplicial cone, paired so that <a_l, u_j> = 0 for l != j and
/// <a_l, u_l> >= 1. Every row is primitive.
class SimplicialCone {
 public:
  /// Validates primitivity, the pairing and det A != 0.
  SimplicialCone(IntMatrix rays, IntMatrix normals);

  static SimplicialCone from_rays(const IntMatrix& rays);
  static SimplicialCone from_normals(const IntMatrix& normals);

  Eigen::Index dimension() const { return rays_.rows(); }
  const IntMatrix& rays() const { return rays_; }
  const IntMatrix& normals() const { return normals_; }
  IntVector ray(Eigen::Index i) const { return rays_.row(i).transpose(); }
  IntVector normal(Eigen::Index i) const { return normals_.row(i).transpose(); }

  /// <v, u_i> for every i.
  IntVector pairings(const IntVector& v) const { return normals_ * v; }

 private:
  IntMatrix rays_;
  IntMatrix normals_;
};

/// Row i is the primitive vector along sign(det M) * column i of adj(M), so
/// it vanishes on every row of M except row i and pairs positively with it.
/// Maps rays to inner normals and inner normals to rays. Throws
/// DegenerateConeError if M is singular.
IntMatrix normals_from_rays(const IntMatrix& rays);
IntMatrix rays_from_normals(const IntMatrix& normals);

/// The point b with <b, u_i> = 1 for all i.
RatVector cone_point(const IntMatrix& normals);

bool is_gorenstein(const SimplicialCone& cone);

/// The ray b + t a, t >= 0, with a primitive.
class AffineRay {
 public:
  /// Throws InputError for a zero, non-primitive or mismatched direction.
  AffineRay(RatVector base, IntVector direction);

  /// Divides the direction by its content first.
  static AffineRay primitivized(RatVector base, const IntVector& direction);

  const RatVector& base() const { return base_; }
  const IntVector& direction() const { return direction_; }
  Eigen::Index size() const { return base_.size(); }

  RatVector at(const Rational& t) const;

 private:
  RatVector base_;
  IntVector direction_;
};

enum class RayCondition { None, Cond1, Cond2, Cond3, NoResidue };
const char* condition_name(RayCondition c);

struct RayIntegralityReport {
  bool has_integral_point = false;
  std::optional<Rational> t;
  std::optional<IntVector> point;
  RayCondition failed_condition = RayCondition::None;
  /// Pivot index j (ray solver only; -1 otherwise).
  int pivot = -1;
  /// c_i = ceil(b_i) - b_i and e_i = a_i c_j - a_j c_i for i with a_i != 0;
  /// entries for a_i == 0 are zero.
  std::vector<Rational> c;
  std::vector<Rational> e;
  /// Residues t_j in [0, |a_j|) solving every congruence.
  std::vector<Integer> residues;
};

/// The three integrality conditions with I = {i : a_i != 0} and pivot j
/// (default: least |a_j|, first on ties). Finds the smallest t >= 0.
RayIntegralityReport ray_integral_point(const AffineRay& ray, std::optional<int> pivot = {});

/// Independent solver: with b = p / q over a common denominator, t = s / q
/// and s is found by scanning residues modulo q.
RayIntegralityReport ray_integral_point_oracle(const AffineRay& ray);

/// Applicable when some a_i != 0 has every other a_j invertible modulo a_i;
/// then returns whether condition (1) holds and every
/// e_ij = a_i c_j - a_j c_i is an integer. nullopt when inapplicable.
std::optional<bool> special_case_gcd_test(const AffineRay& ray);

struct MinorsViolation {
  std::vector<int> I, J, L;  // 0-based, increasing
  Integer minor_IJ;          // |U_{I,J}| as computed with rows in increasing order
  Integer minor_IL;
  Integer gcd;
  Integer rhs;  // the alternating cofactor sum
};

struct MinorsReport {
  bool passes = true;
  std::vector<MinorsViolation> violations;
  std::size_t checks = 0;
};

/// For all I, J, L of size n - 1 with J != L, tests
/// gcd(|U_IJ|, |U_IL|) | sum_k (-1)^(l+k) |U_{I - i_k, J - c}| where
/// L = [n] - {c} and c is the l-th element of J. gcd(0, 0) passes.
MinorsReport minors_necessary_condition(const IntMatrix& normals);

struct ConeClassification {
  RatVector cone_point;
  bool gorenstein = false;
  std::vector<RayIntegralityReport> rays;
  int r = 0;
  int height_lower_bound = 0;
  bool punctured_gorenstein = false;
  MinorsReport minors;
};

/// Throws InconsistencyError if a minors violation coexists with integral
/// points on every ray.
ConeClassification classify_cone(const SimplicialCone& cone);

bool in_canonical(const SimplicialCone& cone, const IntVector& v);
bool in_anticanonical(const SimplicialCone& cone, const IntVector& v);
bool in_cone(const SimplicialCone& cone, const IntVector& v);

struct ConeTraceDecomposition {
  IntVector canonical;      // pairings >= 1
  IntVector anticanonical;  // pairings >= -1
};

struct ConeMembership {
  bool canonical = false;
  bool anticanonical = false;
  bool trace = false;
  std::optional<ConeTraceDecomposition> witness;
};

/// Trace membership scans pairing vectors p with 1 <= p_i <= <v, u_i> + 1
/// for an integral U^{-1} p. Throws InputError if v is not in the cone and
/// ResourceError if the box has more than cap points.
ConeMembership canonical_and_trace_membership(const SimplicialCone& cone, const IntVector& v,
                                              std::size_t cap = 10'000'000);

/// m with <m, u_i> = 1 and <m, u_j> >= 1 for j != i.
IntVector dual_witness(const SimplicialCone& cone, int i);

/// Cone text format: header "rays" or "normals", then one integer row per
/// line; '#' starts a comment.
SimplicialCone parse_cone(const std::string& text);

}  // namespace torictrace
