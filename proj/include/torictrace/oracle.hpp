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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torictrace/arith.hpp"
#include "torictrace/conegeom.hpp"
#include "torictrace/hibi.hpp"
#include "torictrace/lattice.hpp"
#include "torictrace/poset.hpp"

namespace torictrace {

/// coeffs . x >= rhs
struct LinearInequality {
  std::vector<Coord> coeffs;
  Coord rhs = 0;
};

/// Integer points of a polyhedron inside an explicit box.
struct BoundedRegion {
  std::size_t width = 0;
  std::vector<LinearInequality> inequalities;
  std::vector<Coord> lower;
  std::vector<Coord> upper;

  /// Number of box points; 0 if some interval is empty.
  Integer volume() const;
};

/// 10^7, or the value of TORICTRACE_ENUM_CAP when set.
std::size_t enumeration_cap();

/// All integer points of the region in lexicographic order. Throws
/// ResourceError when the box volume exceeds the cap.
PointSet enumerate_slice(const BoundedRegion& region, std::optional<std::size_t> cap = {});

// ---------------------------------------------------------------------------
// Hibi rings

/// Chain lengths in P-hat found by listing every chain.
struct HatChains {
  std::vector<int> longest_from_bottom, shortest_from_bottom;
  std::vector<int> longest_to_top, shortest_to_top;
  int bottom = 0;
  int top = 0;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) in P-hat indices
};
HatChains hat_chains(const Poset& p);

/// Cover inequalities of the module in degree k with per-coordinate bounds
/// implied by chains through each element.
BoundedRegion hibi_region(const Poset& p, HibiModule module, int k);

PointSet brute_hibi_slice(const Poset& p, HibiModule module, int k);

/// Union over i + j = k of the literal sumsets canonical[i] + anticanonical[j].
PointSet brute_trace_slice(const std::map<int, PointSet>& canonical,
                           const std::map<int, PointSet>& anticanonical, int k);

/// brute_trace_slice over enumerated Hibi slices.
PointSet brute_hibi_trace_slice(const Poset& p, int k);

/// Degree-k trace of the Hibi ring of a disjoint union, from literal
/// sumsets on each component: a tuple is in the trace iff the sets of
/// canonical degrees realizing its parts intersect.
struct ProductTraceSummary {
  std::uint64_t ring_count = 0;
  std::uint64_t trace_count = 0;
  bool all = false;   // trace_k = R_k
  bool none = false;  // trace_k empty
};
ProductTraceSummary brute_product_trace(const std::vector<Poset>& components, int k);

/// For one component in degree k: how many ring monomials carry each mask
/// of canonical degrees i (bit i) with the monomial in
/// omega_i + omega^{-1}_{k-i}. Canonical degrees above 63 raise ResourceError.
struct ComponentTraceProfile {
  std::uint64_t ring_count = 0;
  std::uint64_t trace_count = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;
};
ComponentTraceProfile component_trace_profile(const Poset& p, int k);
ProductTraceSummary combine_trace_profiles(const std::vector<ComponentTraceProfile>& profiles);

/// Height of tr(omega) from faces of the Hibi cone found as intersections
/// of the tight-cover sets of the degree-one generators, tested against sums
/// of brute-force minimal generators of omega and omega^{-1}. A nonnegative
/// max_trace_degree caps the degree of those sums.
struct BruteTraceHeight {
  int height = 0;
  int locus_dim = 0;
  bool unit_ideal = false;
  std::size_t faces = 0;
};
BruteTraceHeight brute_trace_height(const Poset& p, int max_trace_degree = -1);

// ---------------------------------------------------------------------------
// Simplicial cones

/// <m, u_i> >= shift for every i and sum_i <m, u_i> <= degree_cap.
BoundedRegion cone_region(const IntMatrix& normals, int shift, std::int64_t degree_cap);

/// low_j <= <m, u_j> <= high_j for every j.
BoundedRegion cone_pairing_box(const IntMatrix& normals, const std::vector<std::int64_t>& low,
                               const std::vector<std::int64_t>& high);

/// Elements of the module (shift 1: omega, shift -1: omega^{-1}) minimal
/// under m >= m' iff m - m' lies in the cone, among points of pairing
/// degree <= degree_cap.
std::vector<LatticePoint> minimal_module_points(const IntMatrix& normals, int shift,
                                                std::int64_t degree_cap);

/// Least integral point on the extremal ray of tau along a_i, by scanning
/// lattice points with <m, u_j> = 1 (j != i) and 1 <= <m, u_i> <= <a_i, u_i>.
std::optional<LatticePoint> ray_scan(const SimplicialCone& cone, int i);

/// The lattice point with every pairing 1, if it exists.
std::optional<LatticePoint> integral_cone_point(const SimplicialCone& cone);

/// v = v1 + v2 with v1 in tau and v2 in the omega^{-1} region, by scanning
/// the region of candidates v1.
bool brute_cone_trace_member(const SimplicialCone& cone, const LatticePoint& v);

// ---------------------------------------------------------------------------
// Cross verification

struct VerifyResult {
  bool pass = true;
  std::vector<std::string> checks;  // one line per comparison performed
  std::string failure;              // first discrepancy
  std::optional<LatticePoint> difference;

  void fail(const std::string& what, std::optional<LatticePoint> diff = {});
};

/// Compares two point sets and records the first point in one but not the
/// other.
VerifyResult compare_point_sets(const std::string& what, const PointSet& analytic,
                                const PointSet& brute);

/// Recomputes the slices and the classification claims of a Hibi ring by
/// enumeration through degree max_degree.
VerifyResult cross_verify_hibi(const Poset& p, const HibiClassification& c, int max_degree);

/// Recomputes the per-ray verdicts, the Gorenstein property and the ray
/// witnesses of a cone classification by enumeration.
VerifyResult cross_verify_cone(const SimplicialCone& cone, const ConeClassification& c);

}  // namespace torictrace
