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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torictrace/lattice.hpp"
#include "torictrace/poset.hpp"

namespace torictrace {

/// Exponent of a Laurent monomial t^{m(-inf)} prod_v x_v^{m(v)} of the Hibi
/// ring's ambient torus. Coordinate 0 is m(-inf), the degree; coordinate
/// 1 + i is m at element i. The value at inf is 0 and is not stored.
using PosetExponent = LatticePoint;

/// The three monomial modules of K[P]: the ring itself, omega, omega^{-1}.
/// Membership is m(a) >= m(b) + shift for every cover a < b of P-hat, with
/// shift 0, +1, -1 respectively.
enum class HibiModule { Ring, Canonical, Anticanonical };

int module_shift(HibiModule module);
const char* module_name(HibiModule module);

/// Canonical degrees i with x in omega_i + omega^{-1}_{k-i}; lo <= hi.
struct DegreeWindow {
  int lo;
  int hi;
};

struct TraceDecomposition {
  PosetExponent canonical;      // in omega
  PosetExponent anticanonical;  // in omega^{-1}
};

/// Minimal generators of omega or omega^{-1}. Every minimal generator of
/// omega has degree <= |P| + 1 and every minimal generator of omega^{-1} has
/// degree <= |P| - 1, so a search through those degrees is complete.
struct GeneratorSet {
  HibiModule module = HibiModule::Canonical;
  std::vector<PosetExponent> generators;  // by degree, then lexicographic
  int searched_through = 0;
  bool heuristic = false;

  int min_degree() const;
  int max_degree() const;
};

/// Slices larger than this raise ResourceError.
inline constexpr std::size_t kDefaultSliceCap = 20'000'000;

/// The Hibi ring K[P] of a nonempty poset.
class HibiRing {
 public:
  /// Throws InputError for the empty poset.
  explicit HibiRing(Poset p);

  const Poset& poset() const { return hat_.base(); }
  const PosetHat& hat() const { return hat_; }
  std::size_t width() const { return poset().size() + 1; }

  /// |P| + 1.
  int dimension() const { return static_cast<int>(poset().size()) + 1; }

  /// Least degree of a nonzero element of the module: 0, rank P-hat, or
  /// -dist(-inf, inf).
  int lowest_degree(HibiModule module) const;

  bool contains(HibiModule module, std::span<const Coord> m) const;

  /// Every exponent of the module in degree k, lexicographically ordered.
  GradedSlice slice(HibiModule module, int k, std::size_t cap = kDefaultSliceCap) const;
  GradedSlice ring_slice(int k, std::size_t cap = kDefaultSliceCap) const {
    return slice(HibiModule::Ring, k, cap);
  }
  GradedSlice canonical_slice(int k, std::size_t cap = kDefaultSliceCap) const {
    return slice(HibiModule::Canonical, k, cap);
  }
  GradedSlice anticanonical_slice(int k, std::size_t cap = kDefaultSliceCap) const {
    return slice(HibiModule::Anticanonical, k, cap);
  }

  /// Degree-k part of tr(omega) = omega * omega^{-1}.
  GradedSlice trace_slice(int k, std::size_t cap = kDefaultSliceCap) const;

  /// Number of trace monomials in degree k, computed component by component
  /// without materializing the product slice.
  std::uint64_t trace_slice_count(int k, std::size_t cap = kDefaultSliceCap) const;

  /// Number of monomials of K[P] in degree k (product over components).
  std::uint64_t ring_slice_count(int k, std::size_t cap = kDefaultSliceCap) const;

  /// Decomposition v = m + m' with m in omega and m' in omega^{-1}, if any.
  /// Throws InputError unless v is an exponent of K[P].
  std::optional<TraceDecomposition> trace_decomposition(std::span<const Coord> v) const;

  /// The canonical degrees available to decompose v; nullopt if v is not in
  /// the trace. Throws InputError unless v is an exponent of K[P].
  std::optional<DegreeWindow> trace_window(std::span<const Coord> v) const;

  /// m is a minimal generator of the module (m must belong to it).
  bool is_minimal_generator(HibiModule module, std::span<const Coord> m) const;

  /// Minimal generators, searched at least through degree_bound and always
  /// through the proven degree bound.
  GeneratorSet minimal_generators(HibiModule module, int degree_bound = 0,
                                  std::size_t cap = kDefaultSliceCap) const;

  /// Pairwise sums of minimal generators of omega and omega^{-1},
  /// deduplicated and sorted.
  std::vector<PosetExponent> trace_generators(std::size_t cap = kDefaultSliceCap) const;

  /// Exponent coordinate of a P-hat vertex; top() has none.
  std::size_t coordinate(int hat_vertex) const;

  /// Exponent of t^k (all element values 0).
  PosetExponent power_of_t(int k) const;

 private:
  // Shortest distances in the difference-constraint graph of the trace
  // decomposition of v; false on a negative cycle.
  bool decomposition_bounds(std::span<const Coord> v, std::vector<long long>* upper,
                            std::vector<long long>* lower) const;
  void require_ring_element(std::span<const Coord> v) const;
  Coord value(std::span<const Coord> m, int hat_vertex) const;

  PosetHat hat_;
  std::vector<int> top_down_;  // P-hat vertices except inf, top first
};

// Free-function forms over a poset.
GradedSlice canonical_slice(const Poset& p, int k);
GradedSlice anticanonical_slice(const Poset& p, int k);
GradedSlice trace_slice(const Poset& p, int k);

struct TraceMembership {
  bool member = false;
  std::optional<TraceDecomposition> witness;
};
TraceMembership trace_membership(const Poset& p, std::span<const Coord> v);

GeneratorSet minimal_canonical_generators(const Poset& p, int degree_bound = 0);
bool is_level(const Poset& p);

struct ComponentInvariants {
  std::vector<std::string> labels;
  std::size_t size = 0;
  int rank = 0;
  bool pure = false;
  int dimension = 0;
  int a_invariant = 0;
};

struct DimensionAndAInvariants {
  int dimension = 0;
  std::vector<ComponentInvariants> components;
};

/// Per component: dim = |P_i| + 1, a = -(rank P_i + 2); total dimension
/// sum(dim_i) - (m - 1). Throws InputError for the empty poset.
DimensionAndAInvariants dimension_and_a_invariants(const Poset& p);

enum class GorensteinStatus { Gorenstein, NearlyGorenstein, PuncturedGorenstein, Neither };
const char* status_name(GorensteinStatus s);

/// Height of tr(omega). For the unit ideal the value is dim R and unit_ideal
/// is set; reported() then returns -1.
struct TraceHeight {
  int value = 0;
  bool lower_bound = false;
  bool unit_ideal = false;

  int reported() const { return unit_ideal ? -1 : value; }
};

struct NonGorensteinLocus {
  int locus_dim = 0;  // 0 by convention for the unit ideal
  TraceHeight trace_height;
  /// Equality classes (P-hat vertex labels) of a largest trace-free face.
  std::vector<std::vector<std::string>> face_classes;
  std::size_t faces_examined = 0;
  std::vector<PosetExponent> trace_generators;
};

inline constexpr std::size_t kMaxFaceCovers = 22;

/// Enumerates faces of the Hibi cone and takes the largest one avoiding all
/// trace generators. Throws ResourceError when P-hat has more than 22 covers.
NonGorensteinLocus non_gorenstein_locus_dimension(const Poset& p, int gen_degree_bound = 0);

struct HibiClassificationOptions {
  /// Slices are compared with m^N through this degree; negative selects the
  /// default N + rank P-hat + 2.
  int slice_bound = -1;
  /// Compute the locus by face enumeration when some component is impure.
  bool compute_locus = true;
  /// Slice verification stops early once a component slice exceeds this.
  std::size_t slice_cap = 2'000'000;
};

struct HibiClassification {
  int dimension = 0;
  std::vector<ComponentInvariants> components;
  std::vector<int> a_invariants;
  int N = 0;
  GorensteinStatus status = GorensteinStatus::Neither;
  TraceHeight trace_height;
  /// Unknown when the face enumeration was skipped or too large.
  std::optional<int> non_gorenstein_locus_dim;
  /// Highest degree k for which tr_k was checked against (m^N)_k; -1 if none.
  int slices_verified_through = -1;
  int slice_bound = 0;
  /// An element of an impure component on which rank and dist disagree.
  std::optional<std::string> counterexample_vertex;
  std::vector<PosetExponent> trace_generators;
  /// Impure case: no power of t up to this degree lies in the trace. Equal
  /// to slice_bound when none was found; otherwise t^(value + 1) is a trace
  /// element.
  int no_t_power_through = -1;
};

HibiClassification classify(const Poset& p, const HibiClassificationOptions& options = {});

}  // namespace torictrace
