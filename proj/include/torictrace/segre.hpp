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

#include "torictrace/lattice.hpp"
#include "torictrace/poset.hpp"

namespace torictrace {

/// One graded factor of a Segre product, given by explicit slices. Exponent
/// coordinate 0 is the degree. Slices below the lowest degree of a module
/// are empty; slices above the stored range are unknown.
struct GradedFactor {
  std::string name;
  std::size_t width = 0;
  int dimension = 0;
  int a_invariant = 0;
  int beta_canonical = 0;
  int beta_anticanonical = 0;

  int ring_through = -1;
  int canonical_min = 0;
  int canonical_through = -1;
  int anticanonical_min = 0;
  int anticanonical_through = -1;

  std::map<int, PointSet> ring;
  std::map<int, PointSet> canonical;
  std::map<int, PointSet> anticanonical;

  /// Throw DomainError for a degree above the stored range.
  const PointSet& ring_slice(int k) const;
  const PointSet& canonical_slice(int k) const;
  const PointSet& anticanonical_slice(int k) const;

  /// Literal sumset of omega_i + omega^{-1}_{k-i} over all i.
  PointSet trace_slice(int k) const;
};

/// Factor from the Hibi ring of p with every slice needed for trace
/// computations through degree max_degree.
GradedFactor make_hibi_factor(const Poset& p, int max_degree, std::string name = {});

/// b = max beta(omega^{-1}) + max beta(omega).
int segre_threshold(const std::vector<GradedFactor>& factors);

/// Cartesian product of slices of equal degree k; each tuple becomes
/// (k; coordinates of factor 1 without degree; ...). Throws InputError on a
/// degree mismatch and ResourceError if the product exceeds cap.
GradedSlice segre_slice(const std::vector<GradedSlice>& factors,
                        std::size_t cap = 20'000'000);

struct SegreTraceComparison {
  int degree = 0;
  int threshold = 0;
  /// |tr(omega_{R_1})_k| * ... * |tr(omega_{R_m})_k|.
  std::uint64_t factorized_count = 0;
  /// Size of the degree-k sumset omega * omega^{-1} of the Segre product.
  std::uint64_t sumset_count = 0;
  bool equal = false;
  /// A monomial of the factorized slice missing from the sumset.
  std::optional<LatticePoint> difference;
  /// The factorized slice itself, when it has at most materialize_limit
  /// monomials.
  std::optional<GradedSlice> factorized;
};

/// Compares the Segre product of the factor traces in degree k with the
/// degree-k trace of the Segre product, without materializing the latter:
/// a tuple lies in the sumset iff the canonical degrees available to its
/// factor parts share a common value.
SegreTraceComparison compare_segre_trace(const std::vector<GradedFactor>& factors, int k,
                                         std::size_t materialize_limit = 100'000);

/// Checked form for k >= b: throws ThresholdError below b and
/// InconsistencyError if the two sides differ.
SegreTraceComparison segre_trace_truncation(const std::vector<GradedFactor>& factors, int k,
                                            std::size_t materialize_limit = 100'000);

/// Least k0 <= b such that the identity holds for every degree in [k0, b].
int least_agreeing_degree(const std::vector<GradedFactor>& factors);

/// a_max - a_min for a-invariants of Gorenstein factors; DomainError if some
/// a_i >= 0 or the list is empty.
int gorenstein_segre_trace_exponent(const std::vector<int>& a_invariants);

/// Height of an ideal of one factor; full marks height = dim (including the
/// unit ideal).
struct SegreHeight {
  int value = 0;
  bool full = false;
};

/// Height of I_1 # ... # I_m: dim R = sum dims - (m - 1) when every entry is
/// full, otherwise the least non-full height.
SegreHeight segre_height(const std::vector<SegreHeight>& heights, const std::vector<int>& dims);

}  // namespace torictrace
