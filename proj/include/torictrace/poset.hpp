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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace torictrace {

/// A finite poset kept as its Hasse diagram. Elements are indexed 0..n-1 in
/// order of first appearance; labels are opaque strings.
///
/// Construction always canonicalizes the input relation: whatever generating
/// set of strict relations is supplied, covers() is the transitive reduction
/// of its transitive closure. Instances are immutable.
class Poset {
 public:
  struct Cover {
    int lower;
    int upper;
    auto operator<=>(const Cover&) const = default;
  };

  Poset() = default;

  /// Elements are `labels` in order; each relation (u, v) means u < v.
  /// Throws InputError on duplicate labels or out-of-range indices and
  /// MalformedPosetError if the relation has a directed cycle.
  static Poset from_relations(std::vector<std::string> labels,
                              const std::vector<std::pair<int, int>>& relations);

  /// Labels are collected by first appearance: relations first, then any
  /// extra isolated elements not yet seen.
  static Poset from_labeled_relations(
      const std::vector<std::pair<std::string, std::string>>& relations,
      const std::vector<std::string>& extra_elements = {});

  /// v1 < v2 < ... < vn (labels prefix + index, 1-based).
  static Poset chain(int n, const std::string& prefix = "v");
  static Poset antichain(int n, const std::string& prefix = "v");

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(std::string_view label) const;

  /// Sorted by (lower, upper).
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_[i]; }
  const std::vector<int>& lower_covers(int i) const { return down_[i]; }

  bool less_equal(int i, int j) const;
  bool less(int i, int j) const { return i != j && less_equal(i, j); }
  bool comparable(int i, int j) const { return less_equal(i, j) || less_equal(j, i); }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  /// A fixed linear extension: repeatedly the smallest available index.
  const std::vector<int>& linear_extension() const { return linear_extension_; }

  /// Same elements, reversed order.
  Poset dual() const;

  /// Subposet on `elements` (kept in the given order).
  Poset induced(const std::vector<int>& elements) const;

  /// Elements renamed to prefix1..prefixN in index order.
  Poset relabeled(const std::string& prefix) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.covers_ == b.covers_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<int> linear_extension_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> leq_;  // row-major bitset of the reflexive order
};

/// Parses the text format: one relation per line "u < v" (chains "a < b < c"
/// and comma-separated relations are accepted), a line with a single label
/// declares an element, '#' starts a comment, blank lines are ignored.
Poset parse_poset(std::string_view text);

/// Inverse of parse_poset up to relation order: one "u < v" line per cover,
/// isolated elements on their own line.
std::string format_poset(const Poset& p);

/// Disjoint union; labels must not overlap.
Poset disjoint_union(const Poset& a, const Poset& b);

/// Components of the cover graph, ordered by their least element index.
std::vector<Poset> connected_components(const Poset& p);

/// The poset P-hat = P plus a bottom element -inf and a top element inf.
/// Indices 0..n-1 are the elements of P, bottom() == n, top() == n + 1.
class PosetHat {
 public:
  explicit PosetHat(Poset base);

  const Poset& base() const { return base_; }
  int size() const { return static_cast<int>(base_.size()) + 2; }
  int bottom() const { return static_cast<int>(base_.size()); }
  int top() const { return static_cast<int>(base_.size()) + 1; }

  /// Covers of P-hat, including -inf below every minimal element and inf
  /// above every maximal element.
  const std::vector<Poset::Cover>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return up_[x]; }
  const std::vector<int>& lower_covers(int x) const { return down_[x]; }

  /// bottom, a linear extension of P, top.
  const std::vector<int>& linear_extension() const { return order_; }

  bool less_equal(int x, int y) const;

  struct ChainLengths {
    int rank;  // longest chain length
    int dist;  // shortest chain length
  };
  /// Throws IncomparableError unless x <= y.
  ChainLengths rank_and_dist(int x, int y) const;

  int rank_from_bottom(int x) const { return rank_bottom_[x]; }
  int dist_from_bottom(int x) const { return dist_bottom_[x]; }
  int rank_to_top(int x) const { return rank_top_[x]; }
  int dist_to_top(int x) const { return dist_top_[x]; }

  /// rank(-inf, inf) = rank P + 2.
  int rank() const { return rank_top_[bottom()]; }

  std::string label(int x) const;

 private:
  Poset base_;
  std::vector<Poset::Cover> covers_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<int> order_;
  std::vector<int> rank_bottom_, dist_bottom_, rank_top_, dist_top_;
};

/// All maximal chains have the same length. Throws InputError on the empty
/// poset.
bool is_pure(const Poset& p);

/// Length of a longest chain (rank P); -1 for the empty poset.
int poset_rank(const Poset& p);

/// Downward-closed subset of a poset with at most 64 elements.
struct OrderIdeal {
  std::uint64_t members = 0;

  bool contains(int i) const { return (members >> i) & 1u; }
  int size() const;
  auto operator<=>(const OrderIdeal&) const = default;
};

inline constexpr std::size_t kDefaultOrderIdealLimit = 20;

/// Every order ideal, including the empty set and P itself, in a fixed
/// deterministic order. Throws ResourceError if |P| > max_elements (or 64).
std::vector<OrderIdeal> enumerate_order_ideals(
    const Poset& p, std::size_t max_elements = kDefaultOrderIdealLimit);

/// P1 (+) P2: every element of P1 below every element of P2. With
/// adjoin_min, P2 is first replaced by P2 with a new least element labeled
/// min_label (a fresh label is chosen when empty).
Poset ordinal_sum(const Poset& p1, const Poset& p2, bool adjoin_min,
                  std::string min_label = {});

/// The connected poset C (+) bar(Q + point), C a chain of b-a-1 elements and
/// Q a chain of a-2 elements, whose Hibi ring has a trace of height a and
/// dimension b. Requires 4 <= a < b (DomainError otherwise).
Poset construct_height_dim_poset(int a, int b);

}  // namespace torictrace
