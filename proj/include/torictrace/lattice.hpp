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

namespace torictrace {

using Coord = std::int64_t;
using LatticePoint = std::vector<Coord>;

/// A finite set of integer points of a fixed width, stored row-major in one
/// buffer and kept sorted lexicographically without duplicates once built.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return width_ == 0 ? zero_width_count_ : data_.size() / width_; }
  bool empty() const { return size() == 0; }

  std::span<const Coord> operator[](std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }
  LatticePoint point(std::size_t i) const {
    auto row = (*this)[i];
    return {row.begin(), row.end()};
  }

  /// Binary search; the set must be finalized.
  bool contains(std::span<const Coord> p) const { return find(p).has_value(); }

  /// Position of p, if present.
  std::optional<std::size_t> find(std::span<const Coord> p) const;

  const std::vector<Coord>& data() const { return data_; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.width_ == b.width_ && a.size() == b.size() && a.data_ == b.data_;
  }

  /// All points, in order.
  std::vector<LatticePoint> points() const;

  class Builder;

 private:
  std::size_t width_ = 0;
  std::size_t zero_width_count_ = 0;
  std::vector<Coord> data_;
};

/// Accumulates points in any order with duplicates; build() sorts and dedups.
class PointSet::Builder {
 public:
  explicit Builder(std::size_t width) : width_(width) {}

  void add(std::span<const Coord> p);
  void add(const LatticePoint& p) { add(std::span<const Coord>(p)); }
  std::size_t pending() const { return width_ == 0 ? count_ : data_.size() / width_; }

  PointSet build() &&;

 private:
  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Coord> data_;
};

/// The monomials of one graded piece.
struct GradedSlice {
  int degree = 0;
  PointSet monomials;

  std::size_t size() const { return monomials.size(); }
  bool empty() const { return monomials.empty(); }
  bool contains(std::span<const Coord> m) const { return monomials.contains(m); }
};

PointSet make_point_set(std::size_t width, const std::vector<LatticePoint>& points);

/// Lexicographically first point of a that is not in b, if any.
std::optional<LatticePoint> first_difference(const PointSet& a, const PointSet& b);

std::string format_point(std::span<const Coord> p);

}  // namespace torictrace
