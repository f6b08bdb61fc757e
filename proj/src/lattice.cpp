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

#include "torictrace/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace torictrace {

namespace {

bool row_less(const Coord* a, const Coord* b, std::size_t w) {
  return std::lexicographical_compare(a, a + w, b, b + w);
}

}  // namespace

std::optional<std::size_t> PointSet::find(std::span<const Coord> p) const {
  if (p.size() != width_) return std::nullopt;
  if (width_ == 0) return zero_width_count_ > 0 ? std::optional<std::size_t>(0) : std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (row_less(data_.data() + mid * width_, p.data(), width_))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(p.begin(), p.end(), data_.data() + lo * width_)) return lo;
  return std::nullopt;
}

std::vector<LatticePoint> PointSet::points() const {
  std::vector<LatticePoint> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

void PointSet::Builder::add(std::span<const Coord> p) {
  if (p.size() != width_) throw std::invalid_argument("PointSet::Builder: width mismatch");
  if (width_ == 0) {
    ++count_;
    return;
  }
  data_.insert(data_.end(), p.begin(), p.end());
}

PointSet PointSet::Builder::build() && {
  PointSet out(width_);
  if (width_ == 0) {
    out.zero_width_count_ = count_ > 0 ? 1 : 0;
    return out;
  }
  const std::size_t n = data_.size() / width_;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const Coord* base = data_.data();
  const std::size_t w = width_;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return row_less(base + a * w, base + b * w, w);
  });
  out.data_.reserve(data_.size());
  const Coord* last = nullptr;
  for (std::size_t idx : order) {
    const Coord* row = base + idx * w;
    if (last != nullptr && std::equal(row, row + w, last)) continue;
    out.data_.insert(out.data_.end(), row, row + w);
    last = row;
  }
  data_.clear();
  data_.shrink_to_fit();
  return out;
}

PointSet make_point_set(std::size_t width, const std::vector<LatticePoint>& points) {
  PointSet::Builder b(width);
  for (const auto& p : points) b.add(p);
  return std::move(b).build();
}

std::optional<LatticePoint> first_difference(const PointSet& a, const PointSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b.contains(a[i])) return a.point(i);
  }
  return std::nullopt;
}

std::string format_point(std::span<const Coord> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

}  // namespace torictrace
