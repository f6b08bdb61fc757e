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

#include "naive.hpp"

namespace torictrace::testing {

std::optional<Rational> naive_ray_parameter(const RatVector& b, const IntVector& a) {
  Eigen::Index i = 0;
  while (i < a.size() && a(i) == 0) ++i;
  if (i == a.size()) return std::nullopt;
  std::optional<Rational> best;
  // z - b_i ranges over [0, a_i) or (a_i, 0].
  Integer span = abs(a(i));
  Integer start = ceil(b(i)) - (a(i) < 0 ? span : Integer(0)) - 1;
  for (Integer z = start; z <= start + span + 1; ++z) {
    Rational t = (Rational(z) - b(i)) / Rational(a(i));
    if (t < 0 || t >= 1) continue;
    bool ok = true;
    for (Eigen::Index j = 0; j < a.size() && ok; ++j) ok = is_integral(b(j) + t * Rational(a(j)));
    if (ok && (!best || t < *best)) best = t;
  }
  return best;
}

IntVector random_primitive(std::mt19937_64& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  while (true) {
    IntVector v(n);
    for (int i = 0; i < n; ++i) v(i) = d(rng);
    if (is_primitive(v)) return v;
  }
}

SimplicialCone random_cone(std::mt19937_64& rng, int n, int lo, int hi) {
  while (true) {
    IntMatrix rays(n, n);
    for (int i = 0; i < n; ++i) rays.row(i) = random_primitive(rng, n, lo, hi).transpose();
    if (determinant(rays) != 0) return SimplicialCone::from_rays(rays);
  }
}

}  // namespace torictrace::testing
