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

#include "torictrace/segre.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "torictrace/errors.hpp"
#include "torictrace/hibi.hpp"

namespace torictrace {

namespace {

const PointSet& lookup(const std::map<int, PointSet>& slices, int k, int through,
                       std::size_t width, const char* what) {
  if (k > through)
    throw DomainError(std::string(what) + " slice in degree " + std::to_string(k) +
                      " is beyond the stored range (through " + std::to_string(through) + ")");
  auto it = slices.find(k);
  if (it != slices.end()) return it->second;
  thread_local std::map<std::size_t, PointSet> empties;
  return empties.try_emplace(width, PointSet(width)).first->second;
}

void sumset(const PointSet& a, const PointSet& b, PointSet::Builder& out) {
  const std::size_t w = a.width();
  LatticePoint s(w);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto x = a[i];
      auto y = b[j];
      for (std::size_t c = 0; c < w; ++c) s[c] = x[c] + y[c];
      out.add(s);
    }
}

}  // namespace

const PointSet& GradedFactor::ring_slice(int k) const {
  return lookup(ring, k, ring_through, width, "ring");
}

const PointSet& GradedFactor::canonical_slice(int k) const {
  return lookup(canonical, k, canonical_through, width, "canonical");
}

const PointSet& GradedFactor::anticanonical_slice(int k) const {
  return lookup(anticanonical, k, anticanonical_through, width, "anticanonical");
}

PointSet GradedFactor::trace_slice(int k) const {
  PointSet::Builder builder(width);
  for (int i = canonical_min; i <= k - anticanonical_min; ++i)
    sumset(canonical_slice(i), anticanonical_slice(k - i), builder);
  return std::move(builder).build();
}

GradedFactor make_hibi_factor(const Poset& p, int max_degree, std::string name) {
  HibiRing ring(p);
  GradedFactor f;
  f.name = name.empty() ? format_poset(p) : std::move(name);
  f.width = ring.width();
  f.dimension = ring.dimension();
  f.canonical_min = ring.lowest_degree(HibiModule::Canonical);
  f.anticanonical_min = ring.lowest_degree(HibiModule::Anticanonical);
  f.a_invariant = -f.canonical_min;
  f.beta_canonical = ring.minimal_generators(HibiModule::Canonical).max_degree();
  f.beta_anticanonical = ring.minimal_generators(HibiModule::Anticanonical).max_degree();
  f.ring_through = max_degree;
  f.canonical_through = max_degree - f.anticanonical_min;
  f.anticanonical_through = max_degree - f.canonical_min;
  for (int k = 0; k <= f.ring_through; ++k) f.ring.emplace(k, ring.ring_slice(k).monomials);
  for (int k = f.canonical_min; k <= f.canonical_through; ++k)
    f.canonical.emplace(k, ring.canonical_slice(k).monomials);
  for (int k = f.anticanonical_min; k <= f.anticanonical_through; ++k)
    f.anticanonical.emplace(k, ring.anticanonical_slice(k).monomials);
  return f;
}

int segre_threshold(const std::vector<GradedFactor>& factors) {
  if (factors.empty()) throw InputError("Segre product of no factors");
  int beta_anti = std::numeric_limits<int>::min(), beta_can = std::numeric_limits<int>::min();
  for (const auto& f : factors) {
    beta_anti = std::max(beta_anti, f.beta_anticanonical);
    beta_can = std::max(beta_can, f.beta_canonical);
  }
  return beta_anti + beta_can;
}

GradedSlice segre_slice(const std::vector<GradedSlice>& factors, std::size_t cap) {
  if (factors.empty()) throw InputError("Segre product of no factors");
  const int k = factors.front().degree;
  std::size_t width = 1;
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    if (f.degree != k)
      throw InputError("Segre slice factors have degrees " + std::to_string(k) + " and " +
                       std::to_string(f.degree));
    if (f.monomials.width() == 0) throw InputError("factor exponents must carry a degree");
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f.monomials[i][0] != k)
        throw InputError("monomial " + format_point(f.monomials[i]) + " is not of degree " +
                         std::to_string(k));
    width += f.monomials.width() - 1;
    total *= f.size();
    if (total > cap) throw ResourceError("Segre slice exceeds " + std::to_string(cap) + " monomials");
  }
  PointSet::Builder builder(width);
  LatticePoint point(width);
  point[0] = k;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t l, std::size_t offset) {
    if (l == factors.size()) {
      builder.add(point);
      return;
    }
    const PointSet& s = factors[l].monomials;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto row = s[i];
      std::copy(row.begin() + 1, row.end(), point.begin() + offset);
      fill(l + 1, offset + s.width() - 1);
    }
  };
  if (total > 0) fill(0, 1);
  return {k, std::move(builder).build()};
}

SegreTraceComparison compare_segre_trace(const std::vector<GradedFactor>& factors, int k,
                                         std::size_t materialize_limit) {
  SegreTraceComparison out;
  out.degree = k;
  out.threshold = segre_threshold(factors);

  int base = std::numeric_limits<int>::max(), top = std::numeric_limits<int>::min();
  for (const auto& f : factors) {
    base = std::min(base, f.canonical_min);
    top = std::max(top, k - f.anticanonical_min);
  }
  if (top - base + 1 > 64) throw ResourceError("canonical degree range exceeds 64 values");

  // Per factor: for each ring monomial, the mask of canonical degrees i with
  // the monomial in omega_i + omega^{-1}_{k-i}.
  struct Profile {
    const PointSet* ring = nullptr;
    std::vector<std::uint64_t> masks;
    std::map<std::uint64_t, std::uint64_t> histogram;  // nonzero masks only
    std::map<std::uint64_t, std::size_t> representative;
    std::vector<std::size_t> trace_points;
  };
  std::vector<Profile> profiles(factors.size());
  std::uint64_t factorized = 1;
  for (std::size_t l = 0; l < factors.size(); ++l) {
    const GradedFactor& f = factors[l];
    Profile& pr = profiles[l];
    if (k < 0) {
      factorized = 0;
      continue;
    }
    pr.ring = &f.ring_slice(k);
    pr.masks.assign(pr.ring->size(), 0);
    LatticePoint s(f.width);
    for (int i = f.canonical_min; i <= k - f.anticanonical_min; ++i) {
      const PointSet& a = f.canonical_slice(i);
      const PointSet& b = f.anticanonical_slice(k - i);
      for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y) {
          for (std::size_t c = 0; c < f.width; ++c) s[c] = a[x][c] + b[y][c];
          auto idx = pr.ring->find(s);
          if (!idx)
            throw InconsistencyError("omega * omega^{-1} element " + format_point(s) +
                                     " is not in the ring");
          pr.masks[*idx] |= std::uint64_t{1} << (i - base);
        }
    }
    for (std::size_t x = 0; x < pr.masks.size(); ++x) {
      if (pr.masks[x] == 0) continue;
      ++pr.histogram[pr.masks[x]];
      pr.representative.try_emplace(pr.masks[x], x);
      pr.trace_points.push_back(x);
    }
    factorized *= pr.trace_points.size();
  }
  out.factorized_count = factorized;

  if (factorized > 0) {
    std::uint64_t sum = 0;
    std::vector<std::pair<std::uint64_t, std::size_t>> chosen(factors.size());
    std::function<void(std::size_t, std::uint64_t, std::uint64_t)> combine =
        [&](std::size_t l, std::uint64_t mask, std::uint64_t count) {
          if (l == factors.size()) {
            if (mask != 0) {
              sum += count;
            } else if (!out.difference) {
              LatticePoint p{k};
              for (std::size_t j = 0; j < factors.size(); ++j) {
                auto row = (*profiles[j].ring)[chosen[j].second];
                p.insert(p.end(), row.begin() + 1, row.end());
              }
              out.difference = p;
            }
            return;
          }
          for (const auto& [m, c] : profiles[l].histogram) {
            chosen[l] = {m, profiles[l].representative.at(m)};
            combine(l + 1, mask & m, count * c);
          }
        };
    combine(0, ~std::uint64_t{0}, 1);
    out.sumset_count = sum;
  }
  out.equal = out.sumset_count == out.factorized_count;

  if (out.factorized_count <= materialize_limit) {
    std::vector<GradedSlice> traces;
    for (std::size_t l = 0; l < factors.size(); ++l) {
      PointSet::Builder b(factors[l].width);
      for (std::size_t x : profiles[l].trace_points) b.add((*profiles[l].ring)[x]);
      traces.push_back({k, std::move(b).build()});
    }
    out.factorized = segre_slice(traces);
  }
  return out;
}

SegreTraceComparison segre_trace_truncation(const std::vector<GradedFactor>& factors, int k,
                                            std::size_t materialize_limit) {
  const int b = segre_threshold(factors);
  if (k < b)
    throw ThresholdError("degree " + std::to_string(k) + " is below the threshold b = " +
                             std::to_string(b),
                         b);
  SegreTraceComparison c = compare_segre_trace(factors, k, materialize_limit);
  if (!c.equal)
    throw InconsistencyError("degree " + std::to_string(k) +
                             ": Segre product of traces differs from the trace, e.g. at " +
                             format_point(*c.difference));
  return c;
}

int least_agreeing_degree(const std::vector<GradedFactor>& factors) {
  const int b = segre_threshold(factors);
  int k = b;
  while (k > 0 && compare_segre_trace(factors, k - 1, 0).equal) --k;
  return k;
}

int gorenstein_segre_trace_exponent(const std::vector<int>& a_invariants) {
  if (a_invariants.empty()) throw DomainError("no a-invariants given");
  for (int a : a_invariants)
    if (a >= 0)
      throw DomainError("a-invariant " + std::to_string(a) +
                        " is not negative; the Segre trace formula needs a(R_i) < 0");
  auto [lo, hi] = std::minmax_element(a_invariants.begin(), a_invariants.end());
  return *hi - *lo;
}

SegreHeight segre_height(const std::vector<SegreHeight>& heights, const std::vector<int>& dims) {
  if (heights.empty() || heights.size() != dims.size())
    throw DomainError("segre_height needs one height per factor dimension");
  int dim = 0;
  bool all_full = true;
  int least = std::numeric_limits<int>::max();
  for (std::size_t j = 0; j < heights.size(); ++j) {
    if (dims[j] < 1) throw DomainError("factor dimension must be positive");
    dim += dims[j];
    const SegreHeight& h = heights[j];
    if (h.full) continue;
    if (h.value < 0 || h.value > dims[j])
      throw DomainError("height " + std::to_string(h.value) + " outside [0, " +
                        std::to_string(dims[j]) + "]");
    if (h.value == dims[j]) continue;
    all_full = false;
    least = std::min(least, h.value);
  }
  dim -= static_cast<int>(heights.size()) - 1;
  if (all_full) return {dim, true};
  return {least, false};
}

}  // namespace torictrace
