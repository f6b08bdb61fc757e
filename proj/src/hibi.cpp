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

#include "torictrace/hibi.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "torictrace/errors.hpp"

namespace torictrace {

int module_shift(HibiModule module) {
  switch (module) {
    case HibiModule::Ring:
      return 0;
    case HibiModule::Canonical:
      return 1;
    case HibiModule::Anticanonical:
      return -1;
  }
  return 0;
}

const char* module_name(HibiModule module) {
  switch (module) {
    case HibiModule::Ring:
      return "ring";
    case HibiModule::Canonical:
      return "canonical";
    case HibiModule::Anticanonical:
      return "anticanonical";
  }
  return "";
}

int GeneratorSet::min_degree() const {
  if (generators.empty()) throw DomainError("empty generator set");
  return static_cast<int>(generators.front()[0]);
}

int GeneratorSet::max_degree() const {
  if (generators.empty()) throw DomainError("empty generator set");
  return static_cast<int>(generators.back()[0]);
}

namespace {

Poset require_nonempty(Poset p) {
  if (p.empty()) throw InputError("the Hibi ring of the empty poset is not supported");
  return p;
}

}  // namespace

HibiRing::HibiRing(Poset p) : hat_(require_nonempty(std::move(p))) {
  const auto& order = hat_.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != hat_.top()) top_down_.push_back(*it);
}

std::size_t HibiRing::coordinate(int hat_vertex) const {
  if (hat_vertex == hat_.bottom()) return 0;
  if (hat_vertex == hat_.top()) throw DomainError("inf has no exponent coordinate");
  return static_cast<std::size_t>(hat_vertex) + 1;
}

Coord HibiRing::value(std::span<const Coord> m, int hat_vertex) const {
  if (hat_vertex == hat_.top()) return 0;
  if (hat_vertex == hat_.bottom()) return m[0];
  return m[static_cast<std::size_t>(hat_vertex) + 1];
}

PosetExponent HibiRing::power_of_t(int k) const {
  PosetExponent e(width(), 0);
  e[0] = k;
  return e;
}

int HibiRing::lowest_degree(HibiModule module) const {
  switch (module) {
    case HibiModule::Ring:
      return 0;
    case HibiModule::Canonical:
      return hat_.rank();
    case HibiModule::Anticanonical:
      return -hat_.dist_from_bottom(hat_.top());
  }
  return 0;
}

bool HibiRing::contains(HibiModule module, std::span<const Coord> m) const {
  if (m.size() != width()) return false;
  const int c = module_shift(module);
  for (auto cov : hat_.covers())
    if (value(m, cov.lower) < value(m, cov.upper) + c) return false;
  return true;
}

GradedSlice HibiRing::slice(HibiModule module, int k, std::size_t cap) const {
  const std::size_t w = width();
  PointSet::Builder builder(w);
  if (k < lowest_degree(module)) return {k, std::move(builder).build()};

  const int c = module_shift(module);
  const int bottom = hat_.bottom();
  std::vector<Coord> vals(hat_.size(), 0);
  std::vector<Coord> upper_bound(hat_.size(), 0);
  for (int v = 0; v < hat_.size(); ++v) {
    int r = c >= 0 ? hat_.rank_from_bottom(v) : hat_.dist_from_bottom(v);
    upper_bound[v] = static_cast<Coord>(k) - static_cast<Coord>(c) * r;
  }
  std::vector<Coord> point(w);

  // Top-down: every partial assignment respecting upper_bound extends.
  std::function<void(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == top_down_.size()) {
      point[0] = vals[bottom];
      for (std::size_t i = 0; i + 1 < w; ++i) point[i + 1] = vals[i];
      builder.add(point);
      if (builder.pending() > cap)
        throw ResourceError(std::string(module_name(module)) + " slice in degree " +
                            std::to_string(k) + " exceeds " + std::to_string(cap) +
                            " monomials");
      return;
    }
    const int v = top_down_[pos];
    Coord lb = std::numeric_limits<Coord>::min();
    for (int up : hat_.upper_covers(v)) lb = std::max(lb, vals[up] + c);
    if (v == bottom) {
      if (lb <= k) {
        vals[v] = k;
        assign(pos + 1);
      }
      return;
    }
    for (Coord x = lb; x <= upper_bound[v]; ++x) {
      vals[v] = x;
      assign(pos + 1);
    }
  };
  assign(0);
  return {k, std::move(builder).build()};
}

void HibiRing::require_ring_element(std::span<const Coord> v) const {
  if (v.size() != width())
    throw InputError("exponent has " + std::to_string(v.size()) + " coordinates, expected " +
                     std::to_string(width()));
  if (!contains(HibiModule::Ring, v))
    throw InputError("exponent " + format_point(v) + " is not a monomial of K[P]");
}

bool HibiRing::decomposition_bounds(std::span<const Coord> v, std::vector<long long>* upper,
                                    std::vector<long long>* lower) const {
  // Variables m on P-hat with m(inf) = 0 and, for each cover a < b,
  // 1 <= m(a) - m(b) <= v(a) - v(b) + 1. As difference constraints:
  // edge a -> b of weight -1 and edge b -> a of weight v(a) - v(b) + 1.
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  const int n = hat_.size();
  const auto& covers = hat_.covers();
  auto run = [&](bool reversed, std::vector<long long>& dist) {
    dist.assign(n, kInf);
    dist[hat_.top()] = 0;
    for (int pass = 0; pass <= n; ++pass) {
      bool changed = false;
      for (auto cov : covers) {
        const long long slack = value(v, cov.lower) - value(v, cov.upper) + 1;
        int from1 = cov.lower, to1 = cov.upper;  // weight -1
        int from2 = cov.upper, to2 = cov.lower;  // weight slack
        if (reversed) {
          std::swap(from1, to1);
          std::swap(from2, to2);
        }
        if (dist[from1] < kInf && dist[from1] - 1 < dist[to1]) {
          dist[to1] = dist[from1] - 1;
          changed = true;
        }
        if (dist[from2] < kInf && dist[from2] + slack < dist[to2]) {
          dist[to2] = dist[from2] + slack;
          changed = true;
        }
      }
      if (!changed) return true;
    }
    return false;
  };
  std::vector<long long> scratch;
  if (!run(false, upper ? *upper : scratch)) return false;
  if (lower && !run(true, *lower)) return false;
  return true;
}

std::optional<DegreeWindow> HibiRing::trace_window(std::span<const Coord> v) const {
  require_ring_element(v);
  std::vector<long long> up, down;
  if (!decomposition_bounds(v, &up, &down)) return std::nullopt;
  const int b = hat_.bottom();
  return DegreeWindow{static_cast<int>(-down[b]), static_cast<int>(up[b])};
}

std::optional<TraceDecomposition> HibiRing::trace_decomposition(std::span<const Coord> v) const {
  require_ring_element(v);
  std::vector<long long> up;
  if (!decomposition_bounds(v, &up, nullptr)) return std::nullopt;
  TraceDecomposition d;
  d.canonical.assign(width(), 0);
  d.canonical[0] = up[hat_.bottom()];
  for (std::size_t i = 0; i + 1 < width(); ++i) d.canonical[i + 1] = up[i];
  d.anticanonical.resize(width());
  for (std::size_t i = 0; i < width(); ++i) d.anticanonical[i] = v[i] - d.canonical[i];
  if (!contains(HibiModule::Canonical, d.canonical) ||
      !contains(HibiModule::Anticanonical, d.anticanonical))
    throw InconsistencyError("trace decomposition of " + format_point(v) + " failed to verify");
  return d;
}

GradedSlice HibiRing::trace_slice(int k, std::size_t cap) const {
  GradedSlice ring = ring_slice(k, cap);
  PointSet::Builder builder(width());
  std::vector<long long> up;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (decomposition_bounds(ring.monomials[i], &up, nullptr)) builder.add(ring.monomials[i]);
  return {k, std::move(builder).build()};
}

std::uint64_t HibiRing::ring_slice_count(int k, std::size_t cap) const {
  std::uint64_t total = 1;
  for (const Poset& comp : connected_components(poset()))
    total *= HibiRing(comp).ring_slice(k, cap).size();
  return total;
}

std::uint64_t HibiRing::trace_slice_count(int k, std::size_t cap) const {
  // A product monomial is in the trace iff the canonical-degree windows of
  // its component parts intersect: count tuples with max lo <= min hi by
  // the value t = max lo.
  std::vector<std::map<std::pair<int, int>, std::uint64_t>> windows;
  std::set<int> candidates;
  for (const Poset& comp : connected_components(poset())) {
    HibiRing ring(comp);
    GradedSlice r = ring.ring_slice(k, cap);
    auto& hist = windows.emplace_back();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (auto w = ring.trace_window(r.monomials[i])) {
        ++hist[{w->lo, w->hi}];
        candidates.insert(w->lo);
      }
    }
    if (hist.empty()) return 0;
  }
  std::uint64_t total = 0;
  for (int t : candidates) {
    std::uint64_t with_t = 1, below_t = 1;
    for (const auto& hist : windows) {
      std::uint64_t a = 0, b = 0;
      for (const auto& [w, count] : hist) {
        if (w.first <= t && w.second >= t) a += count;
        if (w.first <= t - 1 && w.second >= t) b += count;
      }
      with_t *= a;
      below_t *= b;
    }
    total += with_t - below_t;
  }
  return total;
}

bool HibiRing::is_minimal_generator(HibiModule module, std::span<const Coord> m) const {
  // m - (1; 1_I) stays in the module for some order ideal I unless the set
  // reachable from -inf by moving down a cover, or up a cover on which the
  // module inequality is tight, contains inf.
  const int c = module_shift(module);
  std::vector<char> seen(hat_.size(), 0);
  std::vector<int> stack{hat_.bottom()};
  seen[hat_.bottom()] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int a : hat_.lower_covers(x))
      if (!seen[a]) {
        seen[a] = 1;
        stack.push_back(a);
      }
    for (int b : hat_.upper_covers(x))
      if (!seen[b] && value(m, x) - value(m, b) == c) {
        seen[b] = 1;
        stack.push_back(b);
      }
  }
  return seen[hat_.top()] != 0;
}

GeneratorSet HibiRing::minimal_generators(HibiModule module, int degree_bound,
                                          std::size_t cap) const {
  const int n = static_cast<int>(poset().size());
  int proven = 0;
  switch (module) {
    case HibiModule::Ring:
      proven = 0;
      break;
    case HibiModule::Canonical:
      proven = n + 1;
      break;
    case HibiModule::Anticanonical:
      proven = n - 1;
      break;
  }
  GeneratorSet out;
  out.module = module;
  out.searched_through = std::max(degree_bound, proven);
  for (int d = lowest_degree(module); d <= out.searched_through; ++d) {
    GradedSlice s = slice(module, d, cap);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (is_minimal_generator(module, s.monomials[i])) out.generators.push_back(s.monomials.point(i));
  }
  return out;
}

std::vector<PosetExponent> HibiRing::trace_generators(std::size_t cap) const {
  GeneratorSet can = minimal_generators(HibiModule::Canonical, 0, cap);
  GeneratorSet anti = minimal_generators(HibiModule::Anticanonical, 0, cap);
  PointSet::Builder builder(width());
  PosetExponent sum(width());
  for (const auto& g : can.generators)
    for (const auto& h : anti.generators) {
      for (std::size_t i = 0; i < width(); ++i) sum[i] = g[i] + h[i];
      builder.add(sum);
    }
  return std::move(builder).build().points();
}

// ---------------------------------------------------------------------------

GradedSlice canonical_slice(const Poset& p, int k) { return HibiRing(p).canonical_slice(k); }

GradedSlice anticanonical_slice(const Poset& p, int k) {
  return HibiRing(p).anticanonical_slice(k);
}

GradedSlice trace_slice(const Poset& p, int k) { return HibiRing(p).trace_slice(k); }

TraceMembership trace_membership(const Poset& p, std::span<const Coord> v) {
  TraceMembership out;
  out.witness = HibiRing(p).trace_decomposition(v);
  out.member = out.witness.has_value();
  return out;
}

GeneratorSet minimal_canonical_generators(const Poset& p, int degree_bound) {
  return HibiRing(p).minimal_generators(HibiModule::Canonical, degree_bound);
}

bool is_level(const Poset& p) {
  GeneratorSet g = minimal_canonical_generators(p);
  return g.min_degree() == g.max_degree();
}

DimensionAndAInvariants dimension_and_a_invariants(const Poset& p) {
  if (p.empty()) throw InputError("dimension_and_a_invariants: empty poset");
  DimensionAndAInvariants out;
  auto comps = connected_components(p);
  int total = 0;
  for (const Poset& c : comps) {
    ComponentInvariants ci;
    ci.labels = c.labels();
    ci.size = c.size();
    ci.rank = poset_rank(c);
    ci.pure = is_pure(c);
    ci.dimension = static_cast<int>(c.size()) + 1;
    ci.a_invariant = -(ci.rank + 2);
    total += ci.dimension;
    out.components.push_back(std::move(ci));
  }
  out.dimension = total - (static_cast<int>(comps.size()) - 1);
  return out;
}

const char* status_name(GorensteinStatus s) {
  switch (s) {
    case GorensteinStatus::Gorenstein:
      return "gorenstein";
    case GorensteinStatus::NearlyGorenstein:
      return "nearly_gorenstein";
    case GorensteinStatus::PuncturedGorenstein:
      return "punctured_gorenstein";
    case GorensteinStatus::Neither:
      return "neither";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Faces of the Hibi cone

namespace {

struct UnionFind {
  std::vector<int> parent;
  int components;

  explicit UnionFind(int n) : parent(n), components(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent[std::max(a, b)] = std::min(a, b);
    --components;
  }
};

// Class id per P-hat vertex after merging union-find classes and the
// strongly connected components of the contracted cover digraph. Ids are
// numbered by least vertex.
std::vector<int> face_classes(UnionFind uf, const std::vector<Poset::Cover>& covers, int n) {
  // Reachability on the contracted graph (n <= 24 vertices).
  std::vector<std::uint32_t> reach(n, 0);
  for (int v = 0; v < n; ++v) reach[uf.find(v)] |= 1u << uf.find(v);
  std::vector<std::uint32_t> adj(n, 0);
  for (auto c : covers) adj[uf.find(c.lower)] |= 1u << uf.find(c.upper);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      std::uint32_t r = reach[v];
      for (int w = 0; w < n; ++w)
        if ((adj[v] >> w) & 1u) r |= reach[w];
      if (r != reach[v]) {
        reach[v] = r;
        changed = true;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    int rv = uf.find(v);
    for (int w = 0; w < n; ++w) {
      int rw = uf.find(w);
      if (rv != rw && ((reach[rv] >> rw) & 1u) && ((reach[rw] >> rv) & 1u)) uf.unite(rv, rw);
    }
  }
  std::vector<int> id(n, -1), out(n);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (id[r] < 0) id[r] = next++;
    out[v] = id[r];
  }
  return out;
}

}  // namespace

NonGorensteinLocus non_gorenstein_locus_dimension(const Poset& p, int gen_degree_bound) {
  HibiRing ring(p);
  const PosetHat& hat = ring.hat();
  const auto& covers = hat.covers();
  if (covers.size() > kMaxFaceCovers)
    throw ResourceError("face enumeration needs 2^" + std::to_string(covers.size()) +
                        " cover subsets (limit 2^22); use the purity-based classification");
  (void)gen_degree_bound;  // the generator search always runs to its proven bound

  NonGorensteinLocus out;
  out.trace_generators = ring.trace_generators();
  const int n = hat.size();
  const int dim = ring.dimension();

  for (const auto& g : out.trace_generators) {
    if (std::all_of(g.begin(), g.end(), [](Coord x) { return x == 0; })) {
      out.locus_dim = 0;
      out.trace_height = {dim, false, true};
      return out;
    }
  }

  auto value = [&](const PosetExponent& g, int v) -> Coord {
    if (v == hat.top()) return 0;
    return g[ring.coordinate(v)];
  };
  auto trace_free = [&](const std::vector<int>& cls, int num_classes) {
    for (const auto& g : out.trace_generators) {
      std::vector<Coord> rep(num_classes, 0);
      std::vector<char> set(num_classes, 0);
      bool constant = true;
      for (int v = 0; v < n && constant; ++v) {
        Coord x = value(g, v);
        if (!set[cls[v]]) {
          set[cls[v]] = 1;
          rep[cls[v]] = x;
        } else if (rep[cls[v]] != x) {
          constant = false;
        }
      }
      if (constant) return false;
    }
    return true;
  };

  int best = -1;
  std::vector<int> best_classes;
  std::set<std::vector<int>> seen;
  std::function<void(std::size_t, UnionFind&)> visit = [&](std::size_t idx, UnionFind& uf) {
    if (uf.components - 1 <= best) return;
    if (idx == covers.size()) {
      std::vector<int> cls = face_classes(uf, covers, n);
      if (!seen.insert(cls).second) return;
      int num = *std::max_element(cls.begin(), cls.end()) + 1;
      if (num - 1 > best && trace_free(cls, num)) {
        best = num - 1;
        best_classes = cls;
      }
      return;
    }
    visit(idx + 1, uf);
    UnionFind merged = uf;
    merged.unite(covers[idx].lower, covers[idx].upper);
    if (merged.components != uf.components) visit(idx + 1, merged);
  };
  UnionFind start(n);
  visit(0, start);

  out.faces_examined = seen.size();
  if (best < 0) throw InconsistencyError("no trace-free face although tr(omega) is proper");
  out.locus_dim = best;
  out.trace_height = {dim - best, false, false};
  int num = *std::max_element(best_classes.begin(), best_classes.end()) + 1;
  out.face_classes.assign(num, {});
  for (int v = 0; v < n; ++v) out.face_classes[best_classes[v]].push_back(hat.label(v));
  return out;
}

// ---------------------------------------------------------------------------

HibiClassification classify(const Poset& p, const HibiClassificationOptions& options) {
  DimensionAndAInvariants inv = dimension_and_a_invariants(p);
  HibiRing ring(p);
  HibiClassification out;
  out.dimension = inv.dimension;
  out.components = inv.components;
  bool all_pure = true;
  int min_rank = std::numeric_limits<int>::max(), max_rank = std::numeric_limits<int>::min();
  for (const auto& c : inv.components) {
    out.a_invariants.push_back(c.a_invariant);
    all_pure = all_pure && c.pure;
    min_rank = std::min(min_rank, c.rank);
    max_rank = std::max(max_rank, c.rank);
  }
  out.N = max_rank - min_rank;
  out.slice_bound = options.slice_bound >= 0 ? options.slice_bound : out.N + ring.hat().rank() + 2;

  if (all_pure) {
    out.status = out.N == 0   ? GorensteinStatus::Gorenstein
                 : out.N == 1 ? GorensteinStatus::NearlyGorenstein
                              : GorensteinStatus::PuncturedGorenstein;
    out.trace_height = {out.dimension, false, out.N == 0};
    out.non_gorenstein_locus_dim = 0;
    for (int k = 0; k <= out.slice_bound; ++k) {
      std::uint64_t trace = 0, expected = 0;
      try {
        trace = ring.trace_slice_count(k, options.slice_cap);
        expected = k >= out.N ? ring.ring_slice_count(k, options.slice_cap) : 0;
      } catch (const ResourceError&) {
        break;
      }
      if (trace != expected)
        throw InconsistencyError("degree " + std::to_string(k) + ": tr(omega) has " +
                                 std::to_string(trace) + " monomials but m^" +
                                 std::to_string(out.N) + " has " + std::to_string(expected));
      out.slices_verified_through = k;
    }
    return out;
  }

  out.status = GorensteinStatus::Neither;
  const PosetHat& hat = ring.hat();
  for (int v = 0; v < static_cast<int>(p.size()) && !out.counterexample_vertex; ++v) {
    if (hat.rank_to_top(v) != hat.dist_to_top(v) ||
        hat.rank_from_bottom(v) != hat.dist_from_bottom(v))
      out.counterexample_vertex = p.label(v);
  }
  for (int l = 0; l <= out.slice_bound; ++l) {
    if (ring.trace_window(ring.power_of_t(l))) break;
    out.no_t_power_through = l;
  }
  // Normal rings are Gorenstein in codimension one.
  out.trace_height = {std::min(2, out.dimension), true, false};
  if (options.compute_locus) {
    try {
      NonGorensteinLocus locus = non_gorenstein_locus_dimension(p);
      out.trace_height = locus.trace_height;
      out.non_gorenstein_locus_dim = locus.locus_dim;
      out.trace_generators = std::move(locus.trace_generators);
    } catch (const ResourceError&) {
    }
  }
  return out;
}

}  // namespace torictrace
