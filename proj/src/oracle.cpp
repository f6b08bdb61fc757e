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

#include "torictrace/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>

#include "torictrace/errors.hpp"

namespace torictrace {

namespace {

constexpr std::size_t kDefaultEnumCap = 10'000'000;

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

std::string str(const Integer& z) { return to_string(z); }

std::vector<std::vector<Coord>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<Coord>> rows(m.rows(), std::vector<Coord>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[i][j] = to_int64(m(i, j));
  return rows;
}

int rank_of(const std::vector<LatticePoint>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t w = vectors.front().size();
  std::vector<std::vector<Rational>> a;
  for (const auto& v : vectors) a.emplace_back(v.begin(), v.end());
  int rank = 0;
  for (std::size_t col = 0; col < w && rank < static_cast<int>(a.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < w; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Integer BoundedRegion::volume() const {
  Integer v = 1;
  for (std::size_t i = 0; i < width; ++i) {
    if (upper[i] < lower[i]) return 0;
    v *= Integer(upper[i]) - Integer(lower[i]) + 1;
  }
  return v;
}

std::size_t enumeration_cap() {
  if (const char* env = std::getenv("TORICTRACE_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultEnumCap;
}

PointSet enumerate_slice(const BoundedRegion& region, std::optional<std::size_t> cap) {
  const std::size_t w = region.width;
  if (region.lower.size() != w || region.upper.size() != w)
    throw InputError("region bounds do not match its width");
  for (const auto& ineq : region.inequalities)
    if (ineq.coeffs.size() != w) throw InputError("inequality does not match the region width");
  const std::size_t limit = cap.value_or(enumeration_cap());
  const Integer volume = region.volume();
  if (volume > Integer(limit))
    throw ResourceError("enumeration box has " + str(volume) + " points (cap " +
                        std::to_string(limit) + ")");

  PointSet::Builder builder(w);
  if (volume == 0) return std::move(builder).build();

  // best[q][i]: largest value of sum_{c >= i} coeffs[c] x_c over the box.
  const std::size_t m = region.inequalities.size();
  std::vector<std::vector<Coord>> best(m, std::vector<Coord>(w + 1, 0));
  for (std::size_t q = 0; q < m; ++q)
    for (std::size_t i = w; i-- > 0;) {
      Coord a = region.inequalities[q].coeffs[i];
      best[q][i] = best[q][i + 1] + std::max(a * region.lower[i], a * region.upper[i]);
    }

  LatticePoint x(w);
  std::vector<Coord> partial(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w) {
      builder.add(x);
      return;
    }
    Coord lo = region.lower[i], hi = region.upper[i];
    for (std::size_t q = 0; q < m && lo <= hi; ++q) {
      Coord a = region.inequalities[q].coeffs[i];
      // a x_i >= rhs - partial - best of the later coordinates
      Coord need = region.inequalities[q].rhs - partial[q] - best[q][i + 1];
      if (a > 0) lo = std::max(lo, ceil_div(need, a));
      else if (a < 0) hi = std::min(hi, floor_div(-need, -a));
      else if (need > 0) hi = lo - 1;
    }
    for (Coord v = lo; v <= hi; ++v) {
      x[i] = v;
      for (std::size_t q = 0; q < m; ++q) partial[q] += region.inequalities[q].coeffs[i] * v;
      rec(i + 1);
      for (std::size_t q = 0; q < m; ++q) partial[q] -= region.inequalities[q].coeffs[i] * v;
    }
  };
  rec(0);
  return std::move(builder).build();
}

// ---------------------------------------------------------------------------

HatChains hat_chains(const Poset& p) {
  const int n = static_cast<int>(p.size());
  HatChains h;
  h.bottom = n;
  h.top = n + 1;
  std::vector<std::vector<int>> up(n + 2);
  for (const auto& c : p.covers()) h.covers.emplace_back(c.lower, c.upper);
  for (int v = 0; v < n; ++v) {
    if (p.lower_covers(v).empty()) h.covers.emplace_back(h.bottom, v);
    if (p.upper_covers(v).empty()) h.covers.emplace_back(v, h.top);
  }
  if (n == 0) h.covers.emplace_back(h.bottom, h.top);
  for (auto [a, b] : h.covers) up[a].push_back(b);

  const int inf = std::numeric_limits<int>::max();
  h.longest_from_bottom.assign(n + 2, -1);
  h.shortest_from_bottom.assign(n + 2, inf);
  h.longest_to_top.assign(n + 2, -1);
  h.shortest_to_top.assign(n + 2, inf);

  // Walk every saturated chain starting at the bottom; each prefix ends at
  // some vertex and each chain through a vertex continues to the top.
  std::vector<int> path{h.bottom};
  std::function<void()> walk = [&]() {
    const int v = path.back();
    const int len = static_cast<int>(path.size()) - 1;
    h.longest_from_bottom[v] = std::max(h.longest_from_bottom[v], len);
    h.shortest_from_bottom[v] = std::min(h.shortest_from_bottom[v], len);
    if (v == h.top) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        int rest = static_cast<int>(path.size() - 1 - i);
        h.longest_to_top[path[i]] = std::max(h.longest_to_top[path[i]], rest);
        h.shortest_to_top[path[i]] = std::min(h.shortest_to_top[path[i]], rest);
      }
      return;
    }
    for (int w : up[v]) {
      path.push_back(w);
      walk();
      path.pop_back();
    }
  };
  walk();
  return h;
}

BoundedRegion hibi_region(const Poset& p, HibiModule module, int k) {
  const HatChains h = hat_chains(p);
  const int n = static_cast<int>(p.size());
  const Coord c = module_shift(module);
  auto coord = [&](int v) { return v == h.bottom ? 0 : v + 1; };

  BoundedRegion r;
  r.width = n + 1;
  for (auto [a, b] : h.covers) {
    LinearInequality ineq;
    ineq.coeffs.assign(r.width, 0);
    ineq.coeffs[coord(a)] += 1;
    if (b != h.top) ineq.coeffs[coord(b)] -= 1;
    ineq.rhs = c;
    r.inequalities.push_back(std::move(ineq));
  }
  r.lower.assign(r.width, 0);
  r.upper.assign(r.width, 0);
  r.lower[0] = r.upper[0] = k;
  for (int v = 0; v < n; ++v) {
    if (c >= 0) {
      r.lower[v + 1] = c * h.longest_to_top[v];
      r.upper[v + 1] = k - c * h.longest_from_bottom[v];
    } else {
      r.lower[v + 1] = c * h.shortest_to_top[v];
      r.upper[v + 1] = k - c * h.shortest_from_bottom[v];
    }
  }
  return r;
}

PointSet brute_hibi_slice(const Poset& p, HibiModule module, int k) {
  return enumerate_slice(hibi_region(p, module, k));
}

PointSet brute_trace_slice(const std::map<int, PointSet>& canonical,
                           const std::map<int, PointSet>& anticanonical, int k) {
  std::size_t w = 0;
  if (!canonical.empty()) w = canonical.begin()->second.width();
  else if (!anticanonical.empty()) w = anticanonical.begin()->second.width();
  PointSet::Builder builder(w);
  LatticePoint s(w);
  for (const auto& [i, a] : canonical) {
    auto it = anticanonical.find(k - i);
    if (it == anticanonical.end()) continue;
    const PointSet& b = it->second;
    if (a.width() != b.width()) throw InputError("slices of different widths");
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < b.size(); ++y) {
        for (std::size_t c = 0; c < w; ++c) s[c] = a[x][c] + b[y][c];
        builder.add(s);
      }
  }
  return std::move(builder).build();
}

namespace {

struct HibiDegreeRange {
  int canonical_low;
  int anticanonical_low;
};

HibiDegreeRange degree_range(const Poset& p) {
  HatChains h = hat_chains(p);
  return {h.longest_to_top[h.bottom], -h.shortest_to_top[h.bottom]};
}

}  // namespace

PointSet brute_hibi_trace_slice(const Poset& p, int k) {
  const HibiDegreeRange d = degree_range(p);
  std::map<int, PointSet> can, anti;
  for (int i = d.canonical_low; i <= k - d.anticanonical_low; ++i) {
    can.emplace(i, brute_hibi_slice(p, HibiModule::Canonical, i));
    anti.emplace(k - i, brute_hibi_slice(p, HibiModule::Anticanonical, k - i));
  }
  if (can.empty()) return PointSet(p.size() + 1);
  return brute_trace_slice(can, anti, k);
}

ComponentTraceProfile component_trace_profile(const Poset& p, int k) {
  ComponentTraceProfile out;
  if (k < 0) return out;
  const HibiDegreeRange range = degree_range(p);
  PointSet ring = brute_hibi_slice(p, HibiModule::Ring, k);
  std::vector<std::uint64_t> masks(ring.size(), 0);
  LatticePoint s(p.size() + 1);
  for (int i = range.canonical_low; i <= k - range.anticanonical_low; ++i) {
    if (i > 63) throw ResourceError("canonical degree " + std::to_string(i) + " exceeds 63");
    PointSet a = brute_hibi_slice(p, HibiModule::Canonical, i);
    PointSet b = brute_hibi_slice(p, HibiModule::Anticanonical, k - i);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < b.size(); ++y) {
        for (std::size_t q = 0; q < s.size(); ++q) s[q] = a[x][q] + b[y][q];
        auto idx = ring.find(s);
        if (!idx) throw InconsistencyError("sum " + format_point(s) + " is not in the ring");
        masks[*idx] |= std::uint64_t{1} << i;
      }
  }
  out.ring_count = ring.size();
  for (auto m : masks) {
    ++out.histogram[m];
    if (m != 0) ++out.trace_count;
  }
  return out;
}

ProductTraceSummary combine_trace_profiles(const std::vector<ComponentTraceProfile>& profiles) {
  if (profiles.empty()) throw InputError("no components");
  ProductTraceSummary out;
  out.ring_count = 1;
  for (const auto& p : profiles) out.ring_count *= p.ring_count;
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> combine =
      [&](std::size_t l, std::uint64_t mask, std::uint64_t count) {
        if (mask == 0) return;
        if (l == profiles.size()) {
          out.trace_count += count;
          return;
        }
        for (const auto& [m, cnt] : profiles[l].histogram) combine(l + 1, mask & m, count * cnt);
      };
  combine(0, ~std::uint64_t{0}, 1);
  out.all = out.trace_count == out.ring_count;
  out.none = out.trace_count == 0;
  return out;
}

ProductTraceSummary brute_product_trace(const std::vector<Poset>& components, int k) {
  if (components.empty()) throw InputError("no components");
  std::vector<ComponentTraceProfile> profiles;
  for (const auto& c : components) profiles.push_back(component_trace_profile(c, k));
  return combine_trace_profiles(profiles);
}

namespace {

bool satisfies(const BoundedRegion& r, std::span<const Coord> x) {
  for (const auto& ineq : r.inequalities) {
    Coord s = 0;
    for (std::size_t c = 0; c < r.width; ++c) s += ineq.coeffs[c] * x[c];
    if (s < ineq.rhs) return false;
  }
  return true;
}

// Minimal elements of a module through degree max_degree: x is minimal iff
// x - g leaves the module for every degree-one ring element g.
std::vector<LatticePoint> brute_generators(const Poset& p, HibiModule module, int low,
                                           int max_degree, const PointSet& ring_one) {
  std::vector<LatticePoint> out;
  LatticePoint y(p.size() + 1);
  for (int d = low; d <= max_degree; ++d) {
    PointSet slice = brute_hibi_slice(p, module, d);
    const BoundedRegion below = hibi_region(p, module, d - 1);
    for (std::size_t i = 0; i < slice.size(); ++i) {
      bool minimal = true;
      for (std::size_t g = 0; g < ring_one.size() && minimal; ++g) {
        for (std::size_t c = 0; c < y.size(); ++c) y[c] = slice[i][c] - ring_one[g][c];
        if (satisfies(below, y)) minimal = false;
      }
      if (minimal) out.push_back(slice.point(i));
    }
  }
  return out;
}

}  // namespace

BruteTraceHeight brute_trace_height(const Poset& p, int max_trace_degree) {
  const HatChains h = hat_chains(p);
  const int n = static_cast<int>(p.size());
  if (h.covers.size() > 64) throw ResourceError("more than 64 covers");
  auto coord = [&](int v) { return v == h.bottom ? 0 : v + 1; };
  auto tight = [&](std::span<const Coord> x) {
    std::uint64_t t = 0;
    for (std::size_t q = 0; q < h.covers.size(); ++q) {
      auto [a, b] = h.covers[q];
      Coord xb = b == h.top ? 0 : x[coord(b)];
      if (x[coord(a)] == xb) t |= std::uint64_t{1} << q;
    }
    return t;
  };
  const std::uint64_t all =
      h.covers.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.covers.size()) - 1;

  PointSet gens = brute_hibi_slice(p, HibiModule::Ring, 1);
  std::vector<std::uint64_t> gen_tight;
  for (std::size_t i = 0; i < gens.size(); ++i) gen_tight.push_back(tight(gens[i]));

  std::set<std::uint64_t> family{all};
  for (auto t : gen_tight) {
    std::set<std::uint64_t> next = family;
    for (auto s : family) next.insert(s & t);
    family = std::move(next);
  }

  // Generators of omega lie in degrees <= |P| + 1 and those of omega^{-1}
  // in degrees <= |P| - 1; a trace point on a face dominates a product of
  // generators on the same face.
  const HibiDegreeRange range = degree_range(p);
  int can_top = n + 1, anti_top = n - 1;
  if (max_trace_degree >= 0) {
    can_top = std::min(can_top, max_trace_degree - range.anticanonical_low);
    anti_top = std::min(anti_top, max_trace_degree - range.canonical_low);
  }
  auto can = brute_generators(p, HibiModule::Canonical, range.canonical_low, can_top, gens);
  auto anti =
      brute_generators(p, HibiModule::Anticanonical, range.anticanonical_low, anti_top, gens);

  BruteTraceHeight out;
  std::set<std::uint64_t> trace_tight;
  LatticePoint s(n + 1);
  for (const auto& a : can)
    for (const auto& b : anti) {
      bool zero = true;
      for (int c = 0; c <= n; ++c) {
        s[c] = a[c] + b[c];
        zero = zero && s[c] == 0;
      }
      out.unit_ideal = out.unit_ideal || zero;
      trace_tight.insert(tight(s));
    }
  out.faces = family.size();
  const int dim = n + 1;
  if (out.unit_ideal) {
    out.height = dim;
    out.locus_dim = 0;
    return out;
  }
  int best = -1;
  for (auto f : family) {
    bool trace_free = std::none_of(trace_tight.begin(), trace_tight.end(),
                                   [&](std::uint64_t t) { return (t & f) == f; });
    if (!trace_free) continue;
    std::vector<LatticePoint> members;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if ((gen_tight[i] & f) == f) members.push_back(gens.point(i));
    best = std::max(best, rank_of(members));
  }
  if (best < 0) throw InconsistencyError("no trace-free face although 1 is not in the trace");
  out.height = dim - best;
  out.locus_dim = best;
  return out;
}

// ---------------------------------------------------------------------------

BoundedRegion cone_pairing_box(const IntMatrix& normals, const std::vector<std::int64_t>& low,
                               const std::vector<std::int64_t>& high) {
  const Eigen::Index n = normals.rows();
  if (normals.cols() != n || static_cast<Eigen::Index>(low.size()) != n ||
      static_cast<Eigen::Index>(high.size()) != n)
    throw InputError("pairing box does not match the normal matrix");
  const RatMatrix inv = inverse(normals);
  const auto rows = to_rows(normals);
  BoundedRegion r;
  r.width = n;
  r.lower.assign(n, 0);
  r.upper.assign(n, 0);
  for (Eigen::Index j = 0; j < n; ++j) {
    LinearInequality lo{rows[j], low[j]};
    LinearInequality hi{rows[j], -high[j]};
    for (auto& a : hi.coeffs) a = -a;
    r.inequalities.push_back(std::move(lo));
    r.inequalities.push_back(std::move(hi));
  }
  // m = U^{-1} p with p in the box [low, high].
  for (Eigen::Index i = 0; i < n; ++i) {
    Rational mn = 0, mx = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      Rational a = inv(i, j) * Rational(low[j]);
      Rational b = inv(i, j) * Rational(high[j]);
      mn += std::min(a, b);
      mx += std::max(a, b);
    }
    r.lower[i] = to_int64(floor(mn));
    r.upper[i] = to_int64(ceil(mx));
  }
  return r;
}

BoundedRegion cone_region(const IntMatrix& normals, int shift, std::int64_t degree_cap) {
  const Eigen::Index n = normals.rows();
  std::vector<std::int64_t> low(n, shift), high(n, degree_cap - (n - 1) * shift);
  BoundedRegion r = cone_pairing_box(normals, low, high);
  LinearInequality sum;
  sum.coeffs.assign(n, 0);
  const auto rows = to_rows(normals);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index c = 0; c < n; ++c) sum.coeffs[c] -= rows[j][c];
  sum.rhs = -degree_cap;
  r.inequalities.push_back(std::move(sum));
  return r;
}

std::vector<LatticePoint> minimal_module_points(const IntMatrix& normals, int shift,
                                                std::int64_t degree_cap) {
  PointSet pts = enumerate_slice(cone_region(normals, shift, degree_cap));
  const auto rows = to_rows(normals);
  std::vector<std::vector<Coord>> pair(pts.size(), std::vector<Coord>(rows.size(), 0));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (std::size_t c = 0; c < rows[j].size(); ++c) pair[i][j] += rows[j][c] * pts[i][c];
  std::vector<LatticePoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool minimal = true;
    for (std::size_t k = 0; k < pts.size() && minimal; ++k) {
      if (k == i) continue;
      bool below = true;
      for (std::size_t j = 0; j < rows.size() && below; ++j) below = pair[k][j] <= pair[i][j];
      if (below) minimal = false;
    }
    if (minimal) out.push_back(pts.point(i));
  }
  return out;
}

std::optional<LatticePoint> ray_scan(const SimplicialCone& cone, int i) {
  const Eigen::Index n = cone.dimension();
  if (i < 0 || i >= n) throw InputError("ray index out of range");
  std::vector<std::int64_t> low(n, 1), high(n, 1);
  high[i] = to_int64(cone.normal(i).dot(cone.ray(i)));
  PointSet pts = enumerate_slice(cone_pairing_box(cone.normals(), low, high));
  if (pts.empty()) return std::nullopt;
  // Pairings with u_i increase along the ray; pick the least.
  const auto u = to_rows(cone.normals())[i];
  std::optional<LatticePoint> best;
  Coord best_pair = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    Coord s = 0;
    for (Eigen::Index c = 0; c < n; ++c) s += u[c] * pts[k][c];
    if (!best || s < best_pair) {
      best = pts.point(k);
      best_pair = s;
    }
  }
  return best;
}

std::optional<LatticePoint> integral_cone_point(const SimplicialCone& cone) {
  const Eigen::Index n = cone.dimension();
  std::vector<std::int64_t> ones(n, 1);
  PointSet pts = enumerate_slice(cone_pairing_box(cone.normals(), ones, ones));
  if (pts.empty()) return std::nullopt;
  return pts.point(0);
}

bool brute_cone_trace_member(const SimplicialCone& cone, const LatticePoint& v) {
  const Eigen::Index n = cone.dimension();
  if (static_cast<Eigen::Index>(v.size()) != n) throw InputError("dimension mismatch");
  const auto rows = to_rows(cone.normals());
  std::vector<std::int64_t> low(n, 1), high(n, 0);
  for (Eigen::Index j = 0; j < n; ++j) {
    Coord s = 0;
    for (Eigen::Index c = 0; c < n; ++c) s += rows[j][c] * v[c];
    high[j] = s + 1;
    if (high[j] < 1) return false;
  }
  return !enumerate_slice(cone_pairing_box(cone.normals(), low, high)).empty();
}

// ---------------------------------------------------------------------------

void VerifyResult::fail(const std::string& what, std::optional<LatticePoint> diff) {
  if (pass) {
    pass = false;
    failure = what;
    difference = std::move(diff);
  }
  checks.push_back("FAIL " + what);
}

VerifyResult compare_point_sets(const std::string& what, const PointSet& analytic,
                                const PointSet& brute) {
  VerifyResult r;
  if (analytic == brute) {
    r.checks.push_back("ok " + what + " (" + std::to_string(brute.size()) + " points)");
    return r;
  }
  if (auto d = first_difference(analytic, brute))
    r.fail(what + ": " + format_point(*d) + " is computed but not enumerated", d);
  else if (auto e = first_difference(brute, analytic))
    r.fail(what + ": " + format_point(*e) + " is enumerated but not computed", e);
  else
    r.fail(what + ": point sets differ in width");
  return r;
}

namespace {

void merge(VerifyResult& into, VerifyResult&& part) {
  if (!part.pass && into.pass) {
    into.pass = false;
    into.failure = part.failure;
    into.difference = part.difference;
  }
  for (auto& c : part.checks) into.checks.push_back(std::move(c));
}

void expect(VerifyResult& r, bool ok, const std::string& what) {
  if (ok) r.checks.push_back("ok " + what);
  else r.fail(what);
}

}  // namespace

VerifyResult cross_verify_hibi(const Poset& p, const HibiClassification& c, int max_degree) {
  VerifyResult r;
  HibiRing ring(p);
  const std::vector<Poset> components = connected_components(p);
  const bool connected = components.size() == 1;
  const std::size_t width = ring.width();

  bool all_pure = true;
  for (const auto& comp : components) {
    HatChains h = hat_chains(comp);
    bool pure = true;
    for (int v = 0; v < static_cast<int>(comp.size()); ++v)
      pure = pure && h.longest_to_top[v] == h.shortest_to_top[v] &&
             h.longest_from_bottom[v] == h.shortest_from_bottom[v];
    all_pure = all_pure && pure;
  }
  expect(r, all_pure == (c.status != GorensteinStatus::Neither),
         std::string("status ") + status_name(c.status) + " matches purity by chain listing");

  for (int k = 0; k <= max_degree; ++k) {
    const std::string deg = " degree " + std::to_string(k);
    try {
      for (HibiModule m : {HibiModule::Ring, HibiModule::Canonical, HibiModule::Anticanonical})
        merge(r, compare_point_sets(std::string(module_name(m)) + deg,
                                    ring.slice(m, k).monomials, brute_hibi_slice(p, m, k)));
    } catch (const ResourceError& e) {
      r.checks.push_back("skipped slices" + deg + ": " + e.what());
    }
    try {
      if (connected) {
        PointSet brute = brute_hibi_trace_slice(p, k);
        merge(r, compare_point_sets("trace" + deg, ring.trace_slice(k).monomials, brute));
        LatticePoint tk(width, 0);
        tk[0] = k;
        const bool has_t = brute.contains(tk);
        if (all_pure)
          expect(r, brute.size() == (k >= c.N ? ring.ring_slice_count(k) : 0),
                 "trace" + deg + " equals m^" + std::to_string(c.N));
        else if (k <= c.slice_bound)
          expect(r, has_t == (k > c.no_t_power_through),
                 "t^" + std::to_string(k) + (has_t ? " in" : " not in") + " the trace");
      } else {
        ProductTraceSummary s = brute_product_trace(components, k);
        expect(r, s.trace_count == ring.trace_slice_count(k),
               "trace" + deg + " count " + std::to_string(s.trace_count));
        if (all_pure)
          expect(r, k >= c.N ? s.all : s.none,
                 "trace" + deg + " equals m^" + std::to_string(c.N));
      }
    } catch (const ResourceError& e) {
      r.checks.push_back("skipped trace" + deg + ": " + e.what());
    }
  }

  if (!all_pure && connected && c.non_gorenstein_locus_dim && !c.trace_height.lower_bound) {
    try {
      BruteTraceHeight h = brute_trace_height(p);
      expect(r, h.height == c.trace_height.value && h.locus_dim == *c.non_gorenstein_locus_dim,
             "trace height " + std::to_string(h.height) + " from " + std::to_string(h.faces) +
                 " faces");
    } catch (const ResourceError& e) {
      r.checks.push_back(std::string("skipped trace height: ") + e.what());
    }
  }
  return r;
}

VerifyResult cross_verify_cone(const SimplicialCone& cone, const ConeClassification& c) {
  VerifyResult r;
  const Eigen::Index n = cone.dimension();
  try {
    auto b = integral_cone_point(cone);
    expect(r, b.has_value() == c.gorenstein,
           std::string("integral cone point ") + (b ? format_point(*b) : "absent"));
    bool every_ray = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::string ray = "ray " + std::to_string(i + 1);
      auto p = ray_scan(cone, static_cast<int>(i));
      every_ray = every_ray && p.has_value();
      const RayIntegralityReport& rep = c.rays[i];
      bool same = p.has_value() == rep.has_integral_point;
      if (same && p) same = *p == to_int64(*rep.point);
      if (same) r.checks.push_back("ok " + ray + (p ? " point " + format_point(*p) : " no point"));
      else r.fail(ray + ": enumeration and solver disagree", p);

      LatticePoint a = to_int64(cone.ray(i));
      bool in_trace = brute_cone_trace_member(cone, a);
      bool lib = canonical_and_trace_membership(cone, cone.ray(i)).trace;
      expect(r, in_trace == lib && in_trace == p.has_value(),
             ray + ": a_" + std::to_string(i + 1) + (in_trace ? " in" : " not in") + " the trace");
    }
    expect(r, every_ray == c.punctured_gorenstein, "punctured verdict by ray enumeration");
    if (!c.minors.passes) expect(r, !every_ray, "minors violation and a missing ray point");
  } catch (const ResourceError& e) {
    r.checks.push_back(std::string("skipped: ") + e.what());
  }
  return r;
}

}  // namespace torictrace
