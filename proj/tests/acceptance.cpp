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

// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "naive.hpp"
#include "posets.hpp"
#include "torictrace/cli.hpp"
#include "torictrace/conegeom.hpp"
#include "torictrace/errors.hpp"
#include "torictrace/hibi.hpp"
#include "torictrace/oracle.hpp"
#include "torictrace/poset.hpp"
#include "torictrace/segre.hpp"

using namespace torictrace;
namespace tt = torictrace::testing;

namespace {

// Collects failed expectations of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 5) failures.push_back(what);
    else if (!ok) failures.emplace_back();
  }
  bool pass() const { return failures.empty(); }
};

IntMatrix rows(int n, std::initializer_list<long> values) {
  IntMatrix m(n, n);
  auto it = values.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

IntVector ivec(std::initializer_list<long> values) {
  IntVector v(values.size());
  int i = 0;
  for (long x : values) v(i++) = x;
  return v;
}

RatVector rvec(std::initializer_list<Rational> values) {
  RatVector v(values.size());
  int i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

std::string describe(const Poset& p) {
  std::string s = format_poset(p);
  for (char& c : s)
    if (c == '\n') c = ';';
  return "[" + s + "]";
}

// Brute-force degree-k trace count of K[P] from per-component profiles,
// cached by component text and degree.
std::uint64_t brute_trace_count(const Poset& p, int k, std::uint64_t* ring_count = nullptr) {
  static std::map<std::pair<std::string, int>, ComponentTraceProfile> cache;
  std::vector<ComponentTraceProfile> profiles;
  for (const Poset& c : connected_components(p)) {
    // Labels do not affect the profile; key by the structure on p1..pn.
    std::vector<std::pair<int, int>> covers;
    for (const auto& cv : c.covers()) covers.emplace_back(cv.lower, cv.upper);
    std::ostringstream key;
    key << c.size();
    for (auto [a, b] : covers) key << ' ' << a << '<' << b;
    auto it = cache.find({key.str(), k});
    if (it == cache.end()) it = cache.emplace(std::make_pair(key.str(), k), component_trace_profile(c, k)).first;
    profiles.push_back(it->second);
  }
  ProductTraceSummary s = combine_trace_profiles(profiles);
  if (ring_count) *ring_count = s.ring_count;
  return s.trace_count;
}

// ---------------------------------------------------------------------------

const char* kImpure = "v1 < v2\nv2 < v3\nv1 < v4\n";

void criterion1(Check& c) {
  Poset p = parse_poset(kImpure);
  HibiRing ring(p);
  // t x1, t x1 x4, t x1 x2, t x1 x2 x4, t x1 x2 x3, t x1 x2 x3 x4
  PointSet expected = make_point_set(5, {{1, 1, 0, 0, 0},
                                         {1, 1, 0, 0, 1},
                                         {1, 1, 1, 0, 0},
                                         {1, 1, 1, 0, 1},
                                         {1, 1, 1, 1, 0},
                                         {1, 1, 1, 1, 1}});
  c.expect(ring.trace_slice(1).monomials == expected, "degree-1 trace is the six monomials");
  c.expect(brute_hibi_trace_slice(p, 1) == expected, "oracle degree-1 trace");
  HibiClassification cl = classify(p);
  c.expect(cl.status == GorensteinStatus::Neither, "status neither");
  c.expect(cl.dimension == 5, "dimension 5");
  c.expect(cl.trace_height.value == 4 && !cl.trace_height.lower_bound, "classify height 4");
  NonGorensteinLocus loc = non_gorenstein_locus_dimension(p);
  c.expect(loc.trace_height.value == 4 && loc.locus_dim == 1, "face enumeration height 4");
  BruteTraceHeight bh = brute_trace_height(p);
  c.expect(bh.height == 4 && bh.locus_dim == 1, "oracle height 4");
  for (int k = 0; k <= 10; ++k) {
    PosetExponent t = ring.power_of_t(k);
    c.expect(!ring.trace_slice(k).contains(t), "t^" + std::to_string(k) + " not in trace slice");
    c.expect(!trace_membership(p, t).member, "t^" + std::to_string(k) + " not a trace member");
    if (k <= 6) c.expect(!brute_hibi_trace_slice(p, k).contains(t), "oracle: no t^k");
  }
  c.expect(cross_verify_hibi(p, cl, 5).pass, "cross verification");
}

void criterion2(Check& c) {
  SimplicialCone cone = SimplicialCone::from_rays(rows(2, {1, 0, 1, 3}));
  c.expect(cone_point(cone.normals()) == rvec({Rational(2, 3), Rational(1)}), "cone point (2/3,1)");
  c.expect(minimal_module_points(cone.normals(), 1, 8) ==
               std::vector<LatticePoint>{{1, 1}, {1, 2}},
           "minimal omega points (1,1),(1,2)");
  PointSet box = enumerate_slice(cone_pairing_box(cone.normals(), {-1, -1}, {1, 1}));
  for (const LatticePoint& m : std::vector<LatticePoint>{{0, 1}, {0, 0}, {0, -1}}) {
    IntVector v = from_int64(m);
    c.expect(box.contains(m) && in_anticanonical(cone, v), "omega^{-1} contains " + format_point(m));
  }
  c.expect(minimal_module_points(cone.normals(), -1, 4) ==
               std::vector<LatticePoint>{{0, -1}, {0, 0}, {0, 1}},
           "omega^{-1} generated by y^{-1}, 1, y");
  ConeClassification cl = classify_cone(cone);
  c.expect(!cl.gorenstein, "not Gorenstein");
  c.expect(cl.punctured_gorenstein, "punctured Gorenstein");
  c.expect(cross_verify_cone(cone, cl).pass, "cross verification");
}

void criterion3(Check& c) {
  IntMatrix a = rows(3, {3, 1, 1, 1, 3, 1, 1, 1, 3});
  c.expect(determinant(a) == 20, "|A| = 20");
  SimplicialCone cone = SimplicialCone::from_rays(a);
  c.expect(cone.normals() == rows(3, {4, -1, -1, -1, 4, -1, -1, -1, 4}), "U rows");
  RatVector half = rvec({Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  c.expect(cone_point(cone.normals()) == half, "cone point (1/2,1/2,1/2)");
  ConeClassification cl = classify_cone(cone);
  c.expect(cl.rays[0].has_integral_point && *cl.rays[0].point == ivec({2, 1, 1}),
           "ray witness (2,1,1)");
  auto scan = ray_scan(cone, 0);
  c.expect(scan && *scan == LatticePoint{2, 1, 1}, "oracle ray witness (2,1,1)");
  c.expect(!cl.gorenstein && cl.punctured_gorenstein, "not Gorenstein, punctured Gorenstein");
  c.expect(cross_verify_cone(cone, cl).pass, "cross verification");
}

void criterion4(Check& c) {
  SimplicialCone cone = SimplicialCone::from_normals(rows(3, {1, -2, 2, -2, 1, 0, 3, -1, -4}));
  MinorsReport m = minors_necessary_condition(cone.normals());
  bool found = false;
  for (const auto& v : m.violations)
    if (v.I == std::vector<int>{0, 2} && v.J == std::vector<int>{0, 1} &&
        v.L == std::vector<int>{1, 2})
      found = v.gcd == 5 && abs(v.rhs) == 1 && abs(v.minor_IJ) == 5 && abs(v.minor_IL) == 10;
  c.expect(!m.passes && found, "gcd 5 does not divide 1");
  RatVector b = rvec({Rational(-8, 5), Rational(-11, 5), Rational(-9, 10)});
  c.expect(cone_point(cone.normals()) == b, "cone point");
  AffineRay ray(b, ivec({2, 2, 1}));
  c.expect(!ray_integral_point(ray).has_integral_point, "solver: no integral point");
  c.expect(!ray_integral_point_oracle(ray).has_integral_point, "oracle: no integral point");
  c.expect(!tt::naive_ray_parameter(b, ivec({2, 2, 1})), "naive scan: no integral point");
  ConeClassification cl = classify_cone(cone);
  c.expect(!cl.punctured_gorenstein, "not punctured Gorenstein");
  c.expect(cross_verify_cone(cone, cl).pass, "cross verification");
}

bool status_matches_purity(const Poset& p, const HibiClassification& cl) {
  bool pure = true;
  for (const Poset& comp : connected_components(p)) pure = pure && tt::pure_by_chains(comp);
  return pure == (cl.status != GorensteinStatus::Neither);
}

void criterion5(Check& c) {
  HibiClassificationOptions fast;
  fast.compute_locus = false;
  std::vector<Poset> connected;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : tt::all_connected_posets(n)) {
      if (n <= 5) connected.push_back(p);
      HibiClassification cl = classify(p, fast);
      c.expect(status_matches_purity(p, cl), "status vs purity " + describe(p));
      if (cl.status == GorensteinStatus::Neither) continue;
      HibiRing ring(p);
      for (int k = 0; k <= cl.N + 4; ++k) {
        PointSet lib = ring.trace_slice(k).monomials;
        PointSet brute = brute_hibi_trace_slice(p, k);
        PointSet mN = k >= cl.N ? ring.ring_slice(k).monomials : PointSet(ring.width());
        c.expect(lib == brute && brute == mN,
                 "trace = m^N in degree " + std::to_string(k) + " " + describe(p));
      }
    }
  for (std::size_t i = 0; i < connected.size(); ++i)
    for (std::size_t j = i; j < connected.size(); ++j) {
      Poset u = disjoint_union(connected[i].relabeled("a"), connected[j].relabeled("b"));
      HibiClassification cl = classify(u, fast);
      c.expect(status_matches_purity(u, cl), "status vs purity " + describe(u));
      if (cl.status == GorensteinStatus::Neither) continue;
      HibiRing ring(u);
      for (int k = 0; k <= cl.N + 4; ++k) {
        std::uint64_t ring_count = 0;
        std::uint64_t brute = brute_trace_count(u, k, &ring_count);
        std::uint64_t lib = ring.trace_slice_count(k);
        std::uint64_t mN = k >= cl.N ? ring_count : 0;
        c.expect(ring_count == ring.ring_slice_count(k) && lib == brute && brute == mN,
                 "trace = m^N in degree " + std::to_string(k) + " " + describe(u));
      }
    }
}

// Literal degree-k sumset of omega and omega^{-1} of the Segre product,
// each the Segre product of the factor modules; nullopt when the sumset
// would take more than budget additions.
std::optional<PointSet> literal_segre_trace(const std::vector<GradedFactor>& f, int k,
                                            std::uint64_t budget) {
  int lo = 1 << 20, hi = -(1 << 20);
  for (const auto& x : f) {
    lo = std::min(lo, x.canonical_min);
    hi = std::max(hi, k - x.anticanonical_min);
  }
  std::map<int, PointSet> canonical, anticanonical;
  std::uint64_t work = 0;
  for (int i = lo; i <= hi; ++i) {
    // A factor without omega_i or omega^{-1}_{k-i} empties this term.
    bool empty = false;
    for (const auto& x : f)
      empty = empty || i < x.canonical_min || k - i < x.anticanonical_min;
    if (empty) continue;
    std::vector<GradedSlice> cs, as;
    std::uint64_t nc = 1, na = 1;
    for (const auto& x : f) {
      const PointSet& ci = x.canonical_slice(i);
      const PointSet& ai = x.anticanonical_slice(k - i);
      nc *= ci.size();
      na *= ai.size();
      cs.push_back({i, ci});
      as.push_back({k - i, ai});
    }
    work += nc * na;
    if (work > budget) return std::nullopt;
    canonical.emplace(i, segre_slice(cs).monomials);
    anticanonical.emplace(k - i, segre_slice(as).monomials);
  }
  return brute_trace_slice(canonical, anticanonical, k);
}

void criterion6(Check& c) {
  std::mt19937_64 rng(6);
  int literal = 0;
  for (int t = 0; t < 100; ++t) {
    Poset p = tt::random_poset(rng, 5, "a");
    Poset q = tt::random_poset(rng, 5, "b");
    int b = std::numeric_limits<int>::min();
    {
      int bc = std::numeric_limits<int>::min(), ba = bc;
      for (const Poset& x : {p, q}) {
        HibiRing r(x);
        bc = std::max(bc, r.minimal_generators(HibiModule::Canonical).max_degree());
        ba = std::max(ba, r.minimal_generators(HibiModule::Anticanonical).max_degree());
      }
      b = ba + bc;
    }
    std::vector<GradedFactor> f{make_hibi_factor(p, b + 2), make_hibi_factor(q, b + 2)};
    c.expect(segre_threshold(f) == b, "threshold " + describe(p) + describe(q));
    Poset u = disjoint_union(p, q);
    for (int k = b; k <= b + 2; ++k) {
      const std::string where = "k=" + std::to_string(k) + " " + describe(p) + describe(q);
      try {
        SegreTraceComparison cmp = segre_trace_truncation(f, k);
        std::uint64_t factors = brute_trace_count(p, k) * brute_trace_count(q, k);
        std::uint64_t product = brute_trace_count(u, k);
        c.expect(cmp.factorized_count == factors, "factor trace counts " + where);
        c.expect(cmp.sumset_count == product && product == factors, "sumset count " + where);
        if (cmp.factorized) {
          if (auto lit = literal_segre_trace(f, k, 3'000'000)) {
            ++literal;
            c.expect(cmp.factorized->monomials == *lit, "literal sumset " + where);
          }
        }
      } catch (const Error& e) {
        c.expect(false, std::string(e.what()) + " " + where);
      }
    }
  }
  c.expect(literal >= 100, "literal comparisons: " + std::to_string(literal));
}

void criterion7(Check& c) {
  std::mt19937_64 rng(7);
  int special = 0;
  for (int t = 0; t < 500; ++t) {
    int n = 2 + t % 3;
    IntVector a = tt::random_primitive(rng, n, -7, 7);
    RatVector b(n);
    for (int i = 0; i < n; ++i) b(i) = tt::random_rational(rng, 7, 7);
    // Every fifth ray starts at a lattice point.
    if (t % 5 == 0)
      for (int i = 0; i < n; ++i) b(i) = Rational(floor(b(i)));
    AffineRay ray(b, a);
    auto naive = tt::naive_ray_parameter(b, a);
    auto x = ray_integral_point(ray);
    auto y = ray_integral_point_oracle(ray);
    const std::string where = "ray " + std::to_string(t);
    c.expect(x.has_integral_point == naive.has_value() && y.has_integral_point == naive.has_value(),
             where + " verdicts");
    if (naive && x.has_integral_point && y.has_integral_point)
      c.expect(*x.t == *naive && *y.t == *naive, where + " least t");
    for (int j = 0; j < n; ++j) {
      if (a(j) == 0) continue;
      auto z = ray_integral_point(ray, j);
      c.expect(z.has_integral_point == x.has_integral_point &&
                   (!z.has_integral_point || *z.t == *x.t),
               where + " pivot " + std::to_string(j));
    }
    if (auto s = special_case_gcd_test(ray)) {
      ++special;
      c.expect(*s == x.has_integral_point, where + " special case");
    }
  }
  c.expect(special > 50, "special case applicable " + std::to_string(special) + " times");
}

void criterion8(Check& c) {
  std::mt19937_64 rng(8);
  int punctured = 0, gorenstein = 0, violations = 0;
  for (int t = 0; t < 100; ++t) {
    SimplicialCone cone = tt::random_cone(rng, 3, 1, 5);
    ConeClassification cl = classify_cone(cone);
    const std::string where = "cone " + std::to_string(t);
    bool every = true;
    for (int i = 0; i < 3; ++i) every = every && ray_scan(cone, i).has_value();
    c.expect(cl.punctured_gorenstein == every, where + " punctured verdict");
    if (!cl.minors.passes) {
      ++violations;
      c.expect(!cl.punctured_gorenstein, where + " minors violation");
    }
    if (cl.gorenstein) {
      ++gorenstein;
      c.expect(integral_cone_point(cone).has_value(), where + " integral cone point");
      for (const auto& r : cl.rays) c.expect(r.has_integral_point && *r.t == 0, where + " t = 0");
    }
    punctured += cl.punctured_gorenstein;
    c.expect(cross_verify_cone(cone, cl).pass, where + " cross verification");
  }
  c.expect(punctured > 0 && punctured < 100, "both verdicts occur");
  (void)gorenstein;
  (void)violations;
}

void criterion9(Check& c) {
  // The brute height search on seven elements needs a larger box.
  setenv("TORICTRACE_ENUM_CAP", "200000000", 1);
  for (int a = 4; a <= 8; ++a)
    for (int b = a + 1; b <= 8; ++b) {
      Poset p = construct_height_dim_poset(a, b);
      const std::string where = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      c.expect(dimension_and_a_invariants(p).dimension == b, where + " dimension");
      NonGorensteinLocus loc = non_gorenstein_locus_dimension(p);
      c.expect(loc.trace_height.value == a && !loc.trace_height.unit_ideal, where + " height");
      BruteTraceHeight bh = brute_trace_height(p);
      c.expect(bh.height == a, where + " oracle height");
    }
  unsetenv("TORICTRACE_ENUM_CAP");
}

void criterion10(Check& c) {
  auto run = [](std::vector<std::string> args, std::string* out = nullptr) {
    args.insert(args.begin(), "torictrace");
    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    std::ostringstream o, e;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
    if (out) *out = o.str();
    return code;
  };
  std::string help;
  c.expect(run({"--help"}, &help) == 0, "help");
  for (const char* cmd : {"hibi", "cone", "ray", "construct"})
    c.expect(help.find(cmd) != std::string::npos, std::string("command ") + cmd);
  // Only the four commands exist; the resolution-based example has no
  // entry point.
  for (const char* cmd : {"contrast", "resolution", "semigroup", "numerical"})
    c.expect(run({cmd}) == kExitInput, std::string("no command ") + cmd);
  c.expect(help.find("contrast") == std::string::npos, "help does not mention it");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "four-element poset: trace slice, classification, height", criterion1},
      {2, "two-dimensional cone of k[x,xy,xy^2,xy^3]", criterion2},
      {3, "(3,1,1) cone", criterion3},
      {4, "cone with u1 = (1,-2,2): minors violation and missing ray point", criterion4},
      {5, "trace = m^N property suite", criterion5},
      {6, "Segre truncation suite", criterion6},
      {7, "ray solver referee suite", criterion7},
      {8, "cone referee suite", criterion8},
      {9, "height/dimension construction", criterion9},
      {10, "command surface excludes out-of-scope examples", criterion10},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << cr.number << ": " << (c.pass() ? "PASS" : "FAIL") << "  "
              << cr.name << " (" << c.count << " checks, " << timing << ")\n";
    for (const auto& f : c.failures)
      if (!f.empty()) std::cout << "    failed: " << f << "\n";
    all = all && c.pass();
  }
  return all ? 0 : 1;
}
