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

#include <doctest.h>

#include <cstdlib>
#include <random>

#include "naive.hpp"
#include "posets.hpp"
#include "torictrace/errors.hpp"
#include "torictrace/oracle.hpp"

using namespace torictrace;

namespace {

IntMatrix rows(int n, std::initializer_list<long> values) {
  IntMatrix m(n, n);
  auto it = values.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

const char* kImpure = "v1 < v2\nv2 < v3\nv1 < v4\n";

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("enumerate_slice on explicit regions") {
  BoundedRegion r{2, {{{1, 1}, 2}}, {0, 0}, {2, 2}};
  PointSet s = enumerate_slice(r);
  CHECK(s.points() == std::vector<LatticePoint>{{0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}});
  CHECK(r.volume() == 9);
  BoundedRegion empty{1, {}, {3}, {2}};
  CHECK(empty.volume() == 0);
  CHECK(enumerate_slice(empty).empty());
  BoundedRegion big{3, {}, {0, 0, 0}, {999, 999, 999}};
  CHECK_THROWS_AS(enumerate_slice(big, 1000), ResourceError);
  CHECK_THROWS_AS(enumerate_slice(BoundedRegion{2, {}, {0}, {1}}), InputError);
}

TEST_CASE("enumeration cap reads the environment") {
  CHECK(enumeration_cap() == 10'000'000);
  setenv("TORICTRACE_ENUM_CAP", "50", 1);
  CHECK(enumeration_cap() == 50);
  CHECK_THROWS_AS(enumerate_slice(BoundedRegion{2, {}, {0, 0}, {9, 9}}), ResourceError);
  unsetenv("TORICTRACE_ENUM_CAP");
  CHECK(enumeration_cap() == 10'000'000);
}

TEST_CASE("hat chains") {
  Poset p = parse_poset(kImpure);
  HatChains h = hat_chains(p);
  CHECK(h.longest_to_top[h.bottom] == 4);
  CHECK(h.shortest_to_top[h.bottom] == 3);
  CHECK(h.longest_to_top[0] == 3);
  CHECK(h.shortest_to_top[0] == 2);
  CHECK(h.longest_from_bottom[h.top] == 4);
}

TEST_CASE("brute Hibi slices") {
  Poset one = Poset::chain(1);
  CHECK(brute_hibi_slice(one, HibiModule::Canonical, 2).points() ==
        std::vector<LatticePoint>{{2, 1}});
  CHECK(brute_hibi_slice(one, HibiModule::Anticanonical, 0).points() ==
        std::vector<LatticePoint>{{0, -1}, {0, 0}, {0, 1}});
  Poset p = parse_poset(kImpure);
  CHECK(brute_hibi_slice(p, HibiModule::Canonical, 4).points() ==
        std::vector<LatticePoint>{{4, 3, 2, 1, 1}, {4, 3, 2, 1, 2}});
  CHECK(brute_hibi_slice(p, HibiModule::Canonical, 3).empty());
  CHECK(brute_hibi_slice(p, HibiModule::Ring, 1).size() == 7);
}

TEST_CASE("orthant slices under the pairing grading") {
  for (int n = 1; n <= 4; ++n) {
    PointSet s = enumerate_slice(cone_region(IntMatrix::Identity(n, n), 0, 2));
    CHECK(static_cast<long>(s.size()) == binomial(n + 2, 2));
  }
}

TEST_CASE("the 2-D cone's canonical points") {
  IntMatrix u = rows(2, {3, -1, 0, 1});
  PointSet tau = enumerate_slice(cone_pairing_box(u, {1, 1}, {3, 3}));
  CHECK(tau.contains(LatticePoint{1, 1}));
  CHECK(tau.contains(LatticePoint{1, 2}));
  CHECK(minimal_module_points(u, 1, 6) == std::vector<LatticePoint>{{1, 1}, {1, 2}});
  auto anti = minimal_module_points(u, -1, 2);
  CHECK(anti == std::vector<LatticePoint>{{0, -1}, {0, 0}, {0, 1}});
  PointSet box = enumerate_slice(cone_pairing_box(u, {-1, -1}, {1, 1}));
  for (const LatticePoint& m : std::vector<LatticePoint>{{0, 1}, {0, 0}, {0, -1}})
    CHECK(box.contains(m));
}

TEST_CASE("brute trace slices") {
  Poset p = parse_poset(kImpure);
  PointSet tr = brute_hibi_trace_slice(p, 1);
  CHECK(tr.points() == std::vector<LatticePoint>{{1, 1, 0, 0, 0},
                                                 {1, 1, 0, 0, 1},
                                                 {1, 1, 1, 0, 0},
                                                 {1, 1, 1, 0, 1},
                                                 {1, 1, 1, 1, 0},
                                                 {1, 1, 1, 1, 1}});
  CHECK(brute_trace_slice({}, {{0, make_point_set(1, {{0}})}}, 1).empty());
  Poset chain = Poset::chain(3);
  CHECK(brute_hibi_trace_slice(chain, 2) == brute_hibi_slice(chain, HibiModule::Ring, 2));
}

TEST_CASE("component profiles reproduce the union's brute trace") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 15; ++t) {
    Poset a = torictrace::testing::random_poset(rng, 3, "a");
    Poset b = torictrace::testing::random_poset(rng, 3, "b");
    Poset u = disjoint_union(a, b);
    for (int k = 0; k <= 4; ++k) {
      auto s = combine_trace_profiles({component_trace_profile(a, k), component_trace_profile(b, k)});
      auto direct = brute_product_trace({a, b}, k);
      CHECK(s.trace_count == direct.trace_count);
      CHECK(s.ring_count == direct.ring_count);
      CHECK(s.trace_count == brute_hibi_trace_slice(u, k).size());
      CHECK(s.ring_count == brute_hibi_slice(u, HibiModule::Ring, k).size());
    }
  }
}

TEST_CASE("brute trace height") {
  BruteTraceHeight h = brute_trace_height(parse_poset(kImpure));
  CHECK(h.height == 4);
  CHECK(h.locus_dim == 1);
  CHECK_FALSE(h.unit_ideal);
  BruteTraceHeight g = brute_trace_height(Poset::chain(3));
  CHECK(g.unit_ideal);
  CHECK(brute_trace_height(disjoint_union(Poset::chain(2, "a"), Poset::chain(1, "b"))).height == 4);
}

TEST_CASE("ray scan against the naive parameter scan") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    SimplicialCone c = torictrace::testing::random_cone(rng, 3, 1, 5);
    RatVector b = cone_point(c.normals());
    for (int i = 0; i < 3; ++i) {
      auto p = ray_scan(c, i);
      auto naive = torictrace::testing::naive_ray_parameter(b, c.ray(i));
      CHECK(p.has_value() == naive.has_value());
      if (p && naive) {
        RatVector q = b + *naive * to_rational(c.ray(i));
        for (int j = 0; j < 3; ++j) CHECK(Rational((*p)[j]) == q(j));
      }
    }
  }
}

TEST_CASE("cross verification of Hibi classifications") {
  Poset p = disjoint_union(Poset::chain(2, "a"), Poset::chain(1, "b"));
  VerifyResult r = cross_verify_hibi(p, classify(p), 4);
  CHECK(r.pass);
  CHECK(r.checks.size() > 5);
  Poset q = parse_poset(kImpure);
  CHECK(cross_verify_hibi(q, classify(q), 4).pass);
}

TEST_CASE("cross verification of cone classifications") {
  for (const auto& c : {SimplicialCone::from_rays(rows(3, {3, 1, 1, 1, 3, 1, 1, 1, 3})),
                        SimplicialCone::from_rays(rows(2, {1, 0, 1, 3})),
                        SimplicialCone::from_normals(rows(3, {1, -2, 2, -2, 1, 0, 3, -1, -4}))}) {
    VerifyResult r = cross_verify_cone(c, classify_cone(c));
    CHECK(r.pass);
  }
}

TEST_CASE("a corrupted result fails with a difference") {
  Poset p = parse_poset(kImpure);
  PointSet good = brute_hibi_trace_slice(p, 1);
  std::vector<LatticePoint> pts = good.points();
  pts.pop_back();
  pts.push_back({1, 0, 0, 0, 0});
  VerifyResult r = compare_point_sets("trace degree 1", make_point_set(5, pts), good);
  CHECK_FALSE(r.pass);
  REQUIRE(r.difference.has_value());
  CHECK(*r.difference == LatticePoint{1, 0, 0, 0, 0});

  HibiClassification c = classify(p);
  c.status = GorensteinStatus::NearlyGorenstein;
  CHECK_FALSE(cross_verify_hibi(p, c, 2).pass);

  SimplicialCone cone = SimplicialCone::from_rays(rows(2, {1, 0, 1, 3}));
  ConeClassification cc = classify_cone(cone);
  cc.rays[0].has_integral_point = false;
  cc.punctured_gorenstein = false;
  CHECK_FALSE(cross_verify_cone(cone, cc).pass);
}
