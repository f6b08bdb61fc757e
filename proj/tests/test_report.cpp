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

#include "torictrace/report.hpp"

using namespace torictrace;

TEST_CASE("scalar JSON encodings") {
  CHECK(integer_json(Integer(-7)) == Json(-7));
  Integer safe = Integer(1) << 53;
  CHECK(integer_json(safe).is_number());
  CHECK(integer_json(safe + 1) == Json("9007199254740993"));
  CHECK(integer_json(-(safe + 1)) == Json("-9007199254740993"));
  CHECK(rational_json(Rational(-4, 6)) == Json("-2/3"));
  CHECK(rational_json(Rational(3)) == Json("3/1"));
}

TEST_CASE("vector and matrix JSON") {
  RatVector b(3);
  b << Rational(1, 2), Rational(1, 2), Rational(1, 2);
  CHECK(vector_json(b).dump() == R"(["1/2","1/2","1/2"])");
  IntMatrix m(2, 2);
  m << 1, 0, 1, 3;
  CHECK(matrix_json(m).dump() == "[[1,0],[1,3]]");
  CHECK(point_json(LatticePoint{4, -1}).dump() == "[4,-1]");
}

TEST_CASE("monomials with poset labels") {
  Poset p = parse_poset("v1 < v2\nv2 < v3\nv1 < v4\n");
  CHECK(format_monomial(p, LatticePoint{1, 1, 0, 0, 1}) == "t v1 v4");
  CHECK(format_monomial(p, LatticePoint{2, 2, 0, 1, 0}) == "t^2 v1^2 v3");
  CHECK(format_monomial(p, LatticePoint{0, 0, 0, 0, -1}) == "v4^-1");
  CHECK(format_monomial(p, LatticePoint{0, 0, 0, 0, 0}) == "1");
}

TEST_CASE("Hibi report fields") {
  Poset p = parse_poset("v1 < v2\nv2 < v3\nv1 < v4\n");
  HibiClassification c = classify(p);
  HibiRing ring(p);
  std::vector<HibiSliceSummary> slices{{1, ring.ring_slice_count(1), ring.trace_slice_count(1),
                                        ring.trace_slice(1).monomials}};
  Json j = hibi_json(p, c, slices);
  CHECK(j["dimension"] == 5);
  CHECK(j["status"] == "neither");
  CHECK(j["trace_height"] == 4);
  CHECK(j["locus_dim"] == 1);
  CHECK(j["components"][0]["size"] == 4);
  CHECK(j["components"][0]["pure"] == false);
  CHECK(j["certificates"].contains("counterexample_vertex"));
  CHECK(j["slices"][0]["trace"].size() == 6);
  CHECK(j["slices"][0]["trace"][0] == "t v1");
  CHECK(Json::parse(dump_json(j)) == j);
  CHECK(dump_json(Json::parse(dump_json(j))) == dump_json(j));
  std::string text = hibi_text(p, c, slices);
  CHECK(text.find("dimension: 5") != std::string::npos);
  CHECK(text.find("trace height: 4") != std::string::npos);

  Poset chain = Poset::chain(2);
  Json g = hibi_json(chain, classify(chain), {});
  CHECK(g["trace_height"] == -1);
  CHECK(g["status"] == "gorenstein");
  CHECK_FALSE(g.contains("slices"));
}

TEST_CASE("cone report fields") {
  IntMatrix u(3, 3);
  u << 1, -2, 2, -2, 1, 0, 3, -1, -4;
  SimplicialCone cone = SimplicialCone::from_normals(u);
  Json j = cone_json(cone, classify_cone(cone));
  CHECK(j["cone_point"].dump() == R"(["-8/5","-11/5","-9/10"])");
  CHECK(j["punctured_gorenstein"] == false);
  CHECK(j["minors"]["passes"] == false);
  bool found = false;
  for (const auto& v : j["minors"]["violations"])
    if (v["I"] == Json({1, 3}) && v["J"] == Json({1, 2}) && v["L"] == Json({2, 3})) {
      found = true;
      CHECK(v["gcd"] == 5);
    }
  CHECK(found);
  CHECK(j["ray_reports"][1]["has_integral_point"] == false);
  CHECK(dump_json(Json::parse(dump_json(j))) == dump_json(j));
  CHECK(cone_text(cone, classify_cone(cone)).find("punctured spectrum: no") != std::string::npos);
}

TEST_CASE("verify report") {
  VerifyResult v;
  v.checks.push_back("ok something");
  CHECK(verify_json(v)["pass"] == true);
  v.fail("broken", LatticePoint{1, 2});
  Json j = verify_json(v);
  CHECK(j["pass"] == false);
  CHECK(j["failure"] == "broken");
  CHECK(j["difference"].dump() == "[1,2]");
  CHECK(verify_text(v).find("FAIL") != std::string::npos);
}
