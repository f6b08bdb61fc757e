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

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "torictrace/arith.hpp"
#include "torictrace/conegeom.hpp"
#include "torictrace/hibi.hpp"
#include "torictrace/oracle.hpp"
#include "torictrace/poset.hpp"

namespace torictrace {

/// Objects keep their keys sorted, so dump() is canonical.
using Json = nlohmann::json;

/// Integers within +-2^53 become numbers, larger ones strings.
Json integer_json(const Integer& z);
/// "p/q" in lowest terms with q > 0, also when q = 1.
Json rational_json(const Rational& q);
Json point_json(std::span<const Coord> p);
Json vector_json(const IntVector& v);
Json vector_json(const RatVector& v);
Json matrix_json(const IntMatrix& m);

/// Monomial t^k x_v^m(v) ... written with poset labels, e.g. "t^2 v1^2 v3".
std::string format_monomial(const Poset& p, std::span<const Coord> exponent);

struct HibiSliceSummary {
  int degree = 0;
  std::uint64_t ring_count = 0;
  std::uint64_t trace_count = 0;
  /// Present when the trace slice was materialized.
  std::optional<PointSet> trace;
};

Json hibi_json(const Poset& p, const HibiClassification& c,
               const std::vector<HibiSliceSummary>& slices);
std::string hibi_text(const Poset& p, const HibiClassification& c,
                      const std::vector<HibiSliceSummary>& slices);

Json ray_json(const RayIntegralityReport& r);
Json cone_json(const SimplicialCone& cone, const ConeClassification& c);
std::string cone_text(const SimplicialCone& cone, const ConeClassification& c);
std::string ray_text(const RayIntegralityReport& r);

Json verify_json(const VerifyResult& v);
std::string verify_text(const VerifyResult& v);

/// Two-space indented text with a trailing newline.
std::string dump_json(const Json& j);

}  // namespace torictrace
