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

#include "torictrace/report.hpp"

#include <sstream>

namespace torictrace {

namespace {

const Integer kSafe = Integer(1) << 53;

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string rat_vector_text(const RatVector& v) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < v.size(); ++i) parts.push_back(to_string(v(i)));
  return "(" + join(parts, ", ") + ")";
}

std::string int_vector_text(const IntVector& v) {
  std::vector<std::string> parts;
  for (Eigen::Index i = 0; i < v.size(); ++i) parts.push_back(to_string(v(i)));
  return "(" + join(parts, ", ") + ")";
}

}  // namespace

Json integer_json(const Integer& z) {
  if (abs(z) <= kSafe) return Json(to_int64(z));
  return Json(to_string(z));
}

Json rational_json(const Rational& q) { return Json(to_string(q)); }

Json point_json(std::span<const Coord> p) {
  Json a = Json::array();
  for (Coord x : p) a.push_back(integer_json(Integer(x)));
  return a;
}

Json vector_json(const IntVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(integer_json(v(i)));
  return a;
}

Json vector_json(const RatVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rational_json(v(i)));
  return a;
}

Json matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vector_json(IntVector(m.row(i).transpose())));
  return a;
}

std::string format_monomial(const Poset& p, std::span<const Coord> e) {
  std::vector<std::string> parts;
  auto term = [&](const std::string& var, Coord x) {
    if (x == 0) return;
    parts.push_back(x == 1 ? var : var + "^" + std::to_string(x));
  };
  term("t", e[0]);
  for (std::size_t v = 0; v < p.size(); ++v) term(p.label(static_cast<int>(v)), e[v + 1]);
  return parts.empty() ? "1" : join(parts, " ");
}

// ---------------------------------------------------------------------------

Json hibi_json(const Poset& p, const HibiClassification& c,
               const std::vector<HibiSliceSummary>& slices) {
  Json j;
  j["kind"] = "hibi";
  j["elements"] = p.labels();
  Json covers = Json::array();
  for (const auto& cv : p.covers()) covers.push_back({p.label(cv.lower), p.label(cv.upper)});
  j["covers"] = covers;
  j["dimension"] = c.dimension;
  j["status"] = status_name(c.status);
  j["N"] = c.N;
  j["a_invariants"] = c.a_invariants;
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json x;
    x["elements"] = comp.labels;
    x["size"] = comp.size;
    x["rank"] = comp.rank;
    x["pure"] = comp.pure;
    x["dimension"] = comp.dimension;
    x["a_invariant"] = comp.a_invariant;
    comps.push_back(x);
  }
  j["components"] = comps;
  // -1 marks the unit ideal.
  j["trace_height"] = c.trace_height.reported();
  j["trace_height_is_lower_bound"] = c.trace_height.lower_bound;
  j["locus_dim"] = c.non_gorenstein_locus_dim ? Json(*c.non_gorenstein_locus_dim) : Json(nullptr);
  j["slice_bound"] = c.slice_bound;
  j["slices_verified_through"] = c.slices_verified_through;
  j["no_t_power_through"] = c.no_t_power_through;
  Json cert = Json::object();
  if (!c.trace_generators.empty()) {
    Json gens = Json::array();
    for (const auto& g : c.trace_generators) gens.push_back(format_monomial(p, g));
    cert["trace_generators"] = gens;
  }
  if (c.counterexample_vertex) cert["counterexample_vertex"] = *c.counterexample_vertex;
  j["certificates"] = cert;
  if (!slices.empty()) {
    Json s = Json::array();
    for (const auto& sl : slices) {
      Json x;
      x["degree"] = sl.degree;
      x["ring_count"] = sl.ring_count;
      x["trace_count"] = sl.trace_count;
      if (sl.trace) {
        Json m = Json::array();
        for (std::size_t i = 0; i < sl.trace->size(); ++i)
          m.push_back(format_monomial(p, (*sl.trace)[i]));
        x["trace"] = m;
      }
      s.push_back(x);
    }
    j["slices"] = s;
  }
  return j;
}

std::string hibi_text(const Poset& p, const HibiClassification& c,
                      const std::vector<HibiSliceSummary>& slices) {
  std::ostringstream os;
  os << "poset: " << p.size() << " elements, " << c.components.size() << " component"
     << (c.components.size() == 1 ? "" : "s") << "\n";
  for (const auto& comp : c.components)
    os << "  {" << join(comp.labels, ", ") << "}: rank " << comp.rank
       << (comp.pure ? ", pure" : ", not pure") << ", a = " << comp.a_invariant << "\n";
  os << "dimension: " << c.dimension << "\n";
  os << "status: " << status_name(c.status) << "\n";
  if (c.status != GorensteinStatus::Neither) os << "N: " << c.N << "\n";
  os << "trace height: " << (c.trace_height.lower_bound ? ">= " : "") << c.trace_height.value
     << (c.trace_height.unit_ideal ? " (unit ideal)" : "") << "\n";
  if (c.non_gorenstein_locus_dim)
    os << "non-Gorenstein locus dimension: " << *c.non_gorenstein_locus_dim << "\n";
  if (c.counterexample_vertex) os << "impure at: " << *c.counterexample_vertex << "\n";
  if (c.slices_verified_through >= 0)
    os << "trace = m^" << c.N << " checked through degree " << c.slices_verified_through << "\n";
  if (c.status == GorensteinStatus::Neither) {
    if (c.no_t_power_through >= 0)
      os << "no power of t in the trace through degree " << c.no_t_power_through << "\n";
    if (c.no_t_power_through < c.slice_bound)
      os << "t^" << c.no_t_power_through + 1 << " lies in the trace\n";
  }
  if (!c.trace_generators.empty()) {
    std::vector<std::string> g;
    for (const auto& x : c.trace_generators) g.push_back(format_monomial(p, x));
    os << "trace generators: " << join(g, ", ") << "\n";
  }
  for (const auto& sl : slices) {
    os << "degree " << sl.degree << ": " << sl.trace_count << " of " << sl.ring_count
       << " monomials in the trace";
    if (sl.trace && !sl.trace->empty()) {
      std::vector<std::string> m;
      for (std::size_t i = 0; i < sl.trace->size(); ++i) m.push_back(format_monomial(p, (*sl.trace)[i]));
      os << ": " << join(m, ", ");
    }
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Json ray_json(const RayIntegralityReport& r) {
  Json j;
  j["has_integral_point"] = r.has_integral_point;
  j["t"] = r.t ? rational_json(*r.t) : Json(nullptr);
  j["point"] = r.point ? vector_json(*r.point) : Json(nullptr);
  j["failed_condition"] = condition_name(r.failed_condition);
  j["pivot"] = r.pivot;
  Json c = Json::array(), e = Json::array(), res = Json::array();
  for (const auto& x : r.c) c.push_back(rational_json(x));
  for (const auto& x : r.e) e.push_back(rational_json(x));
  for (const auto& x : r.residues) res.push_back(integer_json(x));
  j["c"] = c;
  j["e"] = e;
  j["residues"] = res;
  return j;
}

Json cone_json(const SimplicialCone& cone, const ConeClassification& c) {
  Json j;
  j["kind"] = "cone";
  j["dimension"] = cone.dimension();
  j["rays"] = matrix_json(cone.rays());
  j["normals"] = matrix_json(cone.normals());
  j["determinant"] = integer_json(abs(determinant(cone.rays())));
  j["cone_point"] = vector_json(c.cone_point);
  j["gorenstein"] = c.gorenstein;
  j["punctured_gorenstein"] = c.punctured_gorenstein;
  j["r"] = c.r;
  j["height_lower_bound"] = c.height_lower_bound;
  Json rays = Json::array();
  for (const auto& r : c.rays) rays.push_back(ray_json(r));
  j["ray_reports"] = rays;
  Json m;
  m["passes"] = c.minors.passes;
  m["checks"] = c.minors.checks;
  Json vs = Json::array();
  for (const auto& v : c.minors.violations) {
    Json x;
    auto one_based = [](const std::vector<int>& s) {
      std::vector<int> o;
      for (int i : s) o.push_back(i + 1);
      return o;
    };
    x["I"] = one_based(v.I);
    x["J"] = one_based(v.J);
    x["L"] = one_based(v.L);
    x["minor_IJ"] = integer_json(v.minor_IJ);
    x["minor_IL"] = integer_json(v.minor_IL);
    x["gcd"] = integer_json(v.gcd);
    x["rhs"] = integer_json(v.rhs);
    vs.push_back(x);
  }
  m["violations"] = vs;
  j["minors"] = m;
  return j;
}

std::string ray_text(const RayIntegralityReport& r) {
  std::ostringstream os;
  if (r.has_integral_point) {
    os << "integral point " << int_vector_text(*r.point) << " at t = " << to_string(*r.t);
  } else {
    os << "no integral point";
    if (r.failed_condition != RayCondition::None)
      os << " (" << condition_name(r.failed_condition) << " fails)";
  }
  return os.str();
}

std::string cone_text(const SimplicialCone& cone, const ConeClassification& c) {
  std::ostringstream os;
  os << "dimension: " << cone.dimension() << "\n";
  for (Eigen::Index i = 0; i < cone.dimension(); ++i)
    os << "ray " << i + 1 << ": " << int_vector_text(cone.ray(i)) << "  normal "
       << int_vector_text(cone.normal(i)) << "\n";
  os << "cone point: " << rat_vector_text(c.cone_point) << "\n";
  os << "gorenstein: " << (c.gorenstein ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < c.rays.size(); ++i)
    os << "ray " << i + 1 << ": " << ray_text(c.rays[i]) << "\n";
  os << "rays with integral points: " << c.r << " of " << cone.dimension() << "\n";
  os << "trace height: >= " << c.height_lower_bound << "\n";
  os << "gorenstein on the punctured spectrum: " << (c.punctured_gorenstein ? "yes" : "no")
     << "\n";
  os << "minors condition: " << (c.minors.passes ? "passes" : "fails") << " (" << c.minors.checks
     << " checks)\n";
  for (const auto& v : c.minors.violations) {
    auto set = [](const std::vector<int>& s) {
      std::vector<std::string> o;
      for (int i : s) o.push_back(std::to_string(i + 1));
      return "{" + join(o, ",") + "}";
    };
    os << "  I=" << set(v.I) << " J=" << set(v.J) << " L=" << set(v.L) << ": gcd("
       << to_string(v.minor_IJ) << ", " << to_string(v.minor_IL) << ") = " << to_string(v.gcd)
       << " does not divide " << to_string(v.rhs) << "\n";
  }
  return os.str();
}

Json verify_json(const VerifyResult& v) {
  Json j;
  j["pass"] = v.pass;
  j["checks"] = v.checks;
  j["failure"] = v.pass ? Json(nullptr) : Json(v.failure);
  j["difference"] = v.difference ? point_json(*v.difference) : Json(nullptr);
  return j;
}

std::string verify_text(const VerifyResult& v) {
  std::ostringstream os;
  os << "verify: " << (v.pass ? "pass" : "FAIL") << " (" << v.checks.size() << " checks)\n";
  if (!v.pass) os << "  " << v.failure << "\n";
  return os.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace torictrace
