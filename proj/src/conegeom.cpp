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

#include "torictrace/conegeom.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "torictrace/errors.hpp"

namespace torictrace {

namespace {

void require_primitive_rows(const IntMatrix& m, const char* what) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!is_primitive(m.row(i)))
      throw InputError(std::string(what) + " row " + std::to_string(i + 1) +
                       " is not a primitive integer vector");
  }
}

void require_square(const IntMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw InputError(std::string(what) + " must be a nonempty square matrix");
}

IntMatrix dual_rows(const IntMatrix& m, const char* what) {
  require_square(m, what);
  Integer det = determinant(m);
  if (det == 0) throw DegenerateConeError(std::string(what) + " matrix is singular");
  IntMatrix adj = adjugate(m);
  if (det < 0) adj = -adj;
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.row(i) = primitive(adj.col(i)).transpose();
  return out;
}

std::vector<int> all_but(int n, int skip) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

}  // namespace

SimplicialCone::SimplicialCone(IntMatrix rays, IntMatrix normals)
    : rays_(std::move(rays)), normals_(std::move(normals)) {
  require_square(rays_, "ray");
  require_square(normals_, "normal");
  if (rays_.rows() != normals_.rows())
    throw InputError("ray and normal matrices have different sizes");
  require_primitive_rows(rays_, "ray");
  require_primitive_rows(normals_, "normal");
  if (determinant(rays_) == 0) throw DegenerateConeError("ray matrix is singular");
  IntMatrix pairing = rays_ * normals_.transpose();
  for (Eigen::Index l = 0; l < pairing.rows(); ++l)
    for (Eigen::Index j = 0; j < pairing.cols(); ++j) {
      bool ok = l == j ? pairing(l, j) >= 1 : pairing(l, j) == 0;
      if (!ok)
        throw InputError("ray " + std::to_string(l + 1) + " and normal " + std::to_string(j + 1) +
                         " pair to " + to_string(pairing(l, j)));
    }
}

SimplicialCone SimplicialCone::from_rays(const IntMatrix& rays) {
  require_square(rays, "ray");
  require_primitive_rows(rays, "ray");
  return SimplicialCone(rays, normals_from_rays(rays));
}

SimplicialCone SimplicialCone::from_normals(const IntMatrix& normals) {
  require_square(normals, "normal");
  require_primitive_rows(normals, "normal");
  return SimplicialCone(rays_from_normals(normals), normals);
}

IntMatrix normals_from_rays(const IntMatrix& rays) { return dual_rows(rays, "ray"); }

IntMatrix rays_from_normals(const IntMatrix& normals) { return dual_rows(normals, "normal"); }

RatVector cone_point(const IntMatrix& normals) {
  require_square(normals, "normal");
  return inverse(normals) * RatVector::Ones(normals.rows());
}

bool is_gorenstein(const SimplicialCone& cone) {
  RatVector b = cone_point(cone.normals());
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (!is_integral(b(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------

AffineRay::AffineRay(RatVector base, IntVector direction)
    : base_(std::move(base)), direction_(std::move(direction)) {
  if (base_.size() != direction_.size())
    throw InputError("ray base and direction have different lengths");
  if (direction_.size() == 0) throw InputError("empty ray");
  Integer g = content(direction_);
  if (g == 0) throw InputError("ray direction is zero");
  if (g != 1) throw InputError("ray direction is not primitive (content " + to_string(g) + ")");
}

AffineRay AffineRay::primitivized(RatVector base, const IntVector& direction) {
  if (content(direction) == 0) throw InputError("ray direction is zero");
  return AffineRay(std::move(base), primitive(direction));
}

RatVector AffineRay::at(const Rational& t) const { return base_ + t * to_rational(direction_); }

const char* condition_name(RayCondition c) {
  switch (c) {
    case RayCondition::None:
      return "none";
    case RayCondition::Cond1:
      return "cond1";
    case RayCondition::Cond2:
      return "cond2";
    case RayCondition::Cond3:
      return "cond3";
    case RayCondition::NoResidue:
      return "no_residue";
  }
  return "";
}

namespace {

IntVector integral_point(const AffineRay& ray, const Rational& t) {
  RatVector p = ray.at(t);
  IntVector out(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!is_integral(p(i)))
      throw InconsistencyError("reconstructed ray point is not integral at t = " + to_string(t));
    out(i) = numerator_of(p(i));
  }
  return out;
}

}  // namespace

RayIntegralityReport ray_integral_point(const AffineRay& ray, std::optional<int> pivot) {
  const Eigen::Index n = ray.size();
  const RatVector& b = ray.base();
  const IntVector& a = ray.direction();
  RayIntegralityReport rep;
  rep.c.assign(n, Rational(0));
  rep.e.assign(n, Rational(0));

  std::vector<int> support;
  for (Eigen::Index i = 0; i < n; ++i)
    if (a(i) != 0) support.push_back(static_cast<int>(i));

  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) == 0 && !is_integral(b(i))) {
      rep.failed_condition = RayCondition::Cond1;
      return rep;
    }
  }

  int j = -1;
  if (pivot) {
    if (*pivot < 0 || *pivot >= n || a(*pivot) == 0)
      throw InputError("pivot must index a nonzero direction entry");
    j = *pivot;
  } else {
    for (int i : support)
      if (j < 0 || abs(a(i)) < abs(a(j))) j = i;
  }
  rep.pivot = j;

  for (int i : support) rep.c[i] = Rational(ceil(b(i))) - b(i);
  for (int i : support) rep.e[i] = Rational(a(i)) * rep.c[j] - Rational(a(j)) * rep.c[i];
  for (int i : support) {
    if (!is_integral(rep.e[i])) {
      rep.failed_condition = RayCondition::Cond2;
      return rep;
    }
  }

  const Integer m = abs(a(j));
  for (Integer r = 0; r < m; ++r) {
    bool ok = true;
    for (int i : support) {
      if (i == j) continue;
      if (mod(a(i) * r + numerator_of(rep.e[i]), m) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) rep.residues.push_back(r);
  }
  if (rep.residues.empty()) {
    rep.failed_condition = RayCondition::Cond3;
    return rep;
  }

  // Smallest t = (c_j + t_j) / a_j >= 0 over every residue class.
  std::optional<Rational> best;
  for (const Integer& r : rep.residues) {
    Integer tj = r;
    if (a(j) < 0) {
      Rational bound = (Rational(r) + rep.c[j]) / Rational(m);
      tj = r - m * ceil(bound);
    }
    Rational t = (rep.c[j] + Rational(tj)) / Rational(a(j));
    if (t < 0) throw InconsistencyError("negative ray parameter from residue " + to_string(r));
    if (!best || t < *best) best = t;
  }
  rep.has_integral_point = true;
  rep.t = *best;
  rep.point = integral_point(ray, *best);
  return rep;
}

RayIntegralityReport ray_integral_point_oracle(const AffineRay& ray) {
  const Eigen::Index n = ray.size();
  const RatVector& b = ray.base();
  const IntVector& a = ray.direction();
  RayIntegralityReport rep;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) == 0 && !is_integral(b(i))) {
      rep.failed_condition = RayCondition::Cond1;
      return rep;
    }
  }
  Integer q = 1;
  for (Eigen::Index i = 0; i < n; ++i) q = lcm(q, denominator_of(b(i)));
  std::vector<Integer> p(n);
  for (Eigen::Index i = 0; i < n; ++i) p[i] = numerator_of(b(i)) * (q / denominator_of(b(i)));
  for (Integer s = 0; s < q; ++s) {
    bool ok = true;
    for (Eigen::Index i = 0; i < n && ok; ++i)
      if (a(i) != 0 && mod(s * a(i) + p[i], q) != 0) ok = false;
    if (ok) {
      rep.has_integral_point = true;
      rep.t = Rational(s, q);
      rep.point = integral_point(ray, *rep.t);
      return rep;
    }
  }
  rep.failed_condition = RayCondition::NoResidue;
  return rep;
}

std::optional<bool> special_case_gcd_test(const AffineRay& ray) {
  const Eigen::Index n = ray.size();
  const IntVector& a = ray.direction();
  const RatVector& b = ray.base();
  bool applicable = false;
  for (Eigen::Index i = 0; i < n && !applicable; ++i) {
    if (a(i) == 0) continue;
    bool all = true;
    for (Eigen::Index j = 0; j < n && all; ++j)
      if (j != i && gcd(a(j), a(i)) != 1) all = false;
    applicable = all;
  }
  if (!applicable) return std::nullopt;
  for (Eigen::Index i = 0; i < n; ++i)
    if (a(i) == 0 && !is_integral(b(i))) return false;
  std::vector<Rational> c(n);
  for (Eigen::Index i = 0; i < n; ++i) c[i] = Rational(ceil(b(i))) - b(i);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (!is_integral(Rational(a(i)) * c[j] - Rational(a(j)) * c[i])) return false;
  return true;
}

MinorsReport minors_necessary_condition(const IntMatrix& normals) {
  require_square(normals, "normal");
  const int n = static_cast<int>(normals.rows());
  MinorsReport rep;
  if (n < 2) return rep;
  for (int ri = n - 1; ri >= 0; --ri) {
    const std::vector<int> I = all_but(n, ri);
    for (int d = n - 1; d >= 0; --d) {
      const std::vector<int> J = all_but(n, d);
      const Integer minor_ij = determinant(submatrix(normals, I, J));
      for (int c = n - 1; c >= 0; --c) {
        if (c == d) continue;
        const std::vector<int> L = all_but(n, c);
        ++rep.checks;
        const Integer minor_il = determinant(submatrix(normals, I, L));
        const Integer g = gcd(abs(minor_ij), abs(minor_il));
        if (g == 0) continue;
        const int ell = static_cast<int>(std::find(J.begin(), J.end(), c) - J.begin()) + 1;
        std::vector<int> cols;  // J without c
        for (int x : J)
          if (x != c) cols.push_back(x);
        Integer rhs = 0;
        for (int k = 1; k <= n - 1; ++k) {
          std::vector<int> rows;
          for (int idx = 0; idx < n - 1; ++idx)
            if (idx != k - 1) rows.push_back(I[idx]);
          Integer minor = determinant(submatrix(normals, rows, cols));
          rhs += ((ell + k) % 2 == 0) ? minor : Integer(-minor);
        }
        if (rhs % g != 0) {
          rep.passes = false;
          rep.violations.push_back({I, J, L, minor_ij, minor_il, g, rhs});
        }
      }
    }
  }
  return rep;
}

ConeClassification classify_cone(const SimplicialCone& cone) {
  ConeClassification out;
  out.cone_point = cone_point(cone.normals());
  out.gorenstein = true;
  for (Eigen::Index i = 0; i < out.cone_point.size(); ++i)
    if (!is_integral(out.cone_point(i))) out.gorenstein = false;
  for (Eigen::Index i = 0; i < cone.dimension(); ++i) {
    out.rays.push_back(ray_integral_point(AffineRay(out.cone_point, cone.ray(i))));
    if (out.rays.back().has_integral_point) ++out.r;
  }
  out.height_lower_bound = out.r;
  out.punctured_gorenstein = out.r == cone.dimension();
  out.minors = minors_necessary_condition(cone.normals());
  if (!out.minors.passes && out.punctured_gorenstein)
    throw InconsistencyError("minors condition fails although every ray has an integral point");
  if (out.gorenstein && !out.punctured_gorenstein)
    throw InconsistencyError("integral cone point but some ray has no integral point");
  return out;
}

bool in_cone(const SimplicialCone& cone, const IntVector& v) {
  IntVector p = cone.pairings(v);
  return (p.array() >= 0).all();
}

bool in_canonical(const SimplicialCone& cone, const IntVector& v) {
  IntVector p = cone.pairings(v);
  return (p.array() >= 1).all();
}

bool in_anticanonical(const SimplicialCone& cone, const IntVector& v) {
  IntVector p = cone.pairings(v);
  return (p.array() >= -1).all();
}

ConeMembership canonical_and_trace_membership(const SimplicialCone& cone, const IntVector& v,
                                              std::size_t cap) {
  if (v.size() != cone.dimension())
    throw InputError("vector has " + std::to_string(v.size()) + " coordinates, expected " +
                     std::to_string(cone.dimension()));
  ConeMembership out;
  out.canonical = in_canonical(cone, v);
  out.anticanonical = in_anticanonical(cone, v);
  const IntVector pair = cone.pairings(v);
  if (!(pair.array() >= 0).all()) throw InputError("trace membership needs a vector of the cone");

  const Eigen::Index n = cone.dimension();
  Integer volume = 1;
  for (Eigen::Index i = 0; i < n; ++i) volume *= pair(i) + 1;
  if (volume > Integer(cap))
    throw ResourceError("trace membership box has " + to_string(volume) + " points (cap " +
                        std::to_string(cap) + ")");
  const IntMatrix adj = adjugate(cone.normals());
  const Integer det = determinant(cone.normals());
  IntVector p = IntVector::Ones(n);
  while (true) {
    IntVector w = adj * p;
    bool integral = true;
    for (Eigen::Index i = 0; i < n && integral; ++i)
      if (w(i) % det != 0) integral = false;
    if (integral) {
      ConeTraceDecomposition d;
      d.canonical = w / det;
      d.anticanonical = v - d.canonical;
      if (!in_canonical(cone, d.canonical) || !in_anticanonical(cone, d.anticanonical))
        throw InconsistencyError("cone trace decomposition failed to verify");
      out.trace = true;
      out.witness = std::move(d);
      return out;
    }
    Eigen::Index k = n - 1;
    while (k >= 0 && p(k) == pair(k) + 1) {
      p(k) = 1;
      --k;
    }
    if (k < 0) break;
    p(k) += 1;
  }
  return out;
}

IntVector dual_witness(const SimplicialCone& cone, int i) {
  const Eigen::Index n = cone.dimension();
  if (i < 0 || i >= n) throw InputError("normal index out of range");
  const IntVector u = cone.normal(i);
  IntVector m = IntVector::Zero(n);
  Integer g = u(0);
  m(0) = 1;
  for (Eigen::Index k = 1; k < n; ++k) {
    ExtendedGcd eg = extended_gcd(g, u(k));
    m = (m * eg.x).eval();
    m(k) = eg.y;
    g = eg.g;
  }
  if (g < 0) {
    m = -m;
    g = -g;
  }
  if (u.dot(m) != 1) throw InconsistencyError("extended gcd did not reach 1 on a primitive normal");
  if (n > 1) {
    Integer least = 0;
    bool first = true;
    IntVector s = IntVector::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      Integer pj = cone.normal(j).dot(m);
      if (first || pj < least) least = pj;
      first = false;
      s += cone.ray(j);
    }
    Integer lambda = least < 1 ? Integer(1 - least) : Integer(0);
    m += lambda * s;
  }
  IntVector pair = cone.pairings(m);
  for (Eigen::Index j = 0; j < n; ++j) {
    bool ok = j == i ? pair(j) == 1 : pair(j) >= 1;
    if (!ok) throw InconsistencyError("dual witness failed its pairing check");
  }
  return m;
}

SimplicialCone parse_cone(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string header;
  std::vector<std::vector<Integer>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (header.empty()) {
      std::string h = words[0];
      std::transform(h.begin(), h.end(), h.begin(), [](unsigned char ch) { return std::tolower(ch); });
      if (words.size() != 1 || (h != "rays" && h != "normals"))
        throw InputError("line " + std::to_string(line_no) +
                         ": expected header 'rays' or 'normals'");
      header = h;
      continue;
    }
    std::vector<Integer> row;
    for (const auto& w : words) row.push_back(parse_integer(w));
    rows.push_back(std::move(row));
  }
  if (header.empty()) throw InputError("cone file has no 'rays' or 'normals' header");
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("cone file has no rows");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw InputError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return header == "rays" ? SimplicialCone::from_rays(m) : SimplicialCone::from_normals(m);
}

}  // namespace torictrace
