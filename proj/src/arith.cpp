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

#include "torictrace/arith.hpp"

#include <charconv>
#include <limits>

namespace torictrace {

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer floor(const Rational& q) {
  Integer n = numerator_of(q);
  Integer d = denominator_of(q);
  Integer f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

Integer ceil(const Rational& q) {
  Integer f = floor(q);
  return (Rational(f) == q) ? f : Integer(f + 1);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
    digits.remove_prefix(1);
  if (digits.empty()) throw InputError("expected an integer, got '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw InputError("expected an integer, got '" + std::string(text) + "'");
  }
  std::string buf(s);
  if (buf.front() == '+') buf.erase(0, 1);
  return Integer(buf);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min())
    throw ResourceError("integer " + z.str() + " exceeds the 64-bit range");
  return z.convert_to<std::int64_t>();
}

std::vector<std::int64_t> to_int64(const IntVector& v) {
  std::vector<std::int64_t> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = to_int64(v(i));
  return out;
}

IntVector from_int64(const std::vector<std::int64_t>& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = Integer(v[i]);
  return out;
}

RatMatrix inverse(const IntMatrix& m) {
  Integer det = determinant(m);
  if (det == 0) throw DegenerateConeError("matrix is singular");
  IntMatrix adj = adjugate(m);
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(adj(i, j), det);
  return out;
}

}  // namespace torictrace
