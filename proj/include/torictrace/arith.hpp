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

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "torictrace/errors.hpp"

namespace torictrace {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

// ---------------------------------------------------------------------------
// Scalars

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Least nonnegative residue of a modulo |m|; m != 0.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer am = abs(m);
  Integer r = a % am;
  if (r < 0) r += am;
  return r;
}

struct ExtendedGcd {
  Integer g;  // >= 0
  Integer x;
  Integer y;  // a*x + b*y == g
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// "p/q" in lowest terms with q > 0, always including the denominator.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "p/q", with optional sign; q must be nonzero.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Narrowing with a range check.
std::int64_t to_int64(const Integer& z);

// ---------------------------------------------------------------------------
// Vectors and matrices

/// gcd of all entries (0 for the zero vector).
template <typename Derived>
Integer content(const Eigen::MatrixBase<Derived>& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
  return g;
}

template <typename Derived>
bool is_primitive(const Eigen::MatrixBase<Derived>& v) {
  return content(v) == 1;
}

/// v divided by its content; v must be nonzero.
template <typename Derived>
IntVector primitive(const Eigen::MatrixBase<Derived>& v) {
  Integer g = content(v);
  if (g == 0) throw DomainError("primitive(): zero vector");
  IntVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

/// Fraction-free Gaussian elimination (Bareiss); exact for Integer and
/// Rational scalars.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw DomainError("determinant(): matrix is not square");
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Matrix with row `skip_row` and column `skip_col` removed.
template <typename Derived>
Matrix<typename Derived::Scalar> minor_matrix(
    const Eigen::MatrixBase<Derived>& m, Eigen::Index skip_row,
    Eigen::Index skip_col) {
  const Eigen::Index n = m.rows();
  Matrix<typename Derived::Scalar> out(n - 1, m.cols() - 1);
  for (Eigen::Index i = 0, r = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (Eigen::Index j = 0, c = 0; j < m.cols(); ++j) {
      if (j == skip_col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

/// Submatrix on the given (sorted) row and column index sets.
template <typename Derived>
Matrix<typename Derived::Scalar> submatrix(
    const Eigen::MatrixBase<Derived>& m, const std::vector<int>& rows,
    const std::vector<int>& cols) {
  Matrix<typename Derived::Scalar> out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

/// Classical adjoint: adj(M) * M == M * adj(M) == det(M) * I.
template <typename Derived>
Matrix<typename Derived::Scalar> adjugate(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  Matrix<Scalar> adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Scalar c = determinant(minor_matrix(m, i, j));
      adj(j, i) = ((i + j) % 2 == 0) ? c : Scalar(-c);
    }
  }
  return adj;
}

/// Exact inverse over the rationals; throws DegenerateConeError if singular.
RatMatrix inverse(const IntMatrix& m);

inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }
inline RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }

std::vector<std::int64_t> to_int64(const IntVector& v);
IntVector from_int64(const std::vector<std::int64_t>& v);

}  // namespace torictrace
