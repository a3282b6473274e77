// Copyright 2026 the qchan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Fixed-size real and complex linear algebra for one- and two-qubit work:
// 3-vectors and 3x3 real matrices for Bloch-space objects, 2x2 and 4x4
// complex matrices for density operators, plus Jacobi eigensolvers for the
// two matrix shapes that actually occur (real symmetric 3x3, Hermitian 4x4).

#ifndef QCHAN_LINALG_HPP_
#define QCHAN_LINALG_HPP_

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "qchan/errors.hpp"

namespace qchan {

using cxd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

//==============================================================================
// real 3-vectors and 3x3 matrices
//==============================================================================

struct Vec3 {
  std::array<double, 3> c{};

  Vec3() = default;
  Vec3(double x, double y, double z) : c{x, y, z} {}

  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

inline Vec3 operator*(const Vec3& a, double s) { return s * a; }

inline Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double norm_sq(const Vec3& a) { return dot(a, a); }

inline double norm(const Vec3& a) { return std::sqrt(norm_sq(a)); }

// Row-major 3x3 real matrix.
struct Mat3 {
  std::array<double, 9> m{};

  double operator()(int i, int j) const {
    return m[static_cast<std::size_t>(3 * i + j)];
  }
  double& operator()(int i, int j) {
    return m[static_cast<std::size_t>(3 * i + j)];
  }

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }

  static Mat3 diagonal(double a, double b, double c) {
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
  }

  Vec3 column(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.m[k] = a.m[k] + b.m[k];
  return r;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.m[k] = a.m[k] - b.m[k];
  return r;
}

inline Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (std::size_t k = 0; k < 9; ++k) r.m[k] = s * a.m[k];
  return r;
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2];
  return r;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

inline double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

inline double frobenius_sq(const Mat3& a) {
  double s = 0.0;
  for (double v : a.m) s += v * v;
  return s;
}

inline Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}

inline double max_abs(const Mat3& a) {
  double s = 0.0;
  for (double v : a.m) s = std::max(s, std::abs(v));
  return s;
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
  return max_abs(a - b);
}

// Unit vector on the sphere. The constructor normalizes its argument and
// rejects vectors shorter than 1e-12.
class UnitVector3 {
 public:
  explicit UnitVector3(const Vec3& v) {
    double n = norm(v);
    if (n < 1e-12)
      throw InvalidParameter("UnitVector3: vector norm below 1e-12");
    v_ = (1.0 / n) * v;
  }

  // Polar angle alpha in [0, pi], azimuth beta.
  static UnitVector3 from_angles(double alpha, double beta) {
    double sa = std::sin(alpha);
    return UnitVector3({sa * std::cos(beta), sa * std::sin(beta),
                        std::cos(alpha)});
  }

  const Vec3& vec() const { return v_; }
  double operator[](int i) const { return v_[i]; }

 private:
  Vec3 v_;
};

//==============================================================================
// complex 2x2 / 4x4 matrices and 2- / 4-component vectors
//==============================================================================

struct CVec2 {
  std::array<cxd, 2> c{};

  cxd operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  cxd& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

// <a|b> with the conjugation on the first argument.
inline cxd inner(const CVec2& a, const CVec2& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

struct CVec4 {
  std::array<cxd, 4> c{};

  cxd operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  cxd& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

// Row-major 2x2 complex matrix.
struct CMat2 {
  std::array<cxd, 4> m{};

  CMat2() = default;
  CMat2(cxd a, cxd b, cxd c, cxd d) : m{a, b, c, d} {}

  cxd operator()(int i, int j) const {
    return m[static_cast<std::size_t>(2 * i + j)];
  }
  cxd& operator()(int i, int j) {
    return m[static_cast<std::size_t>(2 * i + j)];
  }

  static CMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

inline CMat2 operator+(const CMat2& a, const CMat2& b) {
  CMat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.m[k] = a.m[k] + b.m[k];
  return r;
}

inline CMat2 operator-(const CMat2& a, const CMat2& b) {
  CMat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.m[k] = a.m[k] - b.m[k];
  return r;
}

inline CMat2 operator*(cxd s, const CMat2& a) {
  CMat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.m[k] = s * a.m[k];
  return r;
}

inline CMat2 operator*(double s, const CMat2& a) { return cxd(s, 0.0) * a; }

inline CMat2 operator*(const CMat2& a, const CMat2& b) {
  CMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

inline CVec2 operator*(const CMat2& a, const CVec2& v) {
  CVec2 r;
  r[0] = a(0, 0) * v[0] + a(0, 1) * v[1];
  r[1] = a(1, 0) * v[0] + a(1, 1) * v[1];
  return r;
}

inline CMat2 adjoint(const CMat2& a) {
  CMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline cxd trace(const CMat2& a) { return a(0, 0) + a(1, 1); }

inline double max_abs(const CMat2& a) {
  double s = 0.0;
  for (const cxd& v : a.m) s = std::max(s, std::abs(v));
  return s;
}

inline double max_abs_diff(const CMat2& a, const CMat2& b) {
  return max_abs(a - b);
}

// Row-major 4x4 complex matrix. Composite index convention for two qubits:
// row = 2*i + a where i is the first-factor index and a the second-factor one.
struct CMat4 {
  std::array<cxd, 16> m{};

  cxd operator()(int i, int j) const {
    return m[static_cast<std::size_t>(4 * i + j)];
  }
  cxd& operator()(int i, int j) {
    return m[static_cast<std::size_t>(4 * i + j)];
  }

  static CMat4 identity() {
    CMat4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
  }
};

inline CMat4 operator+(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.m[k] = a.m[k] + b.m[k];
  return r;
}

inline CMat4 operator-(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.m[k] = a.m[k] - b.m[k];
  return r;
}

inline CMat4 operator*(cxd s, const CMat4& a) {
  CMat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.m[k] = s * a.m[k];
  return r;
}

inline CMat4 operator*(double s, const CMat4& a) { return cxd(s, 0.0) * a; }

inline CMat4 operator*(const CMat4& a, const CMat4& b) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cxd s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

inline CVec4 operator*(const CMat4& a, const CVec4& v) {
  CVec4 r;
  for (int i = 0; i < 4; ++i) {
    cxd s = 0.0;
    for (int k = 0; k < 4; ++k) s += a(i, k) * v[k];
    r[i] = s;
  }
  return r;
}

inline CMat4 adjoint(const CMat4& a) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline cxd trace(const CMat4& a) {
  return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3);
}

inline double max_abs(const CMat4& a) {
  double s = 0.0;
  for (const cxd& v : a.m) s = std::max(s, std::abs(v));
  return s;
}

inline double max_abs_diff(const CMat4& a, const CMat4& b) {
  return max_abs(a - b);
}

inline CMat4 kron(const CMat2& a, const CMat2& b) {
  CMat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          r(2 * i + p, 2 * j + q) = a(i, j) * b(p, q);
  return r;
}

inline CMat4 outer(const CVec4& a, const CVec4& b) {
  CMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = a[i] * std::conj(b[j]);
  return r;
}

// Trace over the second (rightmost) factor.
inline CMat2 partial_trace_second(const CMat4& rho) {
  CMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = rho(2 * i + 0, 2 * j + 0) + rho(2 * i + 1, 2 * j + 1);
  return r;
}

// Trace over the first (leftmost) factor.
inline CMat2 partial_trace_first(const CMat4& rho) {
  CMat2 r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      r(a, b) = rho(0 + a, 0 + b) + rho(2 + a, 2 + b);
  return r;
}

// Transpose of the second factor only.
inline CMat4 partial_transpose_second(const CMat4& rho) {
  CMat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          r(2 * i + a, 2 * j + b) = rho(2 * i + b, 2 * j + a);
  return r;
}

//==============================================================================
// eigensolvers
//==============================================================================

// Eigen-decomposition of a real symmetric 3x3 matrix. `values` are sorted in
// nonincreasing order; column j of `vectors` is the eigenvector of values[j].
struct SymEig3 {
  Vec3 values;
  Mat3 vectors;
};

// Cyclic Jacobi rotations. Throws InvalidParameter when the input deviates
// from symmetry by more than 1e-12.
SymEig3 sym_eig3(const Mat3& s);

// Eigen-decomposition of a Hermitian 4x4 matrix, same ordering conventions.
struct HermEig4 {
  std::array<double, 4> values;
  CMat4 vectors;
};

// Complex Jacobi rotations (phase factored out so each sweep reduces to a
// real rotation). Throws InvalidParameter when the input deviates from
// Hermiticity by more than 1e-12.
HermEig4 herm_eig4(const CMat4& h);

}  // namespace qchan

#endif  // QCHAN_LINALG_HPP_
