#pragma once

#include <array>
#include <complex>

namespace udw {

using cplx = std::complex<double>;

// 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<cplx, 4> m{};

  cplx& operator()(int i, int j) { return m[2 * i + j]; }
  const cplx& operator()(int i, int j) const { return m[2 * i + j]; }

  static Mat2 zero() { return {}; }
  static Mat2 identity() { return {{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

inline Mat2 operator*(cplx s, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
  return r;
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

inline Mat2 adjoint(const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline cplx trace(const Mat2& a) { return a(0, 0) + a(1, 1); }

// Row-major vectorization (rho_00, rho_01, rho_10, rho_11).
using Vec4 = std::array<cplx, 4>;

inline Vec4 vec_of(const Mat2& a) { return {a.m[0], a.m[1], a.m[2], a.m[3]}; }
inline Mat2 mat_of(const Vec4& v) { return Mat2{{v[0], v[1], v[2], v[3]}}; }

// 4x4 complex matrix acting on Vec4, row-major.
struct Mat4 {
  std::array<cplx, 16> m{};

  cplx& operator()(int i, int j) { return m[4 * i + j]; }
  const cplx& operator()(int i, int j) const { return m[4 * i + j]; }

  static Mat4 zero() { return {}; }
  static Mat4 identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
    return r;
  }
};

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

inline Mat4 operator*(cplx s, const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
  return r;
}

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0)) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline Vec4 operator*(const Mat4& a, const Vec4& v) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    r[i] = a(i, 0) * v[0] + a(i, 1) * v[1] + a(i, 2) * v[2] + a(i, 3) * v[3];
  return r;
}

// vec(A rho B) = (A (x) B^T) vec(rho) for the row-major vectorization.
inline Mat4 sandwich(const Mat2& a, const Mat2& b) {
  Mat4 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + j, 2 * k + l) = a(i, k) * b(l, j);
  return r;
}

inline Mat4 left_mult(const Mat2& a) { return sandwich(a, Mat2::identity()); }
inline Mat4 right_mult(const Mat2& b) { return sandwich(Mat2::identity(), b); }

}  // namespace udw
