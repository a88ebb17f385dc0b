#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace anisovac {

using cplx = std::complex<double>;

/// Complex 3-vector in fixed (x, y, z) storage order.
struct Vec3c {
  std::array<cplx, 3> v{};

  cplx& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
};

inline Vec3c operator+(const Vec3c& a, const Vec3c& b) {
  return {{{a[0] + b[0], a[1] + b[1], a[2] + b[2]}}};
}
inline Vec3c operator-(const Vec3c& a, const Vec3c& b) {
  return {{{a[0] - b[0], a[1] - b[1], a[2] - b[2]}}};
}
inline Vec3c operator*(cplx s, const Vec3c& a) {
  return {{{s * a[0], s * a[1], s * a[2]}}};
}
inline Vec3c operator*(const Vec3c& a, cplx s) { return s * a; }

inline Vec3c conj(const Vec3c& a) {
  return {{{std::conj(a[0]), std::conj(a[1]), std::conj(a[2])}}};
}

/// Plain bilinear dot product, no conjugation on either argument.
inline cplx dot(const Vec3c& a, const Vec3c& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Conjugate (sesquilinear) inner product <a|b> = sum conj(a_i) b_i.
inline cplx inner(const Vec3c& a, const Vec3c& b) { return dot(conj(a), b); }

inline double norm(const Vec3c& a) { return std::sqrt(std::real(inner(a, a))); }

/// Complex 3x3 matrix, row-major, (x, y, z) axis order.
struct Mat3c {
  std::array<cplx, 9> m{};

  cplx& operator()(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }
  const cplx& operator()(int i, int j) const {
    return m[static_cast<std::size_t>(3 * i + j)];
  }

  static Mat3c identity() {
    Mat3c r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }
  static Mat3c diag(cplx a, cplx b, cplx c) {
    Mat3c r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
  }
};

inline Mat3c operator+(const Mat3c& a, const Mat3c& b) {
  Mat3c r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}
inline Mat3c operator-(const Mat3c& a, const Mat3c& b) {
  Mat3c r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}
inline Mat3c operator*(cplx s, const Mat3c& a) {
  Mat3c r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
  return r;
}
inline Mat3c operator*(const Mat3c& a, cplx s) { return s * a; }

inline Mat3c operator*(const Mat3c& a, const Mat3c& b) {
  Mat3c r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

inline Vec3c operator*(const Mat3c& a, const Vec3c& x) {
  Vec3c r;
  for (int i = 0; i < 3; ++i) {
    cplx s = 0.0;
    for (int k = 0; k < 3; ++k) s += a(i, k) * x[k];
    r[i] = s;
  }
  return r;
}

/// Conjugate transpose.
inline Mat3c adjoint(const Mat3c& a) {
  Mat3c r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

inline cplx trace(const Mat3c& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

inline cplx det(const Mat3c& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Largest entry magnitude; the scale used by relative tolerances.
inline double max_abs(const Mat3c& a) {
  double r = 0.0;
  for (const auto& e : a.m) r = std::max(r, std::abs(e));
  return r;
}

/// Largest entry magnitude of (a - a^dagger).
inline double hermitian_defect(const Mat3c& a) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a(i, j) - std::conj(a(j, i))));
  return r;
}

/// Eigenvalues of a Hermitian 3x3, ascending. Closed-form trigonometric
/// solution of the characteristic cubic; input is assumed Hermitian (only
/// the Hermitian part is seen through q, p and det, all real quantities).
inline std::array<double, 3> hermitian_eigenvalues(const Mat3c& a) {
  const double q = std::real(trace(a)) / 3.0;
  const double p1 = std::norm(a(0, 1)) + std::norm(a(0, 2)) + std::norm(a(1, 2));
  const double d0 = std::real(a(0, 0)) - q;
  const double d1 = std::real(a(1, 1)) - q;
  const double d2 = std::real(a(2, 2)) - q;
  const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
  if (p2 <= 0.0) return {q, q, q};  // scalar multiple of the identity
  const double p = std::sqrt(p2 / 6.0);
  Mat3c b = (1.0 / p) * (a - q * Mat3c::identity());
  double r = std::real(det(b)) / 2.0;
  r = std::clamp(r, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  const double e2 = 3.0 * q - e1 - e3;
  std::array<double, 3> out{e3, e2, e1};
  if (out[0] > out[1]) std::swap(out[0], out[1]);
  if (out[1] > out[2]) std::swap(out[1], out[2]);
  if (out[0] > out[1]) std::swap(out[0], out[1]);
  return out;
}

}  // namespace anisovac
