#pragma once

#include <cmath>
#include <sstream>
#include <utility>

#include "anisovac/errors.hpp"
#include "anisovac/linalg.hpp"

namespace anisovac {

/// Normalized vacuum correlation tensor at a single angular frequency.
///
/// Stored in units of the free-space strength, so the free-space tensor is
/// exactly the identity and plate/mirror tensors carry the relative
/// enhancement per Cartesian axis. Axis convention is fixed globally:
/// conductor normal along z, magnetic field along y, (x, y, z) storage order.
struct CorrelationTensor {
  Mat3c m;
  double omega = 0.0;
};

inline constexpr double kHermitianTol = 1e-12;  // relative asymmetry
inline constexpr double kPsdTol = 1e-10;        // relative eigenvalue floor

/// Circular polarization unit vectors (e+, e-) = (z_hat +- i x_hat)/sqrt(2)
/// with the quantization axis along y.
inline std::pair<Vec3c, Vec3c> circular_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Vec3c plus{{{cplx(0.0, s), 0.0, cplx(s, 0.0)}}};
  Vec3c minus{{{cplx(0.0, -s), 0.0, cplx(s, 0.0)}}};
  return {plus, minus};
}

/// Bilinear scalar left . C . right = sum_{ab} left_a C_ab right_b.
/// Never conjugates: callers pass already-conjugated vectors where needed.
inline cplx contract(const Vec3c& left, const CorrelationTensor& tensor,
                     const Vec3c& right) {
  cplx s = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) s += left[a] * tensor.m(a, b) * right[b];
  return s;
}

/// Checks Hermiticity and positive semidefiniteness. Returns the tensor with
/// Hermiticity enforced by symmetrization when the asymmetry is below the
/// relative tolerance; throws otherwise.
inline CorrelationTensor validate(const CorrelationTensor& tensor) {
  const double scale = max_abs(tensor.m);
  const double defect = hermitian_defect(tensor.m);
  if (defect > kHermitianTol * std::max(scale, 1e-300)) {
    std::ostringstream os;
    os << "correlation tensor is not Hermitian: asymmetry " << defect
       << " exceeds " << kHermitianTol << " relative (scale " << scale << ")";
    throw NotHermitian(os.str());
  }
  CorrelationTensor out = tensor;
  out.m = 0.5 * (tensor.m + adjoint(tensor.m));
  const auto eig = hermitian_eigenvalues(out.m);
  if (eig[0] < -kPsdTol * eig[2]) {
    std::ostringstream os;
    os << "correlation tensor is not positive semidefinite: min eigenvalue "
       << eig[0] << " below -" << kPsdTol << " * " << eig[2];
    throw NotPositive(os.str());
  }
  return out;
}

}  // namespace anisovac
