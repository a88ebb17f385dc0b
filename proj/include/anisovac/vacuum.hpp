#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <variant>
#include <vector>

#include "anisovac/errors.hpp"
#include "anisovac/tensor.hpp"

namespace anisovac {

/// Two parallel perfect-conductor plates at z = 0 and z = -d; the atom sits
/// at z = -b, i.e. at depth b below the upper plate.
struct PlateGeometry {
  double d = 0.0;  // plate separation
  double b = 0.0;  // atom depth, 0 < b < d

  void check() const {
    if (!(d > 0.0) || !std::isfinite(d))
      throw InvalidGeometry("plate separation d must be > 0");
    if (!(b > 0.0) || !(b < d) || !std::isfinite(b))
      throw InvalidGeometry("atom depth b must satisfy 0 < b < d");
  }
};

/// Single perfect mirror; z is the atom-to-mirror distance.
struct MirrorGeometry {
  double z = 0.0;

  void check() const {
    if (!(z > 0.0) || !std::isfinite(z))
      throw NonPositiveDistance("mirror distance z must be > 0");
  }
};

/// Normalized emission rates between the plates for dipoles perpendicular
/// and parallel to them. The mode sum runs over the N guided orders with
/// n < kd/pi (strict: a marginal mode at kd = n pi is excluded).
inline std::pair<double, double> plates_rates(double k, const PlateGeometry& geom) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw NonPositiveWavenumber("wavenumber k must be > 0");
  geom.check();
  const double kd = k * geom.d;
  const double r = kd / M_PI;
  double nf = std::floor(r);
  if (nf == r) nf -= 1.0;  // marginal mode excluded
  const long n_max = std::lround(std::max(nf, 0.0));

  double perp = 3.0 * M_PI / (2.0 * kd);
  double para = 0.0;
  for (long n = 1; n <= n_max; ++n) {
    const double u = M_PI * static_cast<double>(n) / kd;  // in (0, 1)
    const double phase = static_cast<double>(n) * M_PI * geom.b / geom.d;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    perp += (3.0 * M_PI / kd) * (1.0 - u * u) * c * c;
    para += (3.0 * M_PI / (2.0 * kd)) * (1.0 + u * u) * s * s;
  }
  return {perp, para};
}

/// Plate-vacuum tensor diag(G_par, G_par, G_perp) at omega (k = omega, c = 1).
/// Both in-plane axes carry the parallel rate by translational symmetry.
inline CorrelationTensor plates_tensor(double omega, const PlateGeometry& geom) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw NonPositiveFrequency("omega must be > 0");
  const auto [perp, para] = plates_rates(omega, geom);
  return validate({Mat3c::diag(para, para, perp), omega});
}

namespace detail {

// cos(x)/x^2 - sin(x)/x^3, series below x = 0.3 to avoid cancellation.
inline double cos_sin_kernel(double x) {
  if (std::abs(x) < 0.3) {
    const double x2 = x * x;
    return -1.0 / 3.0 +
           x2 * (1.0 / 30.0 +
                 x2 * (-1.0 / 840.0 + x2 * (1.0 / 45360.0 - x2 / 3991680.0)));
  }
  return std::cos(x) / (x * x) - std::sin(x) / (x * x * x);
}

// sin(x)/x + cos(x)/x^2 - sin(x)/x^3, same treatment.
inline double sinc_kernel(double x) {
  if (std::abs(x) < 0.3) {
    const double x2 = x * x;
    return 2.0 / 3.0 +
           x2 * (-2.0 / 15.0 +
                 x2 * (1.0 / 140.0 + x2 * (-1.0 / 5670.0 + x2 / 399168.0)));
  }
  return std::sin(x) / x + cos_sin_kernel(x);
}

}  // namespace detail

/// Normalized rates near a single perfect mirror as functions of x = 2kz,
/// from the reflected field of the image dipole evaluated at the source.
inline std::pair<double, double> mirror_rates(double x) {
  const double perp = 1.0 - 3.0 * detail::cos_sin_kernel(x);
  const double para = 1.0 - 1.5 * detail::sinc_kernel(x);
  return {perp, para};
}

/// Mirror-vacuum tensor diag(G_par, G_par, G_perp) at omega (k = omega, c = 1).
inline CorrelationTensor mirror_tensor(double omega, const MirrorGeometry& geom) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw NonPositiveFrequency("omega must be > 0");
  geom.check();
  const auto [perp, para] = mirror_rates(2.0 * omega * geom.z);
  return validate({Mat3c::diag(para, para, perp), omega});
}

/// Sampled vacuum tensor with per-component linear interpolation in omega.
class TabulatedVacuum {
 public:
  TabulatedVacuum(std::vector<double> omegas, std::vector<CorrelationTensor> tensors)
      : omegas_(std::move(omegas)), tensors_(std::move(tensors)) {
    if (omegas_.empty() || omegas_.size() != tensors_.size())
      throw InvalidGeometry("tabulated vacuum needs matching, nonempty samples");
    for (std::size_t i = 0; i + 1 < omegas_.size(); ++i)
      if (!(omegas_[i] < omegas_[i + 1]))
        throw InvalidGeometry("tabulated omegas must be strictly increasing");
    for (auto& t : tensors_) t = validate(t);
  }

  double omega_min() const { return omegas_.front(); }
  double omega_max() const { return omegas_.back(); }

  CorrelationTensor tensor(double omega) const {
    if (omega < omegas_.front() || omega > omegas_.back()) {
      std::ostringstream os;
      os << "omega " << omega << " outside tabulated range [" << omegas_.front()
         << ", " << omegas_.back() << "]";
      throw OutOfRange(os.str());
    }
    const auto it = std::lower_bound(omegas_.begin(), omegas_.end(), omega);
    const std::size_t hi = static_cast<std::size_t>(it - omegas_.begin());
    if (hi < omegas_.size() && omegas_[hi] == omega) return tensors_[hi];
    const std::size_t lo = hi - 1;
    const double w = (omega - omegas_[lo]) / (omegas_[hi] - omegas_[lo]);
    CorrelationTensor out{(1.0 - w) * tensors_[lo].m + w * tensors_[hi].m, omega};
    try {
      return validate(out);
    } catch (const Error& e) {
      throw ValidationFailed(std::string("interpolated tensor invalid: ") + e.what());
    }
  }

 private:
  std::vector<double> omegas_;
  std::vector<CorrelationTensor> tensors_;
};

inline CorrelationTensor tabulated_tensor(const TabulatedVacuum& table, double omega) {
  return table.tensor(omega);
}

/// Free-space tensor: the identity at any omega > 0 in the normalized
/// convention, so downstream kappas vanish identically.
inline CorrelationTensor free_space(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw NonPositiveFrequency("omega must be > 0");
  return {Mat3c::identity(), omega};
}

/// Any provider mapping angular frequency to a validated tensor.
template <class M>
concept VacuumProvider = requires(const M& m, double omega) {
  { m.tensor(omega) } -> std::convertible_to<CorrelationTensor>;
};

/// Value-type vacuum model covering the built-in geometries plus tabulated
/// user data. Satisfies VacuumProvider.
class VacuumModel {
 public:
  struct FreeSpace {};

  static VacuumModel make_free_space() { return VacuumModel(FreeSpace{}); }
  static VacuumModel make_plates(PlateGeometry g) {
    g.check();
    return VacuumModel(g);
  }
  static VacuumModel make_mirror(MirrorGeometry g) {
    g.check();
    return VacuumModel(g);
  }
  static VacuumModel make_tabulated(TabulatedVacuum t) { return VacuumModel(std::move(t)); }

  CorrelationTensor tensor(double omega) const {
    return std::visit(
        [omega](const auto& g) -> CorrelationTensor {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, FreeSpace>)
            return free_space(omega);
          else if constexpr (std::is_same_v<T, PlateGeometry>)
            return plates_tensor(omega, g);
          else if constexpr (std::is_same_v<T, MirrorGeometry>)
            return mirror_tensor(omega, g);
          else
            return g.tensor(omega);
        },
        kind_);
  }

 private:
  using Kind = std::variant<FreeSpace, PlateGeometry, MirrorGeometry, TabulatedVacuum>;
  explicit VacuumModel(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

static_assert(VacuumProvider<VacuumModel>);

}  // namespace anisovac
