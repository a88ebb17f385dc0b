#pragma once

#include <cmath>
#include <complex>
#include <sstream>

#include "anisovac/tensor.hpp"
#include "anisovac/vacuum.hpp"

namespace anisovac {

/// The two upper Zeeman sublevels of the V-system: |1> = |j=1,m=1> at omega1,
/// |2> = |j=1,m=-1> at omega2, both decaying to |3> = |j=0,m=0|. d_reduced is
/// the reduced dipole matrix element setting the absolute rate scale
/// (1 for normalized runs). Units: hbar = c = 1.
struct AtomicDoublet {
  double omega1 = 1.0;
  double omega2 = 1.0;
  double d_reduced = 1.0;

  void check() const {
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
      throw NonPositiveInput("atomic frequencies must be > 0");
    if (!(d_reduced > 0.0))
      throw NonPositiveInput("reduced dipole matrix element must be > 0");
  }
};

/// Master-equation coefficients: decay rates gamma_i, interference
/// coefficients kappa_i (complex-capable; real for the built-in lossless
/// geometries) and the free-space references gamma0_i.
struct DecayCoefficients {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  cplx kappa1{0.0, 0.0};
  cplx kappa2{0.0, 0.0};
  double gamma0_1 = 0.0;
  double gamma0_2 = 0.0;
};

/// Free-space decay rate 2 omega^3 d^2 / 3 (hbar = c = 1).
inline double gamma_free(double omega, double d_reduced) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw NonPositiveInput("gamma_free: omega must be > 0");
  if (!(d_reduced > 0.0) || !std::isfinite(d_reduced))
    throw NonPositiveInput("gamma_free: d_reduced must be > 0");
  return 2.0 * omega * omega * omega * d_reduced * d_reduced / 3.0;
}

/// Coefficients from an arbitrary vacuum model by contracting the normalized
/// tensor with the circular basis:
///   gamma1 = gamma0_1 e-.C(w1).e+      kappa1 = gamma0_1 e+.C(w1).e+
///   gamma2 = gamma0_2 e+.C(w2).e-      kappa2 = gamma0_2 e-.C(w2).e-
/// A per-frequency Cauchy-Schwarz check flags non-PSD tensors that slipped
/// through validation.
template <VacuumProvider Model>
DecayCoefficients from_vacuum(const Model& model, const AtomicDoublet& atom) {
  atom.check();
  const auto [ep, em] = circular_basis();
  const CorrelationTensor c1 = model.tensor(atom.omega1);
  const CorrelationTensor c2 = model.tensor(atom.omega2);

  DecayCoefficients out;
  out.gamma0_1 = gamma_free(atom.omega1, atom.d_reduced);
  out.gamma0_2 = gamma_free(atom.omega2, atom.d_reduced);

  // e- = conj(e+), so these contractions are Hermitian quadratic forms.
  const double form_p1 = std::real(contract(em, c1, ep));  // e+^dag C1 e+
  const double form_m1 = std::real(contract(ep, c1, em));  // e-^dag C1 e-
  const double form_p2 = std::real(contract(em, c2, ep));
  const double form_m2 = std::real(contract(ep, c2, em));

  out.gamma1 = out.gamma0_1 * form_p1;
  out.gamma2 = out.gamma0_2 * form_m2;
  out.kappa1 = out.gamma0_1 * contract(ep, c1, ep);
  out.kappa2 = out.gamma0_2 * contract(em, c2, em);

  const double bound1 = out.gamma0_1 * std::sqrt(std::max(form_p1 * form_m1, 0.0));
  const double bound2 = out.gamma0_2 * std::sqrt(std::max(form_p2 * form_m2, 0.0));
  const double slack1 = 1e-10 * out.gamma0_1 + 1e-10 * bound1;
  const double slack2 = 1e-10 * out.gamma0_2 + 1e-10 * bound2;
  if (std::abs(out.kappa1) > bound1 + slack1 || std::abs(out.kappa2) > bound2 + slack2) {
    std::ostringstream os;
    os << "Cauchy-Schwarz violated: |kappa1| = " << std::abs(out.kappa1)
       << " vs bound " << bound1 << ", |kappa2| = " << std::abs(out.kappa2)
       << " vs bound " << bound2 << " (non-PSD tensor?)";
    throw CauchySchwarzViolation(os.str());
  }
  return out;
}

/// Plate coefficients straight from the closed forms,
/// gamma_i = gamma0_i (G_perp + G_par)/2 and kappa_i = gamma0_i (G_perp - G_par)/2
/// evaluated at k = omega_i (c = 1). Equals the contraction route exactly.
inline DecayCoefficients plates_closed_form(const PlateGeometry& geom,
                                            const AtomicDoublet& atom) {
  geom.check();
  atom.check();
  DecayCoefficients out;
  out.gamma0_1 = gamma_free(atom.omega1, atom.d_reduced);
  out.gamma0_2 = gamma_free(atom.omega2, atom.d_reduced);
  const auto [perp1, para1] = plates_rates(atom.omega1, geom);
  const auto [perp2, para2] = plates_rates(atom.omega2, geom);
  out.gamma1 = out.gamma0_1 * (perp1 + para1) / 2.0;
  out.gamma2 = out.gamma0_2 * (perp2 + para2) / 2.0;
  out.kappa1 = out.gamma0_1 * (perp1 - para1) / 2.0;
  out.kappa2 = out.gamma0_2 * (perp2 - para2) / 2.0;
  return out;
}

}  // namespace anisovac
