#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "anisovac/coefficients.hpp"
#include "anisovac/errors.hpp"
#include "anisovac/linalg.hpp"

namespace anisovac {

/// 3x3 Hermitian, unit-trace, positive-semidefinite state of the V-system
/// over the basis (|1>, |2>, |3>).
struct DensityMatrix {
  Mat3c m;

  static constexpr double kHermTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kEigFloor = -1e-8;

  void check() const {
    const double scale = std::max(max_abs(m), 1.0);
    if (hermitian_defect(m) > kHermTol * scale)
      throw InvalidInitialState("density matrix is not Hermitian");
    if (std::abs(trace(m) - 1.0) > kTraceTol)
      throw InvalidInitialState("density matrix trace differs from 1");
    if (hermitian_eigenvalues(m)[0] < kEigFloor)
      throw InvalidInitialState("density matrix has a negative eigenvalue");
  }

  static DensityMatrix from_matrix(const Mat3c& m) {
    DensityMatrix rho{m};
    rho.check();
    return rho;
  }

  /// Pure state from (unnormalized) amplitudes on (|1>, |2>, |3>).
  static DensityMatrix pure(cplx a1, cplx a2, cplx a3) {
    const double n2 = std::norm(a1) + std::norm(a2) + std::norm(a3);
    if (!(n2 > 0.0)) throw InvalidInitialState("pure state needs a nonzero amplitude");
    const cplx a[3] = {a1, a2, a3};
    Mat3c m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = a[i] * std::conj(a[j]) / n2;
    return {m};
  }

  static DensityMatrix ground() { return pure(0.0, 0.0, 1.0); }
  static DensityMatrix excited1() { return pure(1.0, 0.0, 0.0); }
  static DensityMatrix excited2() { return pure(0.0, 1.0, 0.0); }
};

/// V-system parameters: level frequencies plus the dissipative coefficients.
struct VSystem {
  double omega1 = 0.0;
  double omega2 = 0.0;
  DecayCoefficients k;

  double rate_scale() const {
    return std::max({std::abs(omega1), std::abs(omega2), k.gamma1, k.gamma2,
                     std::abs(k.kappa1), std::abs(k.kappa2)});
  }
};

/// Right-hand side of the V-system master equation as a linear map on
/// arbitrary complex 3x3 matrices (no Hermiticity assumed, so the same
/// formulas define the Liouvillian columns). Component form:
///   d rho11 = -2 g1 rho11 + k2 rho21 + k2* rho12
///   d rho22 = -2 g2 rho22 + k1 rho12 + k1* rho21
///   d rho12 = -[i(w1-w2) + g1 + g2] rho12 + k2 rho22 + k1* rho11
///   d rho13 = -(i w1 + g1) rho13 + k2 rho23
///   d rho23 = -(i w2 + g2) rho23 + k1 rho13
///   d rho33 = 2 g1 rho11 + 2 g2 rho22 - (k2 + k1*) rho21 - (k2* + k1) rho12
/// plus the mirrored lower-triangle equations.
inline Mat3c rhs(const VSystem& sys, const Mat3c& rho) {
  const double g1 = sys.k.gamma1, g2 = sys.k.gamma2;
  const cplx k1 = sys.k.kappa1, k2 = sys.k.kappa2;
  const cplx k1c = std::conj(k1), k2c = std::conj(k2);
  const cplx i1(0.0, sys.omega1), i2(0.0, sys.omega2);

  Mat3c d;
  d(0, 0) = -2.0 * g1 * rho(0, 0) + k2 * rho(1, 0) + k2c * rho(0, 1);
  d(1, 1) = -2.0 * g2 * rho(1, 1) + k1 * rho(0, 1) + k1c * rho(1, 0);
  d(2, 2) = 2.0 * g1 * rho(0, 0) + 2.0 * g2 * rho(1, 1) -
            (k2 + k1c) * rho(1, 0) - (k2c + k1) * rho(0, 1);
  d(0, 1) = -(i1 - i2 + g1 + g2) * rho(0, 1) + k2 * rho(1, 1) + k1c * rho(0, 0);
  d(1, 0) = -(i2 - i1 + g1 + g2) * rho(1, 0) + k2c * rho(1, 1) + k1 * rho(0, 0);
  d(0, 2) = -(i1 + g1) * rho(0, 2) + k2 * rho(1, 2);
  d(1, 2) = -(i2 + g2) * rho(1, 2) + k1 * rho(0, 2);
  d(2, 0) = (i1 - g1) * rho(2, 0) + k2c * rho(2, 1);
  d(2, 1) = (i2 - g2) * rho(2, 1) + k1c * rho(2, 0);
  return d;
}

inline Mat3c rhs(const VSystem& sys, const DensityMatrix& rho) { return rhs(sys, rho.m); }

/// Column-stacking of the (|1>,|2>,|3>) basis: vec(rho)[i + 3j] = rho_ij.
inline Eigen::Vector<std::complex<double>, 9> vectorize(const Mat3c& rho) {
  Eigen::Vector<std::complex<double>, 9> v;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) v[i + 3 * j] = rho(i, j);
  return v;
}

inline Mat3c unvectorize(const Eigen::Vector<std::complex<double>, 9>& v) {
  Mat3c m;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) m(i, j) = v[i + 3 * j];
  return m;
}

using Liouvillian = Eigen::Matrix<std::complex<double>, 9, 9>;

/// Matrix of the master equation acting on column-stacked density matrices:
/// vec(rhs(rho)) = L vec(rho) for every rho.
inline Liouvillian liouvillian(const VSystem& sys) {
  Liouvillian L;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      Mat3c unit;
      unit(i, j) = 1.0;
      L.col(i + 3 * j) = vectorize(rhs(sys, unit));
    }
  return L;
}

inline std::vector<cplx> liouvillian_spectrum(const VSystem& sys) {
  Eigen::ComplexEigenSolver<Liouvillian> ces(liouvillian(sys), false);
  std::vector<cplx> out(9);
  for (int i = 0; i < 9; ++i) out[static_cast<std::size_t>(i)] = ces.eigenvalues()[i];
  return out;
}

/// Integrated trajectory. States are recorded on the stride (plus the final
/// step) and never renormalized: trace drift is a measurable quantity.
struct Trajectory {
  std::vector<double> times;
  std::vector<Mat3c> states;
  VSystem sys;
  double dt = 0.0;
  std::size_t stride = 1;
  std::string method = "rk4";
  bool step_warning = false;  // dt above the recommended 0.05 / rate-scale
};

namespace detail {

inline void check_recorded_state(const Mat3c& m, double t) {
  const double scale = std::max(max_abs(m), 1.0);
  if (hermitian_defect(m) > DensityMatrix::kHermTol * scale) {
    std::ostringstream os;
    os << "integrator lost Hermiticity at t = " << t;
    throw Error(os.str());
  }
  if (std::abs(trace(m) - 1.0) > DensityMatrix::kTraceTol) {
    std::ostringstream os;
    os << "trace drift exceeded tolerance at t = " << t
       << ": trace = " << std::real(trace(m));
    throw Error(os.str());
  }
  const double lo = hermitian_eigenvalues(0.5 * (m + adjoint(m)))[0];
  if (lo < DensityMatrix::kEigFloor) {
    std::ostringstream os;
    os << "state positivity violated at t = " << t << ": min eigenvalue " << lo
       << " (coefficients outside the Cauchy-Schwarz region?)";
    throw PositivityViolation(os.str());
  }
}

}  // namespace detail

/// Classical fixed-step fourth-order Runge-Kutta integration of the master
/// equation from rho0 over [0, t_end]; t_end is rounded up to a whole number
/// of steps. Throws StepTooLarge when dt exceeds 0.5 / rate-scale; flags a
/// warning above the recommended 0.05 / rate-scale.
inline Trajectory evolve(const VSystem& sys, const DensityMatrix& rho0, double t_end,
                         double dt, std::size_t stride = 1) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw NonPositiveInput("evolve: dt must be > 0");
  if (!(t_end >= 0.0) || !std::isfinite(t_end))
    throw NonPositiveInput("evolve: t_end must be >= 0");
  if (stride == 0) stride = 1;
  rho0.check();

  const double rs = sys.rate_scale();
  if (rs > 0.0 && dt > 0.5 / rs) {
    std::ostringstream os;
    os << "evolve: dt = " << dt << " exceeds 0.5 / rate-scale = " << 0.5 / rs;
    throw StepTooLarge(os.str());
  }

  Trajectory traj;
  traj.sys = sys;
  traj.dt = dt;
  traj.stride = stride;
  traj.step_warning = rs > 0.0 && dt > 0.05 / rs;

  const auto n = static_cast<std::size_t>(std::ceil(t_end / dt * (1.0 - 1e-12)));
  Mat3c rho = rho0.m;
  traj.times.push_back(0.0);
  traj.states.push_back(rho);
  for (std::size_t i = 1; i <= n; ++i) {
    const Mat3c k1 = rhs(sys, rho);
    const Mat3c k2 = rhs(sys, rho + (0.5 * dt) * k1);
    const Mat3c k3 = rhs(sys, rho + (0.5 * dt) * k2);
    const Mat3c k4 = rhs(sys, rho + dt * k3);
    rho = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (i % stride == 0 || i == n) {
      const double t = static_cast<double>(i) * dt;
      detail::check_recorded_state(rho, t);
      traj.times.push_back(t);
      traj.states.push_back(rho);
    }
  }
  return traj;
}

/// Orthonormal basis of the Liouvillian null space (eigenvalue magnitude
/// below 1e-10 x rate-scale), reshaped to 3x3 candidates. The ground state
/// |3><3| is always stationary; any null direction with weight in the
/// excited 2x2 block signals population trapping.
struct DarkStateReport {
  std::vector<Mat3c> basis;
  std::vector<cplx> eigenvalues;
  bool ground_state_present = false;
  bool trapped_excited = false;
  double max_excited_weight = 0.0;

  /// True when m lies in the span of the null-space basis.
  bool contains(const Mat3c& m, double tol = 1e-8) const {
    auto v = vectorize(m);
    const double n = v.norm();
    if (!(n > 0.0)) return true;
    Eigen::Vector<std::complex<double>, 9> proj = v;
    proj.setZero();
    for (const auto& b : basis) {
      const auto q = vectorize(b);
      proj += q.dot(v) * q;
    }
    return (v - proj).norm() <= tol * n;
  }
};

inline DarkStateReport dark_states(const VSystem& sys) {
  Eigen::ComplexEigenSolver<Liouvillian> ces(liouvillian(sys), true);
  const double tol = 1e-10 * sys.rate_scale();

  DarkStateReport report;
  std::vector<Eigen::Vector<std::complex<double>, 9>> basis;
  for (int i = 0; i < 9; ++i) {
    if (std::abs(ces.eigenvalues()[i]) > tol) continue;
    Eigen::Vector<std::complex<double>, 9> q = ces.eigenvectors().col(i);
    for (const auto& b : basis) q -= b.dot(q) * b;  // Gram-Schmidt
    if (q.norm() < 1e-8) continue;                  // dependent eigenvector
    q /= q.norm();
    basis.push_back(q);
    report.eigenvalues.push_back(ces.eigenvalues()[i]);
    report.basis.push_back(unvectorize(q));
    double w = 0.0;
    for (int idx : {0, 1, 3, 4}) w += std::norm(q[idx]);  // (1,2) block weight
    report.max_excited_weight = std::max(report.max_excited_weight, w);
  }
  report.trapped_excited = report.max_excited_weight > 1e-8;
  report.ground_state_present = report.contains(DensityMatrix::ground().m);
  return report;
}

/// Per-time scalar observables of a trajectory.
struct ObservablePoint {
  double t = 0.0;
  double rho11 = 0.0;
  double rho22 = 0.0;
  double rho33 = 0.0;
  double re_rho12 = 0.0;
  double im_rho12 = 0.0;
  double excited = 0.0;
  double emission_rate = 0.0;  // instantaneous rate into the vacuum, = d rho33/dt
};

inline std::vector<ObservablePoint> observables(const Trajectory& traj) {
  const double g1 = traj.sys.k.gamma1, g2 = traj.sys.k.gamma2;
  const cplx cross = traj.sys.k.kappa2 + std::conj(traj.sys.k.kappa1);
  std::vector<ObservablePoint> out;
  out.reserve(traj.states.size());
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const Mat3c& m = traj.states[i];
    ObservablePoint p;
    p.t = traj.times[i];
    p.rho11 = std::real(m(0, 0));
    p.rho22 = std::real(m(1, 1));
    p.rho33 = std::real(m(2, 2));
    p.re_rho12 = std::real(m(0, 1));
    p.im_rho12 = std::imag(m(0, 1));
    p.excited = p.rho11 + p.rho22;
    p.emission_rate =
        2.0 * g1 * p.rho11 + 2.0 * g2 * p.rho22 - 2.0 * std::real(cross * m(1, 0));
    out.push_back(p);
  }
  return out;
}

}  // namespace anisovac
