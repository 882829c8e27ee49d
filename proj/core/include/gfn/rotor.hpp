#pragma once

#include "gfn/quadrature.hpp"
#include "gfn/types.hpp"

namespace gfn {

/// Symmetric-top rigid polar molecule: I1 = I2 by construction, dipole
/// along the symmetry (3-)axis. The dipole magnitude only normalises the
/// correlation function and cancels in every output.
struct RotorSpec {
  double i1 = 1.0;
  double i3 = 1.0;
  double dipole = 1.0;
};

/// Thermodynamic and driving parameters of the linear response problem.
struct ResponseParams {
  double beta = 1.0;   // 1 / (k_B T)
  double tau = 1.0;    // collisional relaxation time
  double omega = 0.0;  // applied angular frequency
};

/// One sample of the dimensionless-time dipole autocorrelation,
/// u = L t / I3.
struct CorrelationPoint {
  double u = 0.0;
  double value = 1.0;
};

/// f(theta, psi) = (I3/I1) sin^2(theta) sin^2(psi)
///               + (I3/I2) sin^2(theta) cos^2(psi) + cos^2(theta),
/// the map from total angular momentum to rotational kinetic energy.
/// With I2 = I1 the psi dependence drops out; the parameter is kept for a
/// future asymmetric extension. Always within
/// [min(1, I3/I1), max(1, I3/I1)].
double angular_factor(double theta, double psi, const RotorSpec& rotor);

/// Rotational kinetic energy f(theta, psi) L^2 / (2 I3). The translational
/// term is a constant under the ensemble average and is dropped.
double rotational_energy(double L, double theta, double psi,
                         const RotorSpec& rotor);

/// Free symmetric-top dipole-axis autocorrelation
///   cos(gamma) = cos^2(theta) + sin^2(theta) cos((I3/I1) u),
/// theta the fixed tilt of the symmetry axis against the conserved L and
/// (I3/I1) u the precession phase in dimensionless time.
double cos_gamma(double theta, double u, const RotorSpec& rotor);

/// Kernel int_0^inf L exp(-(beta f / 2 I3) L^2 - (1/tau - i omega) I3 u / L) dL
/// via the substitution L = y sqrt(2 I3 / (beta f)), which reduces it to
///   (2 I3 / (beta f)) g_1(z),  z = (1/tau - i omega) u sqrt(beta f I3 / 2).
/// Re z > 0 and Im z <= 0, so z stays on the evaluated quadrant.
Complex g_kernel(double theta, double u, const RotorSpec& rotor,
                 const ResponseParams& params, const QuadratureConfig& cfg);

/// Partition normaliser over the same angular/L measure as the correlation
/// numerator at u = 0:
///   Z = int sin(theta) dtheta dpsi (I3 / (beta f)),
/// which forces C(0) = 1. The L integral is closed form; the angular
/// integral uses fixed-order Gauss-Legendre in cos(theta).
double partition_normalizer(const RotorSpec& rotor, const ResponseParams& params);

/// Dimensionless-time dipole autocorrelation
///   C(u) = <cos gamma(theta, u)> with weight sin(theta) I3/(beta f).
CorrelationPoint dipole_correlation(double u, const RotorSpec& rotor,
                                    const ResponseParams& params);

/// Physical-time correlation C_t(t): for each theta the Boltzmann L-average
/// of cos gamma(theta, L t / I3). The L-average of cos(L t / I1) against
/// L exp(-a L^2) has the closed form 1 - q F(q/2) with q = (t/I1)
/// sqrt(2 I3 / (beta f)) and F the Dawson integral; the reduction is
/// checked against direct L-quadrature in the tests.
double correlation_time_domain(double t, const RotorSpec& rotor,
                               const ResponseParams& params);

/// chi_s(omega + i/tau) / chi_s(0) =
///   1 + i (omega + i/tau) int_0^inf e^{i (omega + i/tau) t} C_t(t) dt,
/// evaluated in the physical-time domain (the normative path). At omega = 0
/// the computation runs in real arithmetic and the imaginary part is
/// exactly zero.
Complex susceptibility_ratio(const RotorSpec& rotor, const ResponseParams& params,
                             const QuadratureConfig& cfg);

/// Same ratio with the time-integral error estimate attached.
struct ChiPoint {
  Complex value{};
  double abs_error_estimate = 0.0;
};
ChiPoint susceptibility_ratio_detailed(const RotorSpec& rotor,
                                       const ResponseParams& params,
                                       const QuadratureConfig& cfg);

/// Second route: the dimensionless-time triple integral. Substituting
/// t = I3 u / L per (theta, L) carries the Jacobian dt = (I3/L) du, which
/// cancels the L weight, so the inner kernel reduces to
///   int_0^inf exp(-a L^2 - c u / L) dL = sqrt(2 I3/(beta f)) g_0(z)
/// with the same z as g_kernel. Must agree with susceptibility_ratio.
Complex susceptibility_ratio_u_domain(const RotorSpec& rotor,
                                      const ResponseParams& params,
                                      const QuadratureConfig& cfg);

}  // namespace gfn
