#pragma once

namespace dwexp {

/// Scalar Fourier symbols of the damped-wave evolution operators,
///
///   sigma0(rho^2, t) = e^{-t/2} cos(t sqrt(rho^2 - 1/4)),
///   sigma1(rho^2, t) = e^{-t/2} sin(t sqrt(rho^2 - 1/4)) / sqrt(rho^2 - 1/4),
///
/// with rho = |xi|. Both are entire in s = rho^2 - 1/4, since cos(sqrt(.))
/// and sin(sqrt(.))/sqrt(.) are even functions of the root; the branch of
/// sqrt never enters. Evaluation switches on z = t^2 s: a short Taylor
/// series near z = 0, plain trig for z > 0, and a folded hyperbolic form
/// for z < 0 whose exponents stay <= 0 because sqrt(-s) <= 1/2.
/// Both require rho_sq >= 0 and t >= 0.
double sigma0(double rho_sq, double t);
double sigma1(double rho_sq, double t);

/// Time derivatives through the exact identities
///   d/dt sigma0 = -(1/2) sigma0 - (rho^2 - 1/4) sigma1,
///   d/dt sigma1 =        sigma0 - (1/2) sigma1.
double sigma0_dt(double rho_sq, double t);
double sigma1_dt(double rho_sq, double t);

/// Exact one-mode propagator over a step of length t for the mode ODE
/// u'' + u' + rho^2 u = 0, acting on the pair (u, u'):
///   u(t)  = a00 u(0) + a01 u'(0),
///   u'(t) = a10 u(0) + a11 u'(0).
/// Determinant is e^{-t} (Abel). a00 = sigma0 + sigma1/2, a01 = sigma1,
/// a10 = -rho^2 sigma1, a11 = sigma0 - sigma1/2.
struct PropagatorEntries {
  double a00 = 1.0;
  double a01 = 0.0;
  double a10 = 0.0;
  double a11 = 1.0;
};

PropagatorEntries mode_propagator(double rho_sq, double t);

}  // namespace dwexp
