#pragma once

#include <complex>
#include <vector>

#include "dwexp/grid.hpp"

namespace dwexp {

/// K0(t): spectral multiplier sigma0(|xi|^2, t). t = 0 returns phi unchanged.
GridFunction k0_apply(const GridFunction& phi, double t);

/// K1(t): spectral multiplier sigma1(|xi|^2, t). t = 0 returns the zero
/// field (sigma1 vanishes at t = 0; the operator is O(t) near zero).
GridFunction k1_apply(const GridFunction& phi, double t);

/// One-dimensional integral form of (K1(t) phi)(x):
///   (t/2) e^{-t/2} int_{|y|<=1} I0((t/2) sqrt(1-y^2)) phi(x + t y) dy.
/// Mathematically identical to k1_apply; kept as an independent
/// cross-validation path. phi is read by periodic cubic interpolation,
/// the y integral by composite 4-point Gauss-Legendre. The I0 factor is
/// entire in y (a function of the polynomial (t^2/4)(1-y^2)), so the
/// quadrature sees a smooth integrand. Requires dim = 1 and t > 0.
double k1_bessel_1d(const GridFunction& phi, double t, double x);

/// Heat-semigroup approximants of K0 and K1 at expansion order K >= 0,
/// with J = floor(K/2):
///   V0 = (1/2) sum_{l+m <= J}   Phi_{l,m}        (-t)^l (-Lap)^{2l+m}   e^{t Lap},
///   V1 =       sum_{l+m+n <= J} Phi_{l,m} Psi_n  (-t)^l (-Lap)^{2l+m+n} e^{t Lap}.
/// Assembled as a single multiplier: a polynomial in |xi|^2 (coefficients
/// summed exactly as rationals per power, converted to double once) times
/// e^{-t |xi|^2}. K = 0 reduces V1 to the heat semigroup and V0 to half of
/// it. Requires t > 0.
GridFunction v0_apply(const GridFunction& phi, double t, double K);
GridFunction v1_apply(const GridFunction& phi, double t, double K);

/// Auxiliary weighted functional, one-dimensional verification path:
///   sqrt(t) int_{|y|<=1} e^{-t y^2/2} (1-y^2)^{-m/4} |phi(x + t y)| dy,
/// sampled at every grid point. The substitution 1 - |y| = w^4 on each half
/// of [-1, 1] turns the endpoint weight into the smooth factor
/// (2 - w^4)^{-m/4} w^{3-m}, so a fixed Gauss-Legendre rule converges
/// cleanly for every m in {0, 1, 2, 3}. Requires dim = 1 and t > 0.
GridFunction kcal_m(const GridFunction& phi, double t, int m);

/// Composite-trapezoid accumulation of the Duhamel integral
///   int_0^{t_i} K1(t_i - s) h(s) ds,  s_j = j * dt,
/// advanced in spectral space with one transform per node. The state is a
/// position/velocity mode pair evolved by the exact one-step propagator;
/// each new node enters with full weight dt, which is still the trapezoid
/// value because sigma1(0) = 0 kills the newest node's own contribution to
/// the position. Node 0 keeps its dt/2 endpoint weight throughout.
class DuhamelAccumulator {
 public:
  DuhamelAccumulator(const Grid& grid, double dt);

  /// Appends the integrand sample h(s_i) at the next node. After the call,
  /// position() equals the trapezoid value of the integral at s_i.
  void push(const GridFunction& h);

  /// The accumulated integral at the newest node; the zero field until two
  /// nodes have been pushed (a single node spans no interval).
  GridFunction position() const;

  int node_count() const { return count_; }
  double dt() const { return dt_; }
  const Grid& grid() const { return grid_; }

 private:
  Grid grid_;
  double dt_;
  int count_ = 0;
  // Per-mode entries of the exact propagator over one step, fixed at dt.
  std::vector<double> a00_, a01_, a10_, a11_;
  std::vector<std::complex<double>> p_, v_;
};

}  // namespace dwexp
