#pragma once

#include <array>

#include "dwexp/grid.hpp"
#include "dwexp/multi_index.hpp"

namespace dwexp {

/// (4 pi t)^{-dim/2} exp(-|x|^2 / 4t). Rejects t <= 0.
double heat_kernel(const std::array<double, 3>& x, double t, int dim);

/// Scaled Gaussian derivative ((-1)^{|alpha|} / alpha!) d^alpha_x G(x, 1+t),
/// t >= 0. The 1+t shift keeps t = 0 regular. Closed Hermite form per axis,
/// exact up to rounding; no transforms involved.
GridFunction g_alpha(const Grid& grid, double t, const MultiIndex& alpha);

/// (-Laplacian)^power applied to g_alpha, again in closed form: Delta^j is
/// expanded as sum over |beta| = j of (j!/beta!) d^{2 beta}, so the far tail
/// carries no periodic aliasing.
GridFunction neg_laplacian_pow_g_alpha(const Grid& grid, double t, const MultiIndex& alpha,
                                       int power);

/// Spectral multiplier exp(-t |xi|^2); t = 0 returns u unchanged.
GridFunction heat_semigroup(const GridFunction& u, double t);

/// Spectral multiplier |xi|^{2 power}; power = 0 is the identity.
GridFunction laplacian_power(const GridFunction& u, int power);

}  // namespace dwexp
