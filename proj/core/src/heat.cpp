#include "dwexp/heat.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dwexp/hermite.hpp"
#include "dwexp/spectral.hpp"

namespace dwexp {

double heat_kernel(const std::array<double, 3>& x, double t, int dim) {
  if (!(t > 0.0)) throw std::invalid_argument("heat_kernel: t must be positive");
  if (dim < 1 || dim > 3) throw std::invalid_argument("heat_kernel: bad dim");
  double r2 = 0.0;
  for (int d = 0; d < dim; ++d) r2 += x[d] * x[d];
  return std::pow(4.0 * M_PI * t, -0.5 * dim) * std::exp(-r2 / (4.0 * t));
}

GridFunction neg_laplacian_pow_g_alpha(const Grid& grid, double t, const MultiIndex& alpha,
                                       int power) {
  if (t < 0.0) throw std::invalid_argument("g_alpha: t must be nonnegative");
  if (power < 0) throw std::invalid_argument("g_alpha: negative Laplacian power");
  if (alpha.dim != grid.dim) throw std::invalid_argument("g_alpha: index/grid dim mismatch");
  const double s = 1.0 + t;
  const double inv_scale = 1.0 / std::sqrt(4.0 * s);
  const HermiteTable& herm = hermite_table();
  const int n = grid.points_per_dim;

  // Per-axis scaled coordinates and the one-axis Gaussian factor of G(x, s).
  std::vector<double> y(n), gauss(n);
  for (int i = 0; i < n; ++i) {
    y[i] = grid.coord(i) * inv_scale;
    gauss[i] = std::exp(-y[i] * y[i]) / std::sqrt(4.0 * M_PI * s);
  }

  // d^{2 beta} g_alpha = (1/alpha!) (4s)^{-(|alpha| + 2|beta|)/2}
  //                      prod_i H_{alpha_i + 2 beta_i}(y_i) * G(x, s),
  // and (-Delta)^j = (-1)^j sum_{|beta| = j} (j!/beta!) d^{2 beta}.
  double j_factorial = 1.0;
  for (int i = 2; i <= power; ++i) j_factorial *= i;
  const double common = (power % 2 == 0 ? 1.0 : -1.0) / alpha.factorial() *
                        std::pow(4.0 * s, -0.5 * (alpha.order() + 2 * power));

  std::vector<double> acc(grid.point_count(), 0.0);
  std::vector<double> row(n);
  for (const MultiIndex& beta : enumerate_multi_indices(grid.dim, power)) {
    if (beta.order() != power) continue;
    const double coeff = common * j_factorial / beta.factorial();
    if (grid.dim == 1) {
      const int d0 = alpha.a[0] + 2 * beta.a[0];
      for (int i = 0; i < n; ++i) acc[i] += coeff * herm.eval(d0, y[i]) * gauss[i];
    } else {
      // Tensor factors per axis, then an outer product over the flat index.
      std::vector<std::vector<double>> axis(grid.dim, row);
      for (int d = 0; d < grid.dim; ++d) {
        const int deg = alpha.a[d] + 2 * beta.a[d];
        for (int i = 0; i < n; ++i) axis[d][i] = herm.eval(deg, y[i]) * gauss[i];
      }
      std::size_t flat = 0;
      if (grid.dim == 2) {
        for (int i0 = 0; i0 < n; ++i0)
          for (int i1 = 0; i1 < n; ++i1) acc[flat++] += coeff * axis[0][i0] * axis[1][i1];
      } else {
        for (int i0 = 0; i0 < n; ++i0)
          for (int i1 = 0; i1 < n; ++i1) {
            const double a01 = axis[0][i0] * axis[1][i1];
            for (int i2 = 0; i2 < n; ++i2) acc[flat++] += coeff * a01 * axis[2][i2];
          }
      }
    }
  }
  return GridFunction(grid, std::move(acc));
}

GridFunction g_alpha(const Grid& grid, double t, const MultiIndex& alpha) {
  return neg_laplacian_pow_g_alpha(grid, t, alpha, 0);
}

GridFunction heat_semigroup(const GridFunction& u, double t) {
  if (t < 0.0) throw std::invalid_argument("heat_semigroup: t must be nonnegative");
  if (t == 0.0) return u;
  return apply_isotropic_multiplier(u, [t](double rho2) { return std::exp(-t * rho2); });
}

GridFunction laplacian_power(const GridFunction& u, int power) {
  if (power < 0) throw std::invalid_argument("laplacian_power: negative power");
  if (power == 0) return u;
  return apply_isotropic_multiplier(u, [power](double rho2) {
    double m = 1.0;
    for (int i = 0; i < power; ++i) m *= rho2;
    return m;
  });
}

}  // namespace dwexp
