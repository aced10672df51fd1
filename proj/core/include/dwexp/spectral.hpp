#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "dwexp/grid.hpp"

namespace dwexp {

/// Discrete Fourier modes of a real field in half-complex (r2c) layout:
/// row-major over axes, last axis truncated to n/2 + 1 entries by conjugate
/// symmetry. Unnormalized forward convention; inverse() divides by n^dim.
class SpectralField {
 public:
  explicit SpectralField(const Grid& grid);

  const Grid& grid() const { return grid_; }
  std::span<std::complex<double>> modes() { return m_; }
  std::span<const std::complex<double>> modes() const { return m_; }
  std::size_t mode_count() const { return m_.size(); }

 private:
  Grid grid_;
  std::vector<std::complex<double>> m_;
};

std::size_t spectral_mode_count(const Grid& grid);

SpectralField forward(const GridFunction& u);
GridFunction inverse(const SpectralField& f);

/// |xi|^2 for every mode in SpectralField order, where the frequency along
/// each axis is pi * k / half_width with k the signed mode integer. Cached
/// per grid; the reference stays valid for the process lifetime.
const std::vector<double>& squared_frequency_table(const Grid& grid);

/// u -> F^{-1}[ m(|xi|^2) F(u) ] for a real isotropic symbol m. Real output
/// is structural: a radial symbol preserves conjugate symmetry.
GridFunction apply_isotropic_multiplier(const GridFunction& u,
                                        const std::function<double(double)>& symbol);

/// Spectral d/dx_axis with the Nyquist mode zeroed (an odd multiplier has no
/// consistent value there).
GridFunction spectral_derivative(const GridFunction& u, int axis);

}  // namespace dwexp
