#include "dwexp/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace dwexp {

namespace {

// FFTW plan creation is not thread safe; execution on distinct buffers is.
// Plans are keyed by shape only (FFTW_UNALIGNED lifts the alignment
// requirement for new-array execution) and live for the process.
struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

PlanPair plans_for(const Grid& g) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PlanPair> cache;
  std::scoped_lock lock(mu);
  const auto key = std::make_pair(g.dim, g.points_per_dim);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  int n[3] = {g.points_per_dim, g.points_per_dim, g.points_per_dim};
  std::vector<double> re(g.point_count());
  std::vector<std::complex<double>> cx(spectral_mode_count(g));
  auto* cxp = reinterpret_cast<fftw_complex*>(cx.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  p.r2c = fftw_plan_dft_r2c(g.dim, n, re.data(), cxp, flags);
  p.c2r = fftw_plan_dft_c2r(g.dim, n, cxp, re.data(), flags);
  if (!p.r2c || !p.c2r) throw std::runtime_error("spectral: transform plan creation failed");
  cache.emplace(key, p);
  return p;
}

double signed_frequency(const Grid& g, int k) {
  const int half = g.points_per_dim / 2;
  const int signed_k = k <= half ? k : k - g.points_per_dim;
  return M_PI * signed_k / g.half_width;
}

}  // namespace

SpectralField::SpectralField(const Grid& grid) : grid_(grid), m_(spectral_mode_count(grid)) {}

std::size_t spectral_mode_count(const Grid& grid) {
  std::size_t count = static_cast<std::size_t>(grid.points_per_dim) / 2 + 1;
  for (int d = 1; d < grid.dim; ++d) count *= static_cast<std::size_t>(grid.points_per_dim);
  return count;
}

SpectralField forward(const GridFunction& u) {
  SpectralField out(u.grid());
  std::vector<double> in(u.values().begin(), u.values().end());
  fftw_execute_dft_r2c(plans_for(u.grid()).r2c, in.data(),
                       reinterpret_cast<fftw_complex*>(out.modes().data()));
  return out;
}

GridFunction inverse(const SpectralField& f) {
  const Grid& g = f.grid();
  // c2r destroys its input for dim > 1, so always work on a copy.
  std::vector<std::complex<double>> scratch(f.modes().begin(), f.modes().end());
  std::vector<double> out(g.point_count());
  fftw_execute_dft_c2r(plans_for(g).c2r, reinterpret_cast<fftw_complex*>(scratch.data()),
                       out.data());
  const double scale = 1.0 / static_cast<double>(g.point_count());
  for (double& v : out) v *= scale;
  return GridFunction(g, std::move(out));
}

const std::vector<double>& squared_frequency_table(const Grid& grid) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, double>, std::vector<double>> cache;
  std::scoped_lock lock(mu);
  const auto key = std::make_tuple(grid.dim, grid.points_per_dim, grid.half_width);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int n = grid.points_per_dim;
  const int last = n / 2 + 1;
  std::vector<double> table(spectral_mode_count(grid));
  std::size_t flat = 0;
  const int n0 = grid.dim >= 2 ? n : 1;
  const int n1 = grid.dim >= 3 ? n : 1;
  // Row-major over leading axes, halved final axis, matching SpectralField.
  for (int k0 = 0; k0 < n0; ++k0) {
    const double f0 = grid.dim >= 2 ? signed_frequency(grid, k0) : 0.0;
    for (int k1 = 0; k1 < n1; ++k1) {
      const double f1 = grid.dim >= 3 ? signed_frequency(grid, k1) : 0.0;
      for (int kl = 0; kl < last; ++kl) {
        const double fl = signed_frequency(grid, kl);
        table[flat++] = f0 * f0 + f1 * f1 + fl * fl;
      }
    }
  }
  return cache.emplace(key, std::move(table)).first->second;
}

GridFunction apply_isotropic_multiplier(const GridFunction& u,
                                        const std::function<double(double)>& symbol) {
  SpectralField f = forward(u);
  const auto& rho2 = squared_frequency_table(u.grid());
  auto modes = f.modes();
  for (std::size_t i = 0; i < modes.size(); ++i) modes[i] *= symbol(rho2[i]);
  return inverse(f);
}

GridFunction spectral_derivative(const GridFunction& u, int axis) {
  const Grid& g = u.grid();
  if (axis < 0 || axis >= g.dim) throw std::invalid_argument("spectral_derivative: bad axis");
  SpectralField f = forward(u);
  auto modes = f.modes();
  const int n = g.points_per_dim;
  const int last = n / 2 + 1;
  const int n0 = g.dim >= 2 ? n : 1;
  const int n1 = g.dim >= 3 ? n : 1;
  // Axis numbering follows grid storage: axis 0 is the slowest.
  const int axis_from_last = g.dim - 1 - axis;
  std::size_t flat = 0;
  for (int k0 = 0; k0 < n0; ++k0) {
    for (int k1 = 0; k1 < n1; ++k1) {
      for (int kl = 0; kl < last; ++kl) {
        int k = kl;
        if (axis_from_last == 1) k = g.dim == 2 ? k0 : k1;
        if (axis_from_last == 2) k = k0;
        const double xi = k == n / 2 ? 0.0 : signed_frequency(g, k);
        modes[flat] *= std::complex<double>(0.0, xi);
        ++flat;
      }
    }
  }
  return inverse(f);
}

}  // namespace dwexp
