#include "dwexp/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dwexp {

std::array<double, 3> Grid::point(std::size_t flat) const {
  std::array<double, 3> x{0.0, 0.0, 0.0};
  const auto n = static_cast<std::size_t>(points_per_dim);
  for (int d = dim - 1; d >= 0; --d) {
    x[d] = coord(static_cast<int>(flat % n));
    flat /= n;
  }
  return x;
}

Grid make_grid(int dim, double half_width, int points_per_dim) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("make_grid: dim must be 1, 2 or 3");
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::invalid_argument("make_grid: half_width must be positive and finite");
  const bool pow2 = points_per_dim > 0 && (points_per_dim & (points_per_dim - 1)) == 0;
  if (!pow2 || points_per_dim < 16)
    throw std::invalid_argument("make_grid: points_per_dim must be a power of two >= 16, got " +
                                std::to_string(points_per_dim));
  return Grid{dim, half_width, points_per_dim};
}

namespace {

void check_finite(std::span<const double> v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}

}  // namespace

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), v_(std::move(values)) {
  if (v_.size() != grid_.point_count())
    throw std::invalid_argument("GridFunction: value count does not match grid");
  check_finite(v_, "GridFunction");
}

GridFunction GridFunction::zeros(const Grid& grid) {
  return GridFunction(grid, std::vector<double>(grid.point_count(), 0.0));
}

GridFunction GridFunction::from_fn(
    const Grid& grid, const std::function<double(const std::array<double, 3>&)>& fn) {
  std::vector<double> v(grid.point_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(grid.point(i));
  return GridFunction(grid, std::move(v));
}

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* what) {
  if (!(a.grid() == b.grid()))
    throw std::invalid_argument(std::string(what) + ": operands on different grids");
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) { return axpy(a, 1.0, b); }
GridFunction operator-(const GridFunction& a, const GridFunction& b) { return axpy(a, -1.0, b); }

GridFunction operator*(double s, const GridFunction& a) {
  std::vector<double> v(a.values().begin(), a.values().end());
  for (double& x : v) x *= s;
  return GridFunction(a.grid(), std::move(v));
}

GridFunction axpy(const GridFunction& a, double s, const GridFunction& b) {
  require_same_grid(a, b, "axpy");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + s * b[i];
  return GridFunction(a.grid(), std::move(v));
}

GridFunction map(const GridFunction& a, const std::function<double(double)>& fn) {
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(a[i]);
  return GridFunction(a.grid(), std::move(v));
}

}  // namespace dwexp
