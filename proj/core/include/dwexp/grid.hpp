#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace dwexp {

/// Uniform periodic grid on the box [-half_width, half_width)^dim with the
/// same point count along every axis. Sample points are
/// x_i = -half_width + i * spacing(), so x = 0 is always a grid point.
struct Grid {
  int dim = 1;
  double half_width = 1.0;
  int points_per_dim = 16;

  double spacing() const { return 2.0 * half_width / points_per_dim; }
  std::size_t point_count() const {
    std::size_t n = 1;
    for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(points_per_dim);
    return n;
  }
  double coord(int i) const { return -half_width + i * spacing(); }
  /// Coordinates of the flat (row-major) index; unused axes are zero.
  std::array<double, 3> point(std::size_t flat) const;
  double cell_volume() const {
    double v = 1.0;
    for (int d = 0; d < dim; ++d) v *= spacing();
    return v;
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Validates: dim in {1,2,3}, half_width > 0, points_per_dim a power of two
/// and >= 16.
Grid make_grid(int dim, double half_width, int points_per_dim);

/// Immutable sampled field on a Grid. Construction checks that every value
/// is finite; operations return new instances.
class GridFunction {
 public:
  GridFunction(Grid grid, std::vector<double> values);

  static GridFunction zeros(const Grid& grid);
  static GridFunction from_fn(const Grid& grid,
                              const std::function<double(const std::array<double, 3>&)>& fn);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return v_; }
  double operator[](std::size_t i) const { return v_[i]; }
  std::size_t size() const { return v_.size(); }

 private:
  Grid grid_;
  std::vector<double> v_;
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double s, const GridFunction& a);

/// a + s * b
GridFunction axpy(const GridFunction& a, double s, const GridFunction& b);

/// Pointwise map; fn must produce finite values.
GridFunction map(const GridFunction& a, const std::function<double(double)>& fn);

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* what);

}  // namespace dwexp
