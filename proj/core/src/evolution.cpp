#include "dwexp/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dwexp/bessel.hpp"
#include "dwexp/coeffs.hpp"
#include "dwexp/rational.hpp"
#include "dwexp/spectral.hpp"
#include "dwexp/symbols.hpp"

namespace dwexp {

namespace {

// 4-point Gauss-Legendre on [-1, 1].
constexpr double kGl4Nodes[4] = {-0.8611363115940526, -0.33998104358485626,
                                 0.33998104358485626, 0.8611363115940526};
constexpr double kGl4Weights[4] = {0.34785484513745385, 0.6521451548625461,
                                   0.6521451548625461, 0.34785484513745385};

// Periodic 4-point Lagrange interpolation (offsets -1, 0, 1, 2 around the
// cell holding x). O(h^4), which keeps the integral representations well
// under their cross-validation tolerances; linear interpolation would not.
double periodic_cubic(const GridFunction& phi, double x) {
  const Grid& g = phi.grid();
  const int n = g.points_per_dim;
  const double u = (x + g.half_width) / g.spacing();
  const double base = std::floor(u);
  const double th = u - base;
  const long i0 = static_cast<long>(base);
  auto at = [&](long k) {
    long r = k % n;
    if (r < 0) r += n;
    return phi[static_cast<std::size_t>(r)];
  };
  const double lm1 = -th * (th - 1.0) * (th - 2.0) / 6.0;
  const double l0 = (th + 1.0) * (th - 1.0) * (th - 2.0) * 0.5;
  const double l1 = -(th + 1.0) * th * (th - 2.0) * 0.5;
  const double l2 = (th + 1.0) * th * (th - 1.0) / 6.0;
  return lm1 * at(i0 - 1) + l0 * at(i0) + l1 * at(i0 + 1) + l2 * at(i0 + 2);
}

// Coefficients of the approximant polynomial in |xi|^2:
// poly[j] = sum over the index set with 2l + m (+ n) = j of
// Phi_{l,m} (Psi_n) (-t)^l. The rational part is summed exactly per (l, j)
// and converted to double once.
std::vector<double> approximant_poly(double t, double K, bool with_psi, const char* who) {
  if (!(t > 0.0)) throw std::invalid_argument(std::string(who) + ": requires t > 0");
  if (!(K >= 0.0) || !std::isfinite(K))
    throw std::invalid_argument(std::string(who) + ": requires finite K >= 0");
  const int J = static_cast<int>(std::floor(0.5 * K));
  std::vector<std::vector<Rational>> by_l(J + 1, std::vector<Rational>(2 * J + 1));
  for (int l = 0; l <= J; ++l)
    for (int m = 0; l + m <= J; ++m) {
      if (with_psi) {
        for (int n = 0; l + m + n <= J; ++n)
          by_l[l][2 * l + m + n] += phi_coeff(l, m) * psi_coeff(n);
      } else {
        by_l[l][2 * l + m] += phi_coeff(l, m);
      }
    }
  std::vector<double> poly(2 * J + 1, 0.0);
  double tl = 1.0;
  for (int l = 0; l <= J; ++l) {
    for (int j = 0; j <= 2 * J; ++j)
      if (by_l[l][j] != 0) poly[j] += to_double(by_l[l][j]) * tl;
    tl *= -t;
  }
  return poly;
}

GridFunction v_apply(const GridFunction& phi, double t, double K, bool with_psi,
                     double prefactor, const char* who) {
  const std::vector<double> poly = approximant_poly(t, K, with_psi, who);
  return apply_isotropic_multiplier(phi, [&poly, t, prefactor](double r) {
    double acc = 0.0;
    for (std::size_t j = poly.size(); j-- > 0;) acc = acc * r + poly[j];
    return prefactor * acc * std::exp(-t * r);
  });
}

}  // namespace

GridFunction k0_apply(const GridFunction& phi, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("k0_apply: requires t >= 0");
  if (t == 0.0) return phi;
  return apply_isotropic_multiplier(phi, [t](double rho2) { return sigma0(rho2, t); });
}

GridFunction k1_apply(const GridFunction& phi, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("k1_apply: requires t >= 0");
  if (t == 0.0) return GridFunction::zeros(phi.grid());
  return apply_isotropic_multiplier(phi, [t](double rho2) { return sigma1(rho2, t); });
}

double k1_bessel_1d(const GridFunction& phi, double t, double x) {
  const Grid& g = phi.grid();
  if (g.dim != 1) throw std::invalid_argument("k1_bessel_1d: requires dim = 1");
  if (!(t > 0.0)) throw std::invalid_argument("k1_bessel_1d: requires t > 0");
  constexpr int kPanels = 512;
  const double half_t = 0.5 * t;
  const double dy = 2.0 / kPanels;
  double sum = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double center = -1.0 + (p + 0.5) * dy;
    for (int q = 0; q < 4; ++q) {
      const double y = center + 0.5 * dy * kGl4Nodes[q];
      const double arg = half_t * std::sqrt(std::max(0.0, 1.0 - y * y));
      sum += 0.5 * dy * kGl4Weights[q] * bessel_i(0, arg) * periodic_cubic(phi, x + t * y);
    }
  }
  return half_t * std::exp(-half_t) * sum;
}

GridFunction v0_apply(const GridFunction& phi, double t, double K) {
  return v_apply(phi, t, K, false, 0.5, "v0_apply");
}

GridFunction v1_apply(const GridFunction& phi, double t, double K) {
  return v_apply(phi, t, K, true, 1.0, "v1_apply");
}

GridFunction kcal_m(const GridFunction& phi, double t, int m) {
  const Grid& g = phi.grid();
  if (g.dim != 1) throw std::invalid_argument("kcal_m: one-dimensional verification path");
  if (!(t > 0.0)) throw std::invalid_argument("kcal_m: requires t > 0");
  if (m < 0 || m > 3) throw std::invalid_argument("kcal_m: m must be in {0,...,3}");

  // One half of [-1, 1] under y = 1 - w^4: dy = 4 w^3 dw and
  // 1 - y^2 = w^4 (2 - w^4), so the integrand picks up the smooth factor
  // 4 (2 - w^4)^{-m/4} w^{3-m}. Everything independent of x, including the
  // Gaussian e^{-t y^2/2}, is folded into the node weights up front.
  constexpr int kPanels = 64;
  struct Node {
    double shift, weight;
  };
  std::vector<Node> nodes;
  nodes.reserve(4 * kPanels);
  const double dw = 1.0 / kPanels;
  for (int p = 0; p < kPanels; ++p) {
    const double center = (p + 0.5) * dw;
    for (int q = 0; q < 4; ++q) {
      const double w = center + 0.5 * dw * kGl4Nodes[q];
      const double w4 = w * w * w * w;
      const double y = 1.0 - w4;
      double factor = 4.0 * std::pow(2.0 - w4, -0.25 * m);
      for (int i = 0; i < 3 - m; ++i) factor *= w;
      nodes.push_back({t * y, 0.5 * dw * kGl4Weights[q] * factor * std::exp(-0.5 * t * y * y)});
    }
  }

  const double sqt = std::sqrt(t);
  std::vector<double> out(g.point_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = g.coord(static_cast<int>(i));
    double acc = 0.0;
    for (const Node& nd : nodes)
      acc += nd.weight * (std::abs(periodic_cubic(phi, x + nd.shift)) +
                          std::abs(periodic_cubic(phi, x - nd.shift)));
    out[i] = sqt * acc;
  }
  return GridFunction(g, std::move(out));
}

DuhamelAccumulator::DuhamelAccumulator(const Grid& grid, double dt) : grid_(grid), dt_(dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("DuhamelAccumulator: requires dt > 0");
  const auto& rho2 = squared_frequency_table(grid_);
  const std::size_t n = rho2.size();
  a00_.resize(n);
  a01_.resize(n);
  a10_.resize(n);
  a11_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const PropagatorEntries e = mode_propagator(rho2[i], dt);
    a00_[i] = e.a00;
    a01_[i] = e.a01;
    a10_[i] = e.a10;
    a11_[i] = e.a11;
  }
  p_.assign(n, {0.0, 0.0});
  v_.assign(n, {0.0, 0.0});
}

void DuhamelAccumulator::push(const GridFunction& h) {
  if (!(h.grid() == grid_)) throw std::invalid_argument("DuhamelAccumulator: grid mismatch");
  SpectralField hh = forward(h);
  const auto modes = hh.modes();
  if (count_ == 0) {
    // The left endpoint's sigma1(t - 0) factor starts at value 0 with unit
    // slope, so its dt/2 weight enters through the velocity component.
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = 0.5 * dt_ * modes[i];
  } else {
    for (std::size_t i = 0; i < p_.size(); ++i) {
      const std::complex<double> p = p_[i], v = v_[i];
      p_[i] = a00_[i] * p + a01_[i] * v;
      v_[i] = a10_[i] * p + a11_[i] * v;
    }
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += dt_ * modes[i];
  }
  ++count_;
}

GridFunction DuhamelAccumulator::position() const {
  SpectralField f(grid_);
  std::copy(p_.begin(), p_.end(), f.modes().begin());
  return inverse(f);
}

}  // namespace dwexp
