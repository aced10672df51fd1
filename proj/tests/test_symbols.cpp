#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "dwexp/symbols.hpp"

using dwexp::mode_propagator;
using dwexp::PropagatorEntries;
using dwexp::sigma0;
using dwexp::sigma0_dt;
using dwexp::sigma1;
using dwexp::sigma1_dt;

TEST_CASE("zero frequency reduces to the scalar ODE solution") {
  // At rho = 0 the folded hyperbolic branch is exact:
  // sigma0 = (1 + e^{-t})/2, sigma1 = 1 - e^{-t}.
  for (double t : {0.05, 0.5, 1.0, 5.0, 50.0, 200.0}) {
    CHECK(sigma0(0.0, t) == doctest::Approx((1.0 + std::exp(-t)) / 2.0).epsilon(1e-14));
    CHECK(sigma1(0.0, t) == doctest::Approx(1.0 - std::exp(-t)).epsilon(1e-14));
  }
}

TEST_CASE("t = 0 is the identity data") {
  for (double rho_sq : {0.0, 0.2, 0.25, 0.3, 17.0}) {
    CHECK(sigma0(rho_sq, 0.0) == 1.0);
    CHECK(sigma1(rho_sq, 0.0) == 0.0);
  }
}

TEST_CASE("oscillatory branch hits the trig values") {
  const double t = 2.0;
  // Full period of the phase: t sqrt(rho^2 - 1/4) = pi.
  const double rho_sq = 0.25 + (M_PI / t) * (M_PI / t);
  CHECK(sigma0(rho_sq, t) == doctest::Approx(-std::exp(-1.0)).epsilon(1e-14));
  CHECK(std::abs(sigma1(rho_sq, t)) < 1e-15);

  // Quarter phase pi/2: sigma0 vanishes, sigma1 = e^{-t/2} / sqrt(s).
  const double rho_sq_half = 0.25 + (M_PI / (2.0 * t)) * (M_PI / (2.0 * t));
  CHECK(std::abs(sigma0(rho_sq_half, t)) < 1e-15);
  CHECK(sigma1(rho_sq_half, t) ==
        doctest::Approx(std::exp(-1.0) * 2.0 * t / M_PI).epsilon(1e-14));
}

TEST_CASE("Wronskian identity sigma0^2 + s sigma1^2 = e^{-t} on every branch") {
  for (double rho_sq : {0.0, 0.1, 0.2499, 0.25, 0.2501, 0.26, 1.0, 10.0, 1e4}) {
    for (double t : {0.01, 0.3, 1.0, 5.0, 20.0, 100.0}) {
      const double s0 = sigma0(rho_sq, t);
      const double s1 = sigma1(rho_sq, t);
      const double det = s0 * s0 + (rho_sq - 0.25) * s1 * s1;
      CHECK(det == doctest::Approx(std::exp(-t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("values are continuous across the branch point and window edges") {
  for (double t : {0.1, 1.0, 10.0, 100.0, 200.0}) {
    CHECK(std::abs(sigma0(0.25 + 1e-12, t) - sigma0(0.25 - 1e-12, t)) <= 1e-9);
    CHECK(std::abs(sigma1(0.25 + 1e-12, t) - sigma1(0.25 - 1e-12, t)) <= 1e-9);
  }
  // Straddle the Taylor window |z| = 1e-2 at t = 1 on both sides. The probe
  // spacing is tight enough that the function's own variation stays below
  // the tolerance, so any visible gap would be a series/branch mismatch.
  for (double edge : {1e-2, -1e-2}) {
    const double lo = 0.25 + edge * (1.0 - 1e-12);
    const double hi = 0.25 + edge * (1.0 + 1e-12);
    CHECK(std::abs(sigma0(lo, 1.0) - sigma0(hi, 1.0)) < 1e-13);
    CHECK(std::abs(sigma1(lo, 1.0) - sigma1(hi, 1.0)) < 1e-13);
  }
}

TEST_CASE("closed-form time derivatives match finite differences") {
  const double h = 1e-5;
  for (double rho_sq : {0.0, 0.2, 0.25, 0.3, 2.0, 9.0}) {
    for (double t : {0.4, 1.5, 6.0}) {
      const double fd0 = (sigma0(rho_sq, t + h) - sigma0(rho_sq, t - h)) / (2.0 * h);
      const double fd1 = (sigma1(rho_sq, t + h) - sigma1(rho_sq, t - h)) / (2.0 * h);
      CHECK(sigma0_dt(rho_sq, t) == doctest::Approx(fd0).epsilon(1e-8).scale(1.0));
      CHECK(sigma1_dt(rho_sq, t) == doctest::Approx(fd1).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("per-mode trajectories satisfy the damped wave ODE") {
  // m(t) = c0 sigma0 + c1 sigma1 solves m'' + m' + rho^2 m = 0. The finite
  // difference step balances truncation (~h^2 rho^4 / 12) against rounding
  // (~4 eps / h^2): h = (48 eps)^{1/4} / rho leaves a residual of about
  // 2 rho^2 sqrt(eps/3), a few 1e-7 at the largest sampled mode.
  const double c0 = 0.8, c1 = -0.35;
  for (double rho_sq : {0.0, 0.1, 0.249, 0.25, 0.2501, 0.3, 1.0, 4.0, 25.0}) {
    const double h = 2.7e-4 / std::max(1.0, std::sqrt(rho_sq));
    for (double t : {0.3, 1.0, 5.0}) {
      auto m = [&](double tau) { return c0 * sigma0(rho_sq, tau) + c1 * sigma1(rho_sq, tau); };
      const double second = (m(t + h) - 2.0 * m(t) + m(t - h)) / (h * h);
      const double first = (m(t + h) - m(t - h)) / (2.0 * h);
      CHECK(std::abs(second + first + rho_sq * m(t)) < 1e-6);
    }
  }
}

TEST_CASE("one-step propagators compose: M(t1 + t2) = M(t2) M(t1)") {
  for (double rho_sq : {0.0, 0.1, 0.25, 2.0, 50.0}) {
    for (auto [t1, t2] : {std::pair{0.7, 0.9}, std::pair{0.05, 2.3}}) {
      const PropagatorEntries a = mode_propagator(rho_sq, t1);
      const PropagatorEntries b = mode_propagator(rho_sq, t2);
      const PropagatorEntries c = mode_propagator(rho_sq, t1 + t2);
      CHECK(b.a00 * a.a00 + b.a01 * a.a10 == doctest::Approx(c.a00).epsilon(1e-12).scale(1.0));
      CHECK(b.a00 * a.a01 + b.a01 * a.a11 == doctest::Approx(c.a01).epsilon(1e-12).scale(1.0));
      CHECK(b.a10 * a.a00 + b.a11 * a.a10 == doctest::Approx(c.a10).epsilon(1e-12).scale(1.0));
      CHECK(b.a10 * a.a01 + b.a11 * a.a11 == doctest::Approx(c.a11).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("propagator determinant is e^{-t}") {
  for (double rho_sq : {0.0, 0.2, 0.25, 0.3, 7.0, 400.0}) {
    for (double t : {0.05, 1.0, 12.0}) {
      const PropagatorEntries e = mode_propagator(rho_sq, t);
      CHECK(e.a00 * e.a11 - e.a01 * e.a10 == doctest::Approx(std::exp(-t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("amplitude never exceeds the zero-frequency mode") {
  // |sigma0| <= (1 + e^{-t})/2 and |sigma1| <= 1 - e^{-t}: the hyperbolic
  // branch is monotone in sqrt(-s) <= 1/2 and the trig branch is smaller.
  std::mt19937 rng(91u);
  std::uniform_real_distribution<double> logr(-3.0, 4.0), tim(0.0, 20.0);
  for (int i = 0; i < 200; ++i) {
    const double rho_sq = std::pow(10.0, logr(rng));
    const double t = tim(rng);
    CHECK(std::abs(sigma0(rho_sq, t)) <= (1.0 + std::exp(-t)) / 2.0 + 1e-15);
    CHECK(std::abs(sigma1(rho_sq, t)) <= 1.0 - std::exp(-t) + 1e-15);
  }
}

TEST_CASE("symbol preconditions") {
  CHECK_THROWS_AS(sigma0(-0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sigma1(1.0, -0.1), std::invalid_argument);
}
