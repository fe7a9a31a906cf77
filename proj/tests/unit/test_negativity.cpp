#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cavwig/negativity.hpp"
#include "cavwig/steady_state.hpp"
#include "cavwig/wigner_engine.hpp"

using namespace cavwig;

namespace {

// Analytic Fock-1 Wigner on a grid.
WignerGrid fock1_grid(double L = 7.0, int n = 281) {
  WignerGrid w;
  w.grid = PhaseSpaceGrid::make(-L, L, -L, L, n, n);
  w.values.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double r2 = w.grid.x(i) * w.grid.x(i) + w.grid.p(j) * w.grid.p(j);
      w.values(i, j) = (2.0 * r2 - 1.0) * std::exp(-r2) / std::numbers::pi;
    }
  return w;
}

WignerGrid vacuum_grid(double L = 6.0, int n = 201) {
  WignerGrid w;
  w.grid = PhaseSpaceGrid::make(-L, L, -L, L, n, n);
  w.values.resize(n, n);
  const auto s = squeezed_thermal(0.0, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w.values(i, j) = wigner_gaussian(s, w.grid.x(i), w.grid.p(j));
  return w;
}

}  // namespace

TEST_CASE("vacuum has no negative volume") {
  const auto rep = negative_volume(vacuum_grid());
  CHECK(rep.delta < 1e-9);
  CHECK(rep.min_value >= 0.0);
  CHECK(rep.neg_to_pos_ratio < 1e-9);
}

TEST_CASE("Fock-1 negativity against the analytic value") {
  // delta = integral |W1| - 1 = 4 e^{-1/2} - 2 (note integral |W1| = ... )
  const auto rep = negative_volume(fock1_grid());
  const double expected = 4.0 * std::exp(-0.5) - 2.0;
  CHECK(rep.delta == doctest::Approx(expected).epsilon(1e-4));
  CHECK(rep.min_value == doctest::Approx(-1.0 / std::numbers::pi).epsilon(1e-6));
  CHECK(std::abs(rep.min_x) < 1e-9);
  CHECK(std::abs(rep.min_p) < 1e-9);
}

TEST_CASE("delta is additive over half grids") {
  const auto w = fock1_grid();
  const int half = w.grid.nx / 2;
  double acc = 0.0;
  const double cell = w.grid.dx() * w.grid.dp();
  for (int i = 0; i < w.grid.nx; ++i)
    for (int j = 0; j < w.grid.np; ++j)
      acc += (std::abs(w.values(i, j)) - w.values(i, j)) * cell;
  // split at a row boundary and sum the two pieces
  double acc2 = 0.0;
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < w.grid.np; ++j)
      acc2 += (std::abs(w.values(i, j)) - w.values(i, j)) * cell;
  for (int i = half; i < w.grid.nx; ++i)
    for (int j = 0; j < w.grid.np; ++j)
      acc2 += (std::abs(w.values(i, j)) - w.values(i, j)) * cell;
  CHECK(std::abs(acc - acc2) < 1e-9);
  CHECK(std::abs(acc - negative_volume(w).delta) < 1e-12);
}

TEST_CASE("thermal convolution: identity at tau = 0 and volume preservation") {
  const auto w = fock1_grid();
  const auto same = thermal_convolve(w, 0.0);
  CHECK((same.values - w.values).cwiseAbs().maxCoeff() == 0.0);
  const auto conv = thermal_convolve(w, 0.37);
  CHECK(std::abs(conv.total() - w.total()) < 1e-6);
  CHECK_THROWS_AS(thermal_convolve(w, -0.1), std::domain_error);
}

TEST_CASE("tau = 1/2 smooths Fock-1 into a nonnegative (Q-like) distribution") {
  const auto conv = thermal_convolve(fock1_grid(), 0.5);
  CHECK(conv.values.minCoeff() > -1e-9);
  // slightly less smoothing leaves negativity behind
  const auto under = thermal_convolve(fock1_grid(), 0.46);
  CHECK(under.values.minCoeff() < -1e-5);
}

TEST_CASE("Gaussian semigroup: convolve(a) then (b) equals convolve(a+b)") {
  const auto w = fock1_grid(7.0, 181);
  const auto ab = thermal_convolve(thermal_convolve(w, 0.2), 0.3);
  const auto once = thermal_convolve(w, 0.5);
  // compare on the common (inner) region
  const auto& g1 = ab.grid;
  double worst = 0.0;
  for (int i = 0; i < once.grid.nx; ++i)
    for (int j = 0; j < once.grid.np; ++j) {
      const double x = once.grid.x(i), p = once.grid.p(j);
      const int i1 = int(std::lround((x - g1.x_min) / g1.dx()));
      const int j1 = int(std::lround((p - g1.p_min) / g1.dp()));
      if (i1 < 0 || j1 < 0 || i1 >= g1.nx || j1 >= g1.np) continue;
      worst = std::max(worst, std::abs(once.values(i, j) - ab.values(i1, j1)));
    }
  CHECK(worst < 1e-6);
}

TEST_CASE("delta never increases along a thermal ladder") {
  const auto w = fock1_grid();
  double prev = negative_volume(w).delta;
  for (double t : {0.1, 0.2, 0.3, 0.4, 0.5}) {
    const double cur = negative_volume(thermal_convolve(w, t)).delta;
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("nonclassical depth of Fock-1 reaches the tau_inf -> 1 boundary") {
  const double tau = nonclassical_depth(fock1_grid());
  CHECK(std::abs(tau - 1.0) < 1e-3);
}

TEST_CASE("monotonicity at the bisection solution") {
  const auto w = fock1_grid();
  const double tau = nonclassical_depth(w);
  const double tau_th = tau - 0.5;
  const double eps = 1e-9 * w.values.maxCoeff();
  CHECK(thermal_convolve(w, std::min(0.5, tau_th + 5e-4)).values.minCoeff() >= -eps);
}

TEST_CASE("positive states are rejected (R-function path unsupported)") {
  CHECK_THROWS_AS(nonclassical_depth(vacuum_grid()), std::invalid_argument);
}
