#pragma once

#include <Eigen/Dense>

namespace cavwig {

/// Rectangular (X, P) lattice with inclusive endpoints.
struct PhaseSpaceGrid {
  double x_min = 0.0, x_max = 0.0;
  double p_min = 0.0, p_max = 0.0;
  int nx = 0, np = 0;

  double dx() const { return (x_max - x_min) / (nx - 1); }
  double dp() const { return (p_max - p_min) / (np - 1); }
  double x(int i) const { return x_min + i * dx(); }
  double p(int j) const { return p_min + j * dp(); }

  static PhaseSpaceGrid make(double x_min, double x_max, double p_min,
                             double p_max, int nx, int np);
};

/// Real Wigner samples on a PhaseSpaceGrid. values(i, j) = W(x_i, p_j).
/// max_imag_residual records the largest imaginary part discarded when the
/// transform output was checked for realness.
struct WignerGrid {
  PhaseSpaceGrid grid;
  Eigen::MatrixXd values;
  double max_imag_residual = 0.0;
  bool norm_warning = false;

  /// Riemann sum of W over the grid.
  double total() const { return values.sum() * grid.dx() * grid.dp(); }
};

}  // namespace cavwig
