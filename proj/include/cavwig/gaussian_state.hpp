#pragma once

#include <complex>

namespace cavwig {

/// Gaussian mechanical state: first moments and covariance in the
/// dimensionless (X, P) quadratures. Physicality requires
/// det = var_x*var_p - cov_xp^2 >= 1/4 (equality for pure states).
struct GaussianState {
  double x_mean = 0.0;
  double p_mean = 0.0;
  double var_x = 0.5;
  double var_p = 0.5;
  double cov_xp = 0.0;

  double det() const { return var_x * var_p - cov_xp * cov_xp; }

  static GaussianState make(double x_mean, double p_mean, double var_x,
                            double var_p, double cov_xp = 0.0);
};

/// Thermal state of occupation n_bar, momentum-squeezed by r_m:
/// V_X = (n_bar + 1/2) e^{+2 r_m}, V_P = (n_bar + 1/2) e^{-2 r_m}, zero means.
GaussianState squeezed_thermal(double n_bar, double r_m);

/// Position-basis matrix element <x - u/2| rho |x + u/2> of the Gaussian state.
std::complex<double> matrix_element(const GaussianState& s, double x, double u);

/// Analytic Wigner function of the Gaussian state.
double wigner_gaussian(const GaussianState& s, double x, double p);

/// log of wigner_gaussian; the Wigner value is always > 0 for a Gaussian.
double log_wigner_gaussian(const GaussianState& s, double x, double p);

}  // namespace cavwig
