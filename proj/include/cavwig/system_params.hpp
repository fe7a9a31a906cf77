#pragma once

#include <complex>

namespace cavwig {

/// Physical parameters of the optomechanical system. All positions and
/// momenta are dimensionless quadratures; rates are angular (rad/s).
///
/// mu is derived from g0_over_kappa at construction and must not be set
/// independently; use make().
struct SystemParams {
  double g0_over_kappa = 0.0;
  double mu = 0.0;         // sqrt(8) * g0_over_kappa
  double delta_bar = 0.0;  // drive detuning in units of kappa
  double omega_m = 0.0;    // mechanical angular frequency (rad/s)
  double gamma = 0.0;      // mechanical amplitude decay rate (rad/s)
  double n_bath = 0.0;     // mean thermal occupation of the bath
  double flux_k = 0.0;     // photon-flux parameter k (1/s)
  double flux_k2 = 0.0;    // squeezing-flux parameter k2 (1/s)

  static SystemParams make(double g0_over_kappa, double delta_bar = 0.0,
                           double omega_m = 0.0, double gamma = 0.0,
                           double n_bath = 0.0, double flux_k = 0.0,
                           double flux_k2 = 0.0);
};

/// Nonlinear cavity response f(x) = [1 + i(mu x/2 + delta)] / [1 - i(mu x/2 + delta)].
/// Unit modulus for any real x.
std::complex<double> response(double x, const SystemParams& p);

/// Optical phase arg f(x) = 2 atan(mu x/2 + delta), continuous in x.
double optical_phase(double x, const SystemParams& p);

}  // namespace cavwig
