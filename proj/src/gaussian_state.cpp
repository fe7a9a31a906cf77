#include "cavwig/gaussian_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cavwig {

GaussianState GaussianState::make(double x_mean, double p_mean, double var_x,
                                  double var_p, double cov_xp) {
  if (!(var_x > 0.0) || !(var_p > 0.0))
    throw std::domain_error("GaussianState: variances must be > 0");
  const double d = var_x * var_p - cov_xp * cov_xp;
  if (d < 0.25 * (1.0 - 1e-12))
    throw std::domain_error("GaussianState: Heisenberg bound violated (det < 1/4)");
  return GaussianState{x_mean, p_mean, var_x, var_p, cov_xp};
}

GaussianState squeezed_thermal(double n_bar, double r_m) {
  if (n_bar < 0.0) throw std::domain_error("squeezed_thermal: n_bar must be >= 0");
  if (!std::isfinite(r_m)) throw std::domain_error("squeezed_thermal: non-finite r_m");
  const double v = n_bar + 0.5;
  return GaussianState{0.0, 0.0, v * std::exp(2.0 * r_m), v * std::exp(-2.0 * r_m), 0.0};
}

std::complex<double> matrix_element(const GaussianState& s, double x, double u) {
  if (!std::isfinite(x) || !std::isfinite(u))
    throw std::domain_error("matrix_element: non-finite arguments");
  const double d = s.det();
  const double xc = x - s.x_mean;
  const double re = -(d / (2.0 * s.var_x)) * u * u - xc * xc / (2.0 * s.var_x);
  const double im = -s.p_mean * u - (s.cov_xp / s.var_x) * xc * u;
  return std::exp(std::complex<double>(re, im)) /
         std::sqrt(2.0 * std::numbers::pi * s.var_x);
}

double log_wigner_gaussian(const GaussianState& s, double x, double p) {
  const double d = s.det();
  const double xc = x - s.x_mean;
  const double pc = p - s.p_mean;
  const double q = s.var_p * xc * xc - 2.0 * s.cov_xp * xc * pc + s.var_x * pc * pc;
  return -q / (2.0 * d) - std::log(2.0 * std::numbers::pi * std::sqrt(d));
}

double wigner_gaussian(const GaussianState& s, double x, double p) {
  return std::exp(log_wigner_gaussian(s, x, p));
}

}  // namespace cavwig
