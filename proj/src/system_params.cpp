#include "cavwig/system_params.hpp"

#include <cmath>
#include <stdexcept>

namespace cavwig {

SystemParams SystemParams::make(double g0_over_kappa, double delta_bar,
                                double omega_m, double gamma, double n_bath,
                                double flux_k, double flux_k2) {
  if (!std::isfinite(g0_over_kappa) || !std::isfinite(delta_bar))
    throw std::domain_error("SystemParams: non-finite coupling or detuning");
  if (g0_over_kappa < 0.0)
    throw std::domain_error("SystemParams: g0/kappa must be >= 0");
  if (gamma < 0.0 || n_bath < 0.0 || flux_k < 0.0 || flux_k2 < 0.0)
    throw std::domain_error("SystemParams: rates and occupations must be >= 0");
  SystemParams p;
  p.g0_over_kappa = g0_over_kappa;
  p.mu = std::sqrt(8.0) * g0_over_kappa;
  p.delta_bar = delta_bar;
  p.omega_m = omega_m;
  p.gamma = gamma;
  p.n_bath = n_bath;
  p.flux_k = flux_k;
  p.flux_k2 = flux_k2;
  return p;
}

std::complex<double> response(double x, const SystemParams& p) {
  if (!std::isfinite(x)) throw std::domain_error("response: non-finite position");
  const std::complex<double> s(0.0, p.mu * x / 2.0 + p.delta_bar);
  return (1.0 + s) / (1.0 - s);
}

double optical_phase(double x, const SystemParams& p) {
  if (!std::isfinite(x)) throw std::domain_error("optical_phase: non-finite position");
  return 2.0 * std::atan(p.mu * x / 2.0 + p.delta_bar);
}

}  // namespace cavwig
