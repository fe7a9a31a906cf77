#include "cavwig/pulsed_ops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cavwig/erfcx.hpp"
#include "cavwig/quadrature.hpp"

namespace cavwig {

using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

void require_zero_mean(const GaussianState& s, const char* what) {
  if (s.x_mean != 0.0 || s.p_mean != 0.0)
    throw std::invalid_argument(std::string(what) +
                                ": initial state must be centred at the origin");
}

// Re[y erfcx(z)] weighted by W_i, overflow-safe on both branches of Re z.
// For Re z < 0, erfcx(z) = 2 e^{z^2} - erfcx(-z) and the e^{z^2} growth is
// absorbed into the Gaussian decay of W_i in log space.
double weighted_re_y_erfcx(double log_wi, cd y, cd z) {
  if (z.real() >= 0.0)
    return std::exp(log_wi) * (y * erfcx_right_halfplane(z)).real();
  const cd grow = y * std::exp(z * z + log_wi);
  return 2.0 * grow.real() -
         std::exp(log_wi) * (y * erfcx_right_halfplane(-z)).real();
}

double quadrature_fallback(double x, double p_coord, const GaussianState& s,
                           const SystemParams& params, const QuadratureSpec& quad) {
  const double umax = quad.range_factor * std::sqrt(2.0 * s.var_x / s.det());
  GaussLegendre rule(quad.n_nodes);
  cd acc = 0.0;
  for (int k = 0; k < quad.n_nodes; ++k) {
    const double u = rule.nodes[k] * umax;
    acc += rule.weights[k] * umax * std::polar(1.0, p_coord * u) *
           kernel_photon_count(x, u, 1, params) * matrix_element(s, x, u);
  }
  return acc.real() / (2.0 * kPi);
}

}  // namespace

double wigner_single_photon_closed_form(double x, double p_coord,
                                        const GaussianState& s,
                                        const SystemParams& params,
                                        const ClosedFormOptions& opt) {
  require_zero_mean(s, "wigner_single_photon_closed_form");
  const double mu = params.mu;
  const double db = params.delta_bar;
  const double denom = mu * (2.0 * db + mu * x);
  if (std::abs(denom) < opt.singular_width)
    return quadrature_fallback(x, p_coord, s, params, opt.quad);

  const double d = s.det();
  const double A = d / (2.0 * s.var_x);
  const double B = (s.var_x * p_coord - s.cov_xp * x) / d;
  const cd y(2.0 * db + mu * x, 2.0);
  const cd z = std::sqrt(A) * cd(4.0 - mu * B, -(4.0 * db + 2.0 * mu * x)) / mu;

  const double log_wi = log_wigner_gaussian(s, x, p_coord);
  const double coeff = 16.0 * kPi / denom * std::sqrt(d / (2.0 * kPi * s.var_x));
  return std::exp(log_wi) - coeff * weighted_re_y_erfcx(log_wi, y, z);
}

WignerGrid wigner_single_photon_closed_form_grid(const PhaseSpaceGrid& grid,
                                                 const GaussianState& s,
                                                 const SystemParams& params,
                                                 const ClosedFormOptions& opt) {
  require_zero_mean(s, "wigner_single_photon_closed_form_grid");
  WignerGrid out;
  out.grid = grid;
  out.values.resize(grid.nx, grid.np);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < grid.nx; ++i)
    for (int j = 0; j < grid.np; ++j)
      out.values(i, j) =
          wigner_single_photon_closed_form(grid.x(i), grid.p(j), s, params, opt);
  out.norm_warning = std::abs(out.total() - 1.0) > 1e-3;
  return out;
}

WignerGrid baseline_no_cavity(const PhaseSpaceGrid& grid, const BaselineInput& input,
                              const GaussianState& s, const SystemParams& params,
                              double tail_weight) {
  WignerGrid out;
  out.grid = grid;
  out.values = Eigen::MatrixXd::Zero(grid.nx, grid.np);

  std::vector<double> weights;
  double covered = 0.0;
  for (int n = 0; covered < 1.0 - tail_weight; ++n) {
    if (n > 100000)
      throw std::runtime_error("baseline_no_cavity: input weight tail does not close");
    weights.push_back(input_weight(input, n));
    covered += weights.back();
  }

#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid.nx; ++i) {
    const double x = grid.x(i);
    for (int j = 0; j < grid.np; ++j) {
      const double p = grid.p(j);
      double acc = 0.0;
      for (std::size_t n = 0; n < weights.size(); ++n)
        if (weights[n] > 0.0)
          acc += weights[n] * wigner_gaussian(s, x, p - double(n) * params.mu);
      out.values(i, j) = acc;
    }
  }
  out.norm_warning = std::abs(out.total() - 1.0) > 1e-3;
  return out;
}

}  // namespace cavwig
