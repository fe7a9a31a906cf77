#include "cavwig/negativity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cavwig {
namespace {

// Vertex of the parabola through (-1,ym), (0,y0), (+1,yp), clamped to the cell.
double parabolic_offset(double ym, double y0, double yp) {
  const double denom = ym - 2.0 * y0 + yp;
  if (denom <= 0.0) return 0.0;
  const double t = 0.5 * (ym - yp) / denom;
  return std::clamp(t, -1.0, 1.0);
}

std::vector<double> gaussian_taps(double sigma, double h, int taps) {
  std::vector<double> w(2 * taps + 1);
  if (sigma >= 3.0 * h) {
    for (int j = -taps; j <= taps; ++j)
      w[j + taps] = std::exp(-0.5 * (j * h) * (j * h) / (sigma * sigma));
  } else {
    // Cell-integrated kernel stays exact down to the sigma -> 0 limit.
    const double inv = 1.0 / (sigma * std::sqrt(2.0) + 1e-300);
    for (int j = -taps; j <= taps; ++j)
      w[j + taps] = 0.5 * (std::erf(((j + 0.5) * h) * inv) - std::erf(((j - 0.5) * h) * inv));
  }
  double sum = 0.0;
  for (double v : w) sum += v;
  for (double& v : w) v /= sum;
  return w;
}

}  // namespace

NegativityReport negative_volume(const WignerGrid& w) {
  const auto& g = w.grid;
  const double cell = g.dx() * g.dp();
  double total = 0.0, total_abs = 0.0;
  int imin = 0, jmin = 0;
  double vmin = w.values(0, 0);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.np; ++j) {
      const double v = w.values(i, j);
      total += v;
      total_abs += std::abs(v);
      if (v < vmin) {
        vmin = v;
        imin = i;
        jmin = j;
      }
    }

  NegativityReport r;
  r.delta = (total_abs - total) * cell;
  r.min_value = vmin;
  double ox = 0.0, op = 0.0;
  if (imin > 0 && imin < g.nx - 1)
    ox = parabolic_offset(w.values(imin - 1, jmin), vmin, w.values(imin + 1, jmin));
  if (jmin > 0 && jmin < g.np - 1)
    op = parabolic_offset(w.values(imin, jmin - 1), vmin, w.values(imin, jmin + 1));
  r.min_x = g.x(imin) + ox * g.dx();
  r.min_p = g.p(jmin) + op * g.dp();
  const double positive = (total_abs + total) / 2.0 * cell;
  r.neg_to_pos_ratio = positive > 0.0 ? (r.delta / 2.0) / positive : 0.0;
  return r;
}

WignerGrid thermal_convolve(const WignerGrid& w, double tau_th) {
  if (tau_th < 0.0) throw std::domain_error("thermal_convolve: tau_th must be >= 0");
  if (tau_th == 0.0) return w;

  const auto& g = w.grid;
  const double sigma = std::sqrt(tau_th);
  const int pad_x = int(std::ceil(6.0 * sigma / g.dx()));
  const int pad_p = int(std::ceil(6.0 * sigma / g.dp()));

  WignerGrid out;
  out.grid = PhaseSpaceGrid::make(g.x_min - pad_x * g.dx(), g.x_max + pad_x * g.dx(),
                                  g.p_min - pad_p * g.dp(), g.p_max + pad_p * g.dp(),
                                  g.nx + 2 * pad_x, g.np + 2 * pad_p);
  Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(out.grid.nx, out.grid.np);
  padded.block(pad_x, pad_p, g.nx, g.np) = w.values;

  const auto wx = gaussian_taps(sigma, g.dx(), pad_x);
  const auto wp = gaussian_taps(sigma, g.dp(), pad_p);

  // Separable convolution, rows then columns.
  Eigen::MatrixXd tmp = Eigen::MatrixXd::Zero(out.grid.nx, out.grid.np);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < out.grid.nx; ++i)
    for (int j = 0; j < out.grid.np; ++j) {
      double acc = 0.0;
      const int lo = std::max(0, j - pad_p), hi = std::min(out.grid.np - 1, j + pad_p);
      for (int q = lo; q <= hi; ++q) acc += padded(i, q) * wp[q - j + pad_p];
      tmp(i, j) = acc;
    }
  out.values = Eigen::MatrixXd::Zero(out.grid.nx, out.grid.np);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < out.grid.np; ++j)
    for (int i = 0; i < out.grid.nx; ++i) {
      double acc = 0.0;
      const int lo = std::max(0, i - pad_x), hi = std::min(out.grid.nx - 1, i + pad_x);
      for (int q = lo; q <= hi; ++q) acc += tmp(q, j) * wx[q - i + pad_x];
      out.values(i, j) = acc;
    }
  out.max_imag_residual = w.max_imag_residual;
  out.norm_warning = w.norm_warning;
  return out;
}

double nonclassical_depth(const WignerGrid& w, const DepthOptions& opt) {
  const NegativityReport base = negative_volume(w);
  if (!(base.delta > 0.0) || !(base.min_value < 0.0))
    throw std::invalid_argument(
        "nonclassical_depth: input has no Wigner negativity "
        "(use R-function path, unsupported)");
  const double eps_neg = opt.eps_neg_rel * w.values.maxCoeff();

  auto clears = [&](double tau) {
    return thermal_convolve(w, tau).values.minCoeff() >= -eps_neg;
  };

  double lo = 0.0, hi = 0.5;
  if (!clears(hi)) return 1.0;  // tau_th* capped at 1/2 (Q function boundary)
  while (hi - lo > opt.bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    (clears(mid) ? hi : lo) = mid;
  }
  return 0.5 + 0.5 * (lo + hi);
}

}  // namespace cavwig
