#include "cavwig/wigner_engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cavwig/errors.hpp"
#include "cavwig/quadrature.hpp"

namespace cavwig {

using cd = std::complex<double>;

WignerGrid compute_wigner(const PhaseSpaceGrid& grid, const KernelSpec& kernel,
                          const GaussianState& state, const WignerOptions& opt) {
  if (grid.nx < 2 || grid.np < 2)
    throw std::invalid_argument("compute_wigner: invalid grid");
  const int nq = opt.quad.n_nodes;
  const double umax = opt.quad.range_factor * std::sqrt(2.0 * state.var_x / state.det());

  GaussLegendre rule(nq);
  Eigen::VectorXd un(nq), wt(nq);
  for (int k = 0; k < nq; ++k) {
    un[k] = rule.nodes[k] * umax;
    wt[k] = rule.weights[k] * umax;
  }

  // E(j, k) = e^{i p_j u_k}; shared by every grid column.
  Eigen::MatrixXcd E(grid.np, nq);
  for (int j = 0; j < grid.np; ++j)
    for (int k = 0; k < nq; ++k) E(j, k) = std::polar(1.0, grid.p(j) * un[k]);

  WignerGrid out;
  out.grid = grid;
  out.values.resize(grid.nx, grid.np);
  Eigen::VectorXd imag_res = Eigen::VectorXd::Zero(grid.nx);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < grid.nx; ++i) {
    const double x = grid.x(i);
    Eigen::VectorXcd kvals(nq);
    kernel_column(kernel, x, {un.data(), size_t(nq)}, {kvals.data(), size_t(nq)});
    Eigen::VectorXcd c(nq);
    for (int k = 0; k < nq; ++k)
      c[k] = wt[k] * kvals[k] * matrix_element(state, x, un[k]);
    const Eigen::VectorXcd row = E * c / (2.0 * std::numbers::pi);
    out.values.row(i) = row.real().transpose();
    imag_res[i] = row.imag().cwiseAbs().maxCoeff();
  }

  out.max_imag_residual = imag_res.maxCoeff();
  if (out.max_imag_residual > opt.imag_tol)
    throw accuracy_fault("compute_wigner: imaginary residual " +
                         std::to_string(out.max_imag_residual) +
                         " exceeds tolerance (kernel symmetry broken)");
  out.norm_warning = std::abs(out.total() - 1.0) > opt.norm_tol;
  return out;
}

std::vector<double> marginal(const WignerGrid& w, Axis keep) {
  const auto& g = w.grid;
  std::vector<double> out;
  if (keep == Axis::X) {
    out.resize(g.nx);
    for (int i = 0; i < g.nx; ++i) {
      double acc = 0.5 * (w.values(i, 0) + w.values(i, g.np - 1));
      for (int j = 1; j < g.np - 1; ++j) acc += w.values(i, j);
      out[i] = acc * g.dp();
    }
  } else {
    out.resize(g.np);
    for (int j = 0; j < g.np; ++j) {
      double acc = 0.5 * (w.values(0, j) + w.values(g.nx - 1, j));
      for (int i = 1; i < g.nx - 1; ++i) acc += w.values(i, j);
      out[j] = acc * g.dx();
    }
  }
  return out;
}

double symmetry_check(const WignerGrid& w) {
  const auto& g = w.grid;
  if (std::abs(g.x_min + g.x_max) > 1e-12 * std::max(1.0, std::abs(g.x_max)))
    throw std::invalid_argument("symmetry_check: grid not symmetric about X=0");
  double worst = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    const int m = g.nx - 1 - i;
    worst = std::max(worst, (w.values.row(i) - w.values.row(m)).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

struct KickMoments {
  double mean = 0.0;  // mean photon number entering the displacement ladder
  double spread = 0.0;
};

KickMoments kick_moments(const KernelVariant& v) {
  return std::visit(
      [](const auto& k) -> KickMoments {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, DeterministicCoherent>) {
          const double m = std::norm(k.alpha);
          return {m, std::sqrt(m)};
        } else if constexpr (std::is_same_v<T, DeterministicSqueezedVac>) {
          const double m = std::sinh(k.r_l) * std::sinh(k.r_l);
          return {m, std::sqrt(2.0 * m * (m + 1.0))};
        } else if constexpr (std::is_same_v<T, PhotonCount>) {
          return {double(k.n), 0.0};
        } else if constexpr (std::is_same_v<T, LossyPhotonCount>) {
          const double m = (1.0 - k.eta) * std::norm(k.alpha);
          return {k.n + m, std::sqrt(m)};
        } else {
          const BaselineNoCavity& b = k;
          if (const auto* c = std::get_if<CoherentInput>(&b.input)) {
            const double m = std::norm(c->alpha);
            return {m, std::sqrt(m)};
          }
          const auto& s = std::get<SqueezedVacInput>(b.input);
          const double m = std::sinh(s.r_l) * std::sinh(s.r_l);
          return {m, std::sqrt(2.0 * m * (m + 1.0))};
        }
      },
      v);
}

}  // namespace

PhaseSpaceGrid default_grid(const KernelSpec& kernel, const GaussianState& state,
                            int nx, int np) {
  const double sx = std::sqrt(state.var_x);
  const double sp = std::sqrt(state.var_p);
  const double xr = 6.0 * sx + 1.0;
  const KickMoments km = kick_moments(kernel.variant);
  const double kick = kernel.params.mu * (km.mean + 4.0 * km.spread);
  const double p_max = std::max(12.0, 4.0 + kick + 6.0 * sp);
  const double p_min = -std::max(4.0, 6.0 * sp);
  return PhaseSpaceGrid::make(state.x_mean - xr, state.x_mean + xr,
                              state.p_mean + p_min, state.p_mean + p_max, nx, np);
}

}  // namespace cavwig
