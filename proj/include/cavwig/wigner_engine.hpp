#pragma once

#include <vector>

#include "cavwig/gaussian_state.hpp"
#include "cavwig/kernels.hpp"
#include "cavwig/phase_space.hpp"

namespace cavwig {

/// u-quadrature settings. The integration window is
/// [-U, U] with U = range_factor * sqrt(2 V_X / d), which covers the
/// exp(-(d/2V_X) u^2) factor of the matrix element far into its tail.
struct QuadratureSpec {
  int n_nodes = 257;
  double range_factor = 8.0;
};

struct WignerOptions {
  QuadratureSpec quad;
  double norm_tol = 1e-3;   // |total - 1| above this sets norm_warning
  double imag_tol = 1e-8;   // max imaginary residual above this is a hard error
};

/// W(X,P) = (1/2pi) \int e^{iPu} K(X,u) <X-u/2|rho_i|X+u/2> du on every grid
/// node. Imaginary parts are checked against imag_tol, then discarded.
/// Grid nodes are independent; evaluation is data-parallel and the result is
/// identical for any worker count.
WignerGrid compute_wigner(const PhaseSpaceGrid& grid, const KernelSpec& kernel,
                          const GaussianState& state, const WignerOptions& opt = {});

enum class Axis { X, P };

/// Trapezoidal integral along the other axis; element i of the result is the
/// density at the i-th node of the kept axis.
std::vector<double> marginal(const WignerGrid& w, Axis keep);

/// Max |W(X,P) - W(-X,P)| over the grid. Requires a grid symmetric about X=0.
double symmetry_check(const WignerGrid& w);

/// Grid sized from the state and kernel: X spans the (preserved) position
/// marginal, P spans the momentum-kick ladder plus the state's own spread.
PhaseSpaceGrid default_grid(const KernelSpec& kernel, const GaussianState& state,
                            int nx = 241, int np = 241);

}  // namespace cavwig
