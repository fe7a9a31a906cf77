#pragma once

#include "cavwig/gaussian_state.hpp"
#include "cavwig/kernels.hpp"
#include "cavwig/phase_space.hpp"
#include "cavwig/wigner_engine.hpp"

namespace cavwig {

/// Wigner function after a single-photon detection, evaluated from the
/// erfc closed form
///   W1 = W_i (X,P) {1 - [16 pi / (mu (2 delta + mu X))] sqrt(d / 2 pi V_X)
///                      Re[y e^{z^2} erfc(z)]},
/// y = 2i + 2 delta + mu X, z = sqrt(A)(4 - 4 i delta - mu B - 2 i mu X)/mu,
/// A = d / 2 V_X, B = (V_X P - V_XP X)/d.
///
/// Requires a zero-mean initial state. Within |mu (2 delta + mu X)| <
/// singular_width of the removable singularity, the column is evaluated by
/// the u-quadrature path instead.
struct ClosedFormOptions {
  double singular_width = 1e-8;
  QuadratureSpec quad;  // fallback path near the singularity
};

double wigner_single_photon_closed_form(double x, double p_coord,
                                        const GaussianState& s,
                                        const SystemParams& params,
                                        const ClosedFormOptions& opt = {});

WignerGrid wigner_single_photon_closed_form_grid(const PhaseSpaceGrid& grid,
                                                 const GaussianState& s,
                                                 const SystemParams& params,
                                                 const ClosedFormOptions& opt = {});

/// Mechanical state without the cavity response: the displaced mixture
/// W' = sum_n |c_n|^2 W_i(X, P - n mu), summed until the remaining input
/// weight is below tail_weight.
WignerGrid baseline_no_cavity(const PhaseSpaceGrid& grid, const BaselineInput& input,
                              const GaussianState& s, const SystemParams& params,
                              double tail_weight = 1e-10);

}  // namespace cavwig
