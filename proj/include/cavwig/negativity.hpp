#pragma once

#include "cavwig/phase_space.hpp"

namespace cavwig {

/// Negativity quantifiers of a Wigner grid. delta uses the grid's own total
/// rather than assuming normalization, so truncation error cancels.
struct NegativityReport {
  double delta = 0.0;             // integral |W| - integral W
  double min_value = 0.0;
  double min_x = 0.0, min_p = 0.0;  // sub-cell (parabolic) refinement of argmin
  double neg_to_pos_ratio = 0.0;  // (delta/2) / positive volume
};

NegativityReport negative_volume(const WignerGrid& w);

/// Thermal-noise map: convolution with the Gaussian
/// (1/(2 pi tau)) exp(-(X^2+P^2)/(2 tau)), i.e. variance tau_th per
/// quadrature axis. The grid is zero-padded before convolving so the spread
/// support stays on-grid; the returned grid carries the padded bounds.
WignerGrid thermal_convolve(const WignerGrid& w, double tau_th);

struct DepthOptions {
  double bisect_tol = 1e-4;
  double eps_neg_rel = 1e-9;  // threshold relative to max W of the input grid
};

/// Nonclassical depth tau_inf = 1/2 + tau_th*, where tau_th* is the least
/// added thermal noise that clears the Wigner negativity. Valid only for
/// Wigner-negative inputs (delta > 0); positive inputs are a precondition
/// error since they would need the R-function route instead.
double nonclassical_depth(const WignerGrid& w, const DepthOptions& opt = {});

}  // namespace cavwig
