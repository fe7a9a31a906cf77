#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cavwig/steady_state.hpp"
#include "cavwig/system_params.hpp"

namespace cavwig {

/// Response operator f(X~(t)) on the truncated Fock space, built by dense
/// inversion of T(t) = 1 - i(mu X~(t)/2 + delta_bar); phase = omega_m * t.
Eigen::MatrixXcd response_operator(int N, const SystemParams& p, double phase);

/// Jump operators of the continuous-drive master equation,
/// L1 = sqrt(2 k1) f(X), L2 = sqrt(2 k2) f(X)^2, truncated at N levels.
struct MasterEquationOps {
  Eigen::MatrixXcd L1;
  Eigen::MatrixXcd L2;
};
MasterEquationOps master_equation_generator(const SystemParams& p, int N);

struct LindbladOptions {
  int steps_per_period = 200;  // fixed-step RK4 substeps per mechanical period
  double trace_tol = 1e-6;
};

struct RwaValidation {
  std::vector<double> fidelity;  // Uhlmann fidelity sampled once per period
  double max_trace_drift = 0.0;
};

/// Propagates the full time-dependent master equation in the rotating frame,
/// starting from the RWA steady state, and records the Uhlmann fidelity with
/// that steady state once per mechanical period. f~(t) is rebuilt per
/// substep by dense inversion, independent of the recurrence-based solver it
/// validates.
RwaValidation validate_rwa(const FockPopulations& pop, const SystemParams& p,
                           int periods, int N, const LindbladOptions& opt = {});

}  // namespace cavwig
