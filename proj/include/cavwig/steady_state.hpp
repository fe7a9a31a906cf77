#pragma once

#include <Eigen/Dense>

#include "cavwig/phase_space.hpp"
#include "cavwig/system_params.hpp"

namespace cavwig {

/// theta/phi recurrences behind the tridiagonal inverse
///   theta_j = theta_{j-1} + (j-1)(mu^2/8) theta_{j-2},  theta_0 = theta_1 = 1
///   phi_j   = phi_{j+1} + j (mu^2/8) phi_{j+2},          phi_{N+1} = phi_N = 1.
/// Values grow factorially, so they are kept log-scaled (all are > 0);
/// theta()/phi() return the linear value, which may overflow to inf for
/// large N*mu^2 while the log form stays exact.
struct TridiagRecurrences {
  int n = 0;                       // N
  std::vector<double> log_theta;   // [0..N]
  std::vector<double> log_phi;     // [0..N+1], index 0 unused

  double theta(int j) const { return std::exp(log_theta.at(j)); }
  double phi(int j) const { return std::exp(log_phi.at(j)); }
};

TridiagRecurrences recurrences(int N, double mu);

/// Time-independent part C of the tridiagonal inverse,
/// T^{-1}_{ij}(t) = C_{ij} e^{i(i-j) omega_m t}. Returned as an N x N matrix
/// with 0-based indexing (entry (i, j) is the paper's C_{i+1, j+1}).
Eigen::MatrixXcd inverse_coefficients(const TridiagRecurrences& rec, int N, double mu);

/// RWA transfer matrix Phi(n, l): the time-averaged weight of |l><l| in
/// f |n><n| f^dagger, assembled from the F_{n,m,q,k} contraction with
/// out-of-range C and d indices zeroed (which also covers the l = 0 case).
Eigen::MatrixXd rwa_transfer(const Eigen::MatrixXcd& C, int N, double mu);

/// Paper-shaped steady-state system: (N+1) x (N+1), first N rows the
/// diagonal balance equations (column N identically zero), last row all ones.
/// Exposed for inspection and tests; see solve_steady_state for the solve.
Eigen::MatrixXd steady_system_matrix(const Eigen::MatrixXd& Phi,
                                     const SystemParams& p, int N);

/// Diagonal steady-state density matrix {P_n}, n = 0..N. P_N is the
/// normalization slack (zero column in the system) and stays ~0 when the
/// truncation is adequate.
struct FockPopulations {
  Eigen::VectorXd probs;   // length N+1
  int truncation_n = 0;    // N
  double tail_mass = 0.0;  // P_{N-1}
};

struct SteadyOptions {
  int truncation = 100;      // initial N
  double eps_tail = 1e-10;   // required P_{N-1}
  int max_escalations = 3;   // N <- ceil(1.5 N) on tail failure
};

/// Steady state of the RWA master equation with a coherent continuous drive.
/// Requires delta_bar = 0 and flux_k2 = 0.
FockPopulations solve_steady_state(const SystemParams& p, const SteadyOptions& opt = {});

/// tr(Omega rho) with Omega = sum_{k<n_levels} |2k+1><2k+1|. Values above
/// 0.5 certify Wigner negativity at the origin.
double witness(const FockPopulations& pop, int n_levels);

/// Wigner function of the Fock-diagonal state:
/// W = (1/pi) sum_n P_n (-1)^n e^{-R^2} L_n(2 R^2), R^2 = X^2 + P^2.
/// The e^{-R^2} factor is fused into the Laguerre recurrence, keeping every
/// intermediate bounded by 1.
WignerGrid fock_diagonal_wigner(const FockPopulations& pop, const PhaseSpaceGrid& grid);

}  // namespace cavwig
