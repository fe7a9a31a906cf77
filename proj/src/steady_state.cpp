#include "cavwig/steady_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cavwig/errors.hpp"

namespace cavwig {
namespace {

using cd = std::complex<double>;

double log_add(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// i^m for integer m >= 0.
cd unit_power(int m) {
  switch (m & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

TridiagRecurrences recurrences(int N, double mu) {
  if (N < 2) throw std::invalid_argument("recurrences: N must be >= 2");
  if (mu < 0.0) throw std::domain_error("recurrences: mu must be >= 0");
  TridiagRecurrences rec;
  rec.n = N;
  rec.log_theta.assign(N + 1, 0.0);
  rec.log_phi.assign(N + 2, 0.0);
  const double c = mu * mu / 8.0;
  if (c > 0.0) {
    for (int j = 2; j <= N; ++j)
      rec.log_theta[j] =
          log_add(rec.log_theta[j - 1], std::log((j - 1) * c) + rec.log_theta[j - 2]);
    for (int j = N - 1; j >= 1; --j)
      rec.log_phi[j] =
          log_add(rec.log_phi[j + 1], std::log(j * c) + rec.log_phi[j + 2]);
  }
  return rec;
}

Eigen::MatrixXcd inverse_coefficients(const TridiagRecurrences& rec, int N, double mu) {
  if (rec.n != N) throw std::invalid_argument("inverse_coefficients: N mismatch");
  Eigen::MatrixXcd C(N, N);
  const double lmu = mu > 0.0 ? std::log(mu / (2.0 * std::sqrt(2.0)))
                              : -std::numeric_limits<double>::infinity();
  const double ltN = rec.log_theta[N];
  for (int i0 = 0; i0 < N; ++i0) {
    const int i = i0 + 1;  // paper indices
    for (int j0 = i0; j0 < N; ++j0) {
      const int j = j0 + 1;
      const int m = j - i;
      const double lmag = (m == 0 ? 0.0 : m * lmu) +
                          0.5 * (std::lgamma(j) - std::lgamma(i)) +
                          rec.log_theta[i - 1] + rec.log_phi[j + 1] - ltN;
      const cd v = unit_power(m) * std::exp(lmag);
      C(i0, j0) = v;
      C(j0, i0) = v;  // C is symmetric in its time-stripped form
    }
  }
  return C;
}

Eigen::MatrixXd rwa_transfer(const Eigen::MatrixXcd& C, int N, double mu) {
  if (C.rows() != N || C.cols() != N)
    throw std::invalid_argument("rwa_transfer: C must be N x N");
  // Paper-index accessors with zero padding outside 1..N.
  auto Cg = [&](int i, int j) -> cd {
    if (i < 1 || j < 1 || i > N || j > N) return 0.0;
    return C(i - 1, j - 1);
  };
  const double s = mu / (2.0 * std::sqrt(2.0));
  auto dg = [&](int i, int j) -> cd {
    if (i < 1 || j < 1 || i > N || j > N) return 0.0;
    if (i == j) return 1.0;
    if (i == j - 1) return cd(0.0, s * std::sqrt(double(j - 1)));
    if (i == j + 1) return cd(0.0, s * std::sqrt(double(j)));
    return 0.0;
  };

  Eigen::MatrixXd Phi(N, N);
#pragma omp parallel for schedule(static)
  for (int n = 0; n < N; ++n) {
    for (int l = 0; l < N; ++l) {
      cd acc = 0.0;
      for (int q = -1; q <= 1; ++q) {
        const int m = l - q;
        for (int k = m - 1; k <= m + 1; ++k) {
          acc += Cg(m + 1, n + 1) * dg(m + 1 + q, m + 1) *
                 std::conj(Cg(k + 1 + q, n + 1)) * std::conj(dg(m + 1 + q, k + 1 + q));
        }
      }
      Phi(n, l) = acc.real();
    }
  }
  return Phi;
}

Eigen::MatrixXd steady_system_matrix(const Eigen::MatrixXd& Phi,
                                     const SystemParams& p, int N) {
  const double g = p.gamma, nb = p.n_bath, k = p.flux_k;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N + 1, N + 1);
  for (int l = 0; l < N; ++l) {
    A(l, l) += -2.0 * g * (nb + 1.0) * l - 2.0 * g * nb * (l + 1.0) - 2.0 * k;
    if (l + 1 <= N - 1) A(l, l + 1) += 2.0 * g * (nb + 1.0) * (l + 1.0);
    if (l - 1 >= 0) A(l, l - 1) += 2.0 * g * nb * l;
    for (int n = 0; n < N; ++n) A(l, n) += 2.0 * k * Phi(n, l);
  }
  A.row(N).setOnes();
  return A;
}

namespace {

// One steady solve at fixed truncation. The paper-shaped (N+1)-system is
// rank deficient whenever the truncated generator is exactly trace
// preserving (N_bar = 0 leaves no leak), so the solve uses the equivalent
// reduced form: balance rows l = 0..N-2 plus the normalization row over
// P_0..P_{N-1}; the slack P_N is recovered from the normalization.
Eigen::VectorXd solve_at(const SystemParams& p, int N) {
  const TridiagRecurrences rec = recurrences(N, p.mu);
  const Eigen::MatrixXcd C = inverse_coefficients(rec, N, p.mu);
  const Eigen::MatrixXd Phi = rwa_transfer(C, N, p.mu);
  const Eigen::MatrixXd A_full = steady_system_matrix(Phi, p, N);

  Eigen::MatrixXd A(N, N);
  A.topRows(N - 1) = A_full.block(0, 0, N - 1, N);
  A.row(N - 1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(N);
  b[N - 1] = 1.0;

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  if (qr.rank() < N)
    throw solver_error("solve_steady_state: singular balance system (rank " +
                       std::to_string(qr.rank()) + " of " + std::to_string(N) + ")");
  Eigen::VectorXd P = qr.solve(b);
  const double resid = (A * P - b).norm();
  if (!P.allFinite() || resid > 1e-8)
    throw solver_error("solve_steady_state: solve residual " + std::to_string(resid));

  const double min_p = P.minCoeff();
  if (min_p < -1e-10)
    throw solver_error("solve_steady_state: negative population " +
                       std::to_string(min_p));
  Eigen::VectorXd full(N + 1);
  full.head(N) = P.cwiseMax(0.0);
  full[N] = std::max(0.0, 1.0 - full.head(N).sum());
  full /= full.sum();
  return full;
}

}  // namespace

FockPopulations solve_steady_state(const SystemParams& p, const SteadyOptions& opt) {
  if (p.flux_k2 != 0.0)
    throw std::invalid_argument("solve_steady_state: requires flux_k2 = 0");
  if (p.delta_bar != 0.0)
    throw std::invalid_argument("solve_steady_state: requires delta_bar = 0");
  if (p.gamma <= 0.0)
    throw std::invalid_argument("solve_steady_state: requires gamma > 0");
  if (opt.truncation < 2)
    throw std::invalid_argument("solve_steady_state: truncation must be >= 2");

  int N = opt.truncation;
  for (int attempt = 0;; ++attempt) {
    Eigen::VectorXd probs = solve_at(p, N);
    const double tail = probs[N - 1];
    if (tail < opt.eps_tail) return FockPopulations{std::move(probs), N, tail};
    if (attempt >= opt.max_escalations)
      throw truncation_error("solve_steady_state: tail mass " + std::to_string(tail) +
                             " at N=" + std::to_string(N) +
                             " still above eps_tail after escalation");
    N = int(std::ceil(1.5 * N));
  }
}

double witness(const FockPopulations& pop, int n_levels) {
  if (n_levels < 1) throw std::invalid_argument("witness: n_levels must be >= 1");
  if (2 * n_levels - 1 > pop.truncation_n)
    throw std::invalid_argument("witness: truncation too small for n_levels");
  double acc = 0.0;
  for (int k = 0; k < n_levels; ++k) acc += pop.probs[2 * k + 1];
  return acc;
}

WignerGrid fock_diagonal_wigner(const FockPopulations& pop, const PhaseSpaceGrid& grid) {
  WignerGrid out;
  out.grid = grid;
  out.values.resize(grid.nx, grid.np);
  const int nmax = int(pop.probs.size()) - 1;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid.nx; ++i) {
    const double x = grid.x(i);
    for (int j = 0; j < grid.np; ++j) {
      const double p = grid.p(j);
      const double r2 = x * x + p * p;
      const double arg = 2.0 * r2;
      // t_n = e^{-R^2} L_n(2R^2); |t_n| <= 1 throughout the recurrence.
      double tm1 = std::exp(-r2);
      double t = (1.0 - arg) * tm1;
      double acc = pop.probs[0] * tm1;
      if (nmax >= 1) acc -= pop.probs[1] * t;
      double sign = 1.0;
      for (int n = 1; n < nmax; ++n) {
        const double tn1 = ((2.0 * n + 1.0 - arg) * t - n * tm1) / (n + 1.0);
        tm1 = t;
        t = tn1;
        acc += sign * pop.probs[n + 1] * t;  // sign = (-1)^{n+1}
        sign = -sign;
      }
      out.values(i, j) = acc / std::numbers::pi;
    }
  }
  return out;
}

}  // namespace cavwig
