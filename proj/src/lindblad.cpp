#include "cavwig/lindblad.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cavwig/errors.hpp"

namespace cavwig {
namespace {

using cd = std::complex<double>;
using MatC = Eigen::MatrixXcd;

// T(t) = 1 - i (mu X~(t)/2 + delta), tridiagonal in the Fock basis.
MatC tridiagonal_T(int N, const SystemParams& p, double phase) {
  MatC T = MatC::Identity(N, N);
  const cd diag(1.0, -p.delta_bar);
  for (int i = 0; i < N; ++i) T(i, i) = diag;
  const double s = p.mu / (2.0 * std::sqrt(2.0));
  for (int j = 1; j < N; ++j) {
    const cd b = cd(0.0, -s * std::sqrt(double(j))) * std::polar(1.0, -phase);
    const cd c = cd(0.0, -s * std::sqrt(double(j))) * std::polar(1.0, phase);
    T(j - 1, j) = b;
    T(j, j - 1) = c;
  }
  return T;
}

// D[b] rho and D[b+] rho, written elementwise (b+b is diagonal).
void add_damping(const Eigen::MatrixXcd& rho, double g_down, double g_up, MatC& out) {
  const int N = int(rho.rows());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      cd acc = 0.0;
      if (g_down != 0.0) {
        cd v = 0.0;
        if (i + 1 < N && j + 1 < N)
          v = std::sqrt(double(i + 1)) * std::sqrt(double(j + 1)) * rho(i + 1, j + 1);
        acc += g_down * (v - 0.5 * double(i + j) * rho(i, j));
      }
      if (g_up != 0.0) {
        cd v = 0.0;
        if (i >= 1 && j >= 1)
          v = std::sqrt(double(i)) * std::sqrt(double(j)) * rho(i - 1, j - 1);
        acc += g_up * (v - 0.5 * double(i + j + 2) * rho(i, j));
      }
      out(i, j) += acc;
    }
}

}  // namespace

Eigen::MatrixXcd response_operator(int N, const SystemParams& p, double phase) {
  if (N < 1) throw std::invalid_argument("response_operator: N must be >= 1");
  const MatC T = tridiagonal_T(N, p, phase);
  const MatC Tdag = T.adjoint();
  return T.partialPivLu().solve(Tdag);
}

MasterEquationOps master_equation_generator(const SystemParams& p, int N) {
  MasterEquationOps ops;
  const MatC f = response_operator(N, p, 0.0);
  ops.L1 = std::sqrt(2.0 * p.flux_k) * f;
  ops.L2 = std::sqrt(2.0 * p.flux_k2) * (f * f);
  return ops;
}

RwaValidation validate_rwa(const FockPopulations& pop, const SystemParams& p,
                           int periods, int N, const LindbladOptions& opt) {
  if (p.flux_k2 != 0.0 || p.delta_bar != 0.0)
    throw std::invalid_argument("validate_rwa: requires delta_bar = 0 and flux_k2 = 0");
  if (p.omega_m <= 0.0)
    throw std::invalid_argument("validate_rwa: requires omega_m > 0");
  if (opt.steps_per_period < 200)
    throw std::invalid_argument("validate_rwa: needs >= 200 steps per period");
  if (pop.probs.size() < N)
    throw std::invalid_argument("validate_rwa: populations shorter than N");

  // RWA state embedded on the propagation space, renormalized.
  Eigen::VectorXd diag = pop.probs.head(N).cwiseMax(0.0);
  diag /= diag.sum();
  MatC rho = diag.cast<cd>().asDiagonal();
  const Eigen::VectorXd sq = diag.cwiseSqrt();

  const double g_down = 2.0 * p.gamma * (p.n_bath + 1.0);
  const double g_up = 2.0 * p.gamma * p.n_bath;
  const double two_k = 2.0 * p.flux_k;

  auto rhs = [&](const MatC& f, const MatC& g, const MatC& r) -> MatC {
    const MatC fr = f * r;
    MatC out = two_k * (fr * f.adjoint() - 0.5 * (g * r + r * g));
    add_damping(r, g_down, g_up, out);
    return out;
  };

  auto fidelity_with_rwa = [&](const MatC& r) -> double {
    MatC m = sq.asDiagonal() * r * sq.asDiagonal();
    Eigen::SelfAdjointEigenSolver<MatC> es(0.5 * (m + m.adjoint()));
    double acc = 0.0;
    for (int i = 0; i < N; ++i) acc += std::sqrt(std::max(0.0, es.eigenvalues()[i]));
    return acc * acc;
  };

  const double period = 2.0 * std::numbers::pi / p.omega_m;
  const double h = period / opt.steps_per_period;

  RwaValidation res;
  res.fidelity.reserve(periods);
  double t = 0.0;
  for (int per = 0; per < periods; ++per) {
    for (int s = 0; s < opt.steps_per_period; ++s) {
      // f~ rebuilt by dense inversion at each of the three stage times.
      const MatC f0 = response_operator(N, p, p.omega_m * t);
      const MatC fh = response_operator(N, p, p.omega_m * (t + h / 2.0));
      const MatC f1 = response_operator(N, p, p.omega_m * (t + h));
      const MatC g0 = f0.adjoint() * f0;
      const MatC gh = fh.adjoint() * fh;
      const MatC g1 = f1.adjoint() * f1;
      const MatC k1 = rhs(f0, g0, rho);
      const MatC k2 = rhs(fh, gh, rho + (h / 2.0) * k1);
      const MatC k3 = rhs(fh, gh, rho + (h / 2.0) * k2);
      const MatC k4 = rhs(f1, g1, rho + h * k3);
      rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      t += h;
    }
    const double drift = std::abs(rho.trace().real() - 1.0);
    res.max_trace_drift = std::max(res.max_trace_drift, drift);
    if (drift > opt.trace_tol)
      throw step_size_error("validate_rwa: trace drift " + std::to_string(drift) +
                            " exceeds tolerance");
    res.fidelity.push_back(fidelity_with_rwa(rho));
  }
  return res;
}

}  // namespace cavwig
