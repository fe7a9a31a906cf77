#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cavwig/errors.hpp"
#include "cavwig/steady_state.hpp"

using namespace cavwig;
using cd = std::complex<double>;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SystemParams drive_params(double g0k, double k, double n_bath = 0.0) {
  return SystemParams::make(g0k, 0.0, kTwoPi * 1e5, kTwoPi * 1e-3, n_bath, k);
}

// Dense T(t) in the rotating frame, the independent oracle for the
// recurrence-based inverse.
Eigen::MatrixXcd dense_T(int N, double mu, double phase) {
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Identity(N, N);
  const double s = mu / (2.0 * std::sqrt(2.0));
  for (int j = 1; j < N; ++j) {
    T(j - 1, j) = cd(0.0, -s * std::sqrt(double(j))) * std::polar(1.0, -phase);
    T(j, j - 1) = cd(0.0, -s * std::sqrt(double(j))) * std::polar(1.0, phase);
  }
  return T;
}

Eigen::MatrixXcd time_factors(const Eigen::MatrixXcd& C, double phase) {
  Eigen::MatrixXcd out = C;
  for (int i = 0; i < C.rows(); ++i)
    for (int j = 0; j < C.cols(); ++j)
      out(i, j) *= std::polar(1.0, double(i - j) * phase);
  return out;
}

}  // namespace

TEST_CASE("theta recurrence first steps") {
  const double mu = std::sqrt(8.0) * 1.3;
  const auto rec = recurrences(10, mu);
  const double c = mu * mu / 8.0;
  CHECK(rec.theta(0) == doctest::Approx(1.0));
  CHECK(rec.theta(1) == doctest::Approx(1.0));
  CHECK(rec.theta(2) == doctest::Approx(1.0 + c).epsilon(1e-14));
  CHECK(rec.theta(3) == doctest::Approx(1.0 + 3.0 * c).epsilon(1e-14));
  CHECK(rec.phi(10) == doctest::Approx(1.0));
  CHECK(rec.phi(11) == doctest::Approx(1.0));
  for (int j = 0; j <= 10; ++j) CHECK(rec.log_theta[j] >= 0.0);
}

TEST_CASE("theta_N equals the dense determinant") {
  for (int N : {10, 20, 40}) {
    for (double g0k : {1.0, 5.0}) {
      const double mu = std::sqrt(8.0) * g0k;
      const auto rec = recurrences(N, mu);
      const cd det = dense_T(N, mu, 0.3).determinant();
      CHECK(std::abs(det.imag()) < 1e-8 * std::abs(det));
      CHECK(std::abs(rec.theta(N) - det.real()) < 1e-10 * det.real());
    }
  }
  // N = 60, g0/kappa = 5 stays within linear range and matches
  const double mu5 = std::sqrt(8.0) * 5.0;
  const auto rec = recurrences(60, mu5);
  const cd det = dense_T(60, mu5, 0.0).determinant();
  CHECK(std::abs(rec.theta(60) - det.real()) < 1e-9 * det.real());
}

TEST_CASE("recurrences stay finite in log form where linear evaluation overflows") {
  const double mu = std::sqrt(8.0) * 10.0;
  const auto rec = recurrences(400, mu);
  CHECK(std::isfinite(rec.log_theta[400]));
  CHECK(std::isinf(rec.theta(400)));  // linear value overflows, log stays exact
}

TEST_CASE("N = 1 inverse is the scalar 1") {
  // T truncated to one level is the 1x1 identity; theta_0 phi_2 / theta_1 = 1.
  const auto rec = recurrences(2, std::sqrt(8.0) * 2.0);
  const auto C = inverse_coefficients(rec, 2, std::sqrt(8.0) * 2.0);
  CHECK(C(0, 0).real() > 0.0);
  const double one = rec.theta(0) * rec.phi(2) / rec.theta(1);
  CHECK(one == doctest::Approx(1.0));
}

TEST_CASE("T(t) C(t) = identity at t = 0 and at a random time") {
  const int N = 30;
  const double mu = std::sqrt(8.0) * 5.0;
  const auto rec = recurrences(N, mu);
  const auto C = inverse_coefficients(rec, N, mu);
  for (double wt : {0.0, 0.37}) {
    const Eigen::MatrixXcd Tinv = time_factors(C, wt);
    const Eigen::MatrixXcd I = dense_T(N, mu, wt) * Tinv;
    CHECK((I - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("mu -> 0 collapses the transfer matrix to the identity") {
  const int N = 12;
  const auto rec = recurrences(N, 0.0);
  const auto C = inverse_coefficients(rec, N, 0.0);
  const auto Phi = rwa_transfer(C, N, 0.0);
  CHECK((Phi - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("transfer matrix is column stochastic") {
  const int N = 40;
  const double mu = std::sqrt(8.0) * 3.0;
  const auto C = inverse_coefficients(recurrences(N, mu), N, mu);
  const auto Phi = rwa_transfer(C, N, mu);
  for (int n = 0; n < N; ++n) CHECK(std::abs(Phi.row(n).sum() - 1.0) < 1e-8);
  CHECK(Phi.minCoeff() >= -1e-14);
}

TEST_CASE("transfer matrix matches the period-averaging oracle") {
  // brute force: time-average |<l| T^{-1} T^dag |n>|^2 over one period with
  // dense inversion, independent of the recurrence path
  const int N = 15;
  const double mu = std::sqrt(8.0) * 2.0;
  const auto Phi = rwa_transfer(inverse_coefficients(recurrences(N, mu), N, mu), N, mu);
  Eigen::MatrixXd avg = Eigen::MatrixXd::Zero(N, N);
  const int steps = 2048;
  for (int s = 0; s < steps; ++s) {
    const double wt = kTwoPi * s / steps;
    const Eigen::MatrixXcd T = dense_T(N, mu, wt);
    const Eigen::MatrixXcd F = T.partialPivLu().solve(T.adjoint());
    avg += F.cwiseAbs2() / double(steps);  // avg(l, n)
  }
  CHECK((Phi - avg.transpose()).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("the l = 0 transfer column matches its special-case formula") {
  const int N = 18;
  const double mu = std::sqrt(8.0) * 1.5;
  const auto C = inverse_coefficients(recurrences(N, mu), N, mu);
  const auto Phi = rwa_transfer(C, N, mu);
  const double s = mu / (2.0 * std::sqrt(2.0));
  auto dd = [&](int i, int j) -> cd {
    if (i < 1 || j < 1 || i > N || j > N) return 0.0;
    if (i == j) return 1.0;
    if (i == j - 1) return cd(0.0, s * std::sqrt(double(j - 1)));
    if (i == j + 1) return cd(0.0, s * std::sqrt(double(j)));
    return 0.0;
  };
  for (int n = 0; n < N; ++n) {
    // Phi_{n,0} = sum_{k=1}^{2} F_{n,1,-1,k} + sum_{k=0}^{1} F_{n,0,0,k}
    cd acc = 0.0;
    for (int k = 1; k <= 2; ++k)  // F_{n,1,-1,k} = C_{2,n+1} d_{1,2} C*_{k,n+1} d*_{1,k}
      acc += C(1, n) * dd(1, 2) * std::conj(C(k - 1, n)) * std::conj(dd(1, k));
    for (int k = 0; k <= 1; ++k)  // F_{n,0,0,k} = C_{1,n+1} d_{1,1} C*_{k+1,n+1} d*_{1,k+1}
      acc += C(0, n) * dd(1, 1) * std::conj(C(k, n)) * std::conj(dd(1, k + 1));
    CHECK(std::abs(acc.real() - Phi(n, 0)) < 1e-12);
  }
}

TEST_CASE("undriven steady state is the exact ground state") {
  const auto pop = solve_steady_state(drive_params(3.0, 0.0), {60, 1e-10, 0});
  CHECK(pop.probs[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pop.probs.tail(pop.probs.size() - 1).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("undriven thermal bath gives the exact thermal distribution") {
  const double nb = 1.0;
  const auto pop = solve_steady_state(drive_params(1e-6 / std::sqrt(8.0), 0.0, nb),
                                      {120, 1e-10, 0});
  for (int n = 0; n < 12; ++n) {
    const double expect = std::pow(nb / (nb + 1.0), n) / (nb + 1.0);
    CHECK(std::abs(pop.probs[n] - expect) < 1e-12);
  }
  // witness of the N_bar = 1 thermal state: sum over odd P_n = 1/3
  CHECK(witness(pop, 59) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("mu -> 0 with drive still matches the thermal populations") {
  const auto pop = solve_steady_state(drive_params(1e-6 / std::sqrt(8.0), 0.1, 0.4),
                                      {80, 1e-8, 0});
  for (int n = 0; n < 10; ++n) {
    const double expect = std::pow(0.4 / 1.4, n) / 1.4;
    CHECK(std::abs(pop.probs[n] - expect) < 1e-8);
  }
}

TEST_CASE("populations are normalized and nonnegative") {
  const auto pop = solve_steady_state(drive_params(5.0, 0.05), {150, 1e-4, 0});
  CHECK(std::abs(pop.probs.sum() - 1.0) < 1e-10);
  CHECK(pop.probs.minCoeff() >= 0.0);
  CHECK(pop.tail_mass == doctest::Approx(pop.probs[pop.truncation_n - 1]));
}

TEST_CASE("fig 3(a) parameters give a negative Wigner pinhole at the origin") {
  const auto pop = solve_steady_state(drive_params(5.0, 0.05), {150, 1e-4, 0});
  const auto g = PhaseSpaceGrid::make(-7.0, 7.0, -7.0, 7.0, 141, 141);
  const auto w = fock_diagonal_wigner(pop, g);
  const auto x0 = (g.nx - 1) / 2, p0 = (g.np - 1) / 2;
  CHECK(w.values(x0, p0) < 0.0);
  // rotational invariance by construction
  CHECK(std::abs(w.values(x0 + 20, p0) - w.values(x0, p0 + 20)) < 1e-14);
  // witness > 0.5 exactly when the origin is negative (same alternating sum)
  const double wit = witness(pop, (pop.truncation_n + 1) / 2);
  CHECK(wit > 0.5);
}

TEST_CASE("escalation raises the truncation until the tail closes") {
  SteadyOptions opt{20, 1e-10, 3};
  const auto pop = solve_steady_state(drive_params(1e-6 / std::sqrt(8.0), 0.0, 0.05), opt);
  CHECK(pop.truncation_n == 20);  // thermal tail at N=20 for nb=0.05 is ~1e-26
  SteadyOptions tight{4, 1e-30, 0};
  CHECK_THROWS_AS(
      solve_steady_state(drive_params(1e-6 / std::sqrt(8.0), 0.0, 0.5), tight),
      truncation_error);
}

TEST_CASE("steady solver rejects unsupported parameter regimes") {
  auto p = drive_params(3.0, 0.1);
  p.delta_bar = 0.5;
  CHECK_THROWS_AS(solve_steady_state(p), std::invalid_argument);
  auto p2 = drive_params(3.0, 0.1);
  p2.flux_k2 = 0.01;
  CHECK_THROWS_AS(solve_steady_state(p2), std::invalid_argument);
}

TEST_CASE("paper-shaped system matrix: zero slack column and ones row") {
  const int N = 25;
  const auto p = drive_params(2.0, 0.1, 0.2);
  const auto C = inverse_coefficients(recurrences(N, p.mu), N, p.mu);
  const auto Phi = rwa_transfer(C, N, p.mu);
  const auto A = steady_system_matrix(Phi, p, N);
  CHECK(A.rows() == N + 1);
  CHECK(A.cols() == N + 1);
  for (int i = 0; i < N; ++i) CHECK(A(i, N) == 0.0);
  for (int j = 0; j <= N; ++j) CHECK(A(N, j) == 1.0);
  // the solved populations satisfy the balance rows
  const auto pop = solve_steady_state(p, {N, 1e-1, 0});
  const Eigen::VectorXd res = A.topRows(N - 1) * pop.probs;
  CHECK(res.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("witness preconditions") {
  const auto pop = solve_steady_state(drive_params(1.0, 0.01), {40, 1e-4, 0});
  CHECK_THROWS_AS(witness(pop, 40), std::invalid_argument);
  CHECK(witness(pop, 20) >= 0.0);
  CHECK_THROWS_AS(witness(pop, 0), std::invalid_argument);
}

TEST_CASE("fock_diagonal_wigner: vacuum peak and Fock-1 dip") {
  FockPopulations vac{Eigen::VectorXd::Zero(3), 2, 0.0};
  vac.probs[0] = 1.0;
  const auto g = PhaseSpaceGrid::make(-5.0, 5.0, -5.0, 5.0, 101, 101);
  const auto wv = fock_diagonal_wigner(vac, g);
  CHECK(wv.values(50, 50) == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-12));
  CHECK(wv.total() == doctest::Approx(1.0).epsilon(1e-4));

  FockPopulations one{Eigen::VectorXd::Zero(3), 2, 0.0};
  one.probs[1] = 1.0;
  const auto w1 = fock_diagonal_wigner(one, g);
  CHECK(w1.values(50, 50) == doctest::Approx(-1.0 / std::numbers::pi).epsilon(1e-12));
  CHECK(w1.total() == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("fock_diagonal_wigner survives large n and large radius without overflow") {
  FockPopulations pop{Eigen::VectorXd::Zero(301), 300, 0.0};
  pop.probs[300] = 1.0;
  const auto g = PhaseSpaceGrid::make(-30.0, 30.0, -30.0, 30.0, 41, 41);
  const auto w = fock_diagonal_wigner(pop, g);
  CHECK(w.values.allFinite());
}
