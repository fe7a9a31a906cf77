#include "cavwig/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cavwig/errors.hpp"

namespace cavwig {
namespace {

using cd = std::complex<double>;

double check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(std::string(what) + ": non-finite argument");
  return v;
}

// 1 - f*(x+u/2) f(x-u/2) = i mu u / ([mu(x+u/2)/2 + d - i][mu(x-u/2)/2 + d + i])
cd coherent_exponent_unit(double x, double u, const SystemParams& p) {
  const double a = p.mu * (x - u / 2.0) / 2.0 + p.delta_bar;
  const double b = p.mu * (x + u / 2.0) / 2.0 + p.delta_bar;
  return cd(0.0, p.mu * u) / (cd(b, -1.0) * cd(a, 1.0));
}

// phi(x-u/2) - phi(x+u/2); arg of f(x-u/2) f*(x+u/2)
double phase_diff(double x, double u, const SystemParams& p) {
  return optical_phase(x - u / 2.0, p) - optical_phase(x + u / 2.0, p);
}

cd squeezed_sqrt_argument(double x, double u, double r_l, const SystemParams& p) {
  const double t = std::tanh(r_l);
  return 1.0 - t * t * std::polar(1.0, 2.0 * phase_diff(x, u, p));
}

}  // namespace

KernelSpec KernelSpec::make(KernelVariant v, SystemParams p) {
  if (auto* ph = std::get_if<PhotonCount>(&v)) {
    if (ph->n < 0) throw std::domain_error("KernelSpec: photon count must be >= 0");
  } else if (auto* lo = std::get_if<LossyPhotonCount>(&v)) {
    if (lo->n < 0) throw std::domain_error("KernelSpec: photon count must be >= 0");
    if (!(lo->eta >= 0.0 && lo->eta <= 1.0))
      throw std::domain_error("KernelSpec: eta must lie in [0, 1]");
  } else if (auto* sq = std::get_if<DeterministicSqueezedVac>(&v)) {
    if (sq->r_l < 0.0) throw std::domain_error("KernelSpec: r_l must be >= 0");
  } else if (auto* bl = std::get_if<BaselineNoCavity>(&v)) {
    if (auto* s = std::get_if<SqueezedVacInput>(&bl->input))
      if (s->r_l < 0.0) throw std::domain_error("KernelSpec: r_l must be >= 0");
  }
  return KernelSpec{std::move(v), p};
}

std::complex<double> kernel_coherent(double x, double u, std::complex<double> alpha,
                                     const SystemParams& p) {
  check_finite(x, "kernel_coherent");
  check_finite(u, "kernel_coherent");
  return std::exp(-std::norm(alpha) * coherent_exponent_unit(x, u, p));
}

std::complex<double> kernel_squeezed_vacuum(double x, double u, double r_l,
                                            const SystemParams& p) {
  check_finite(x, "kernel_squeezed_vacuum");
  check_finite(u, "kernel_squeezed_vacuum");
  if (r_l < 0.0) throw std::domain_error("kernel_squeezed_vacuum: r_l must be >= 0");
  return 1.0 / (std::cosh(r_l) * std::sqrt(squeezed_sqrt_argument(x, u, r_l, p)));
}

std::complex<double> kernel_photon_count(double x, double u, int n,
                                         const SystemParams& p) {
  check_finite(x, "kernel_photon_count");
  check_finite(u, "kernel_photon_count");
  if (n < 0) throw std::domain_error("kernel_photon_count: n must be >= 0");
  return std::polar(1.0, n * phase_diff(x, u, p));
}

std::complex<double> kernel_lossy(double x, double u, int n, double eta,
                                  std::complex<double> alpha, const SystemParams& p) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::domain_error("kernel_lossy: eta must lie in [0, 1]");
  return kernel_photon_count(x, u, n, p) *
         std::exp(-(1.0 - eta) * std::norm(alpha) * coherent_exponent_unit(x, u, p));
}

std::complex<double> kernel_baseline(double x, double u, const BaselineInput& input,
                                     const SystemParams& p) {
  check_finite(x, "kernel_baseline");
  check_finite(u, "kernel_baseline");
  // Linearized phase: f_lin = e^{i(mu x + 2 delta)}, so
  // f_lin(x-u/2) f_lin*(x+u/2) = e^{-i mu u} independent of x and delta.
  const cd w = std::polar(1.0, -p.mu * u);
  if (const auto* c = std::get_if<CoherentInput>(&input))
    return std::exp(-std::norm(c->alpha) * (1.0 - w));
  const auto& s = std::get<SqueezedVacInput>(input);
  const double t = std::tanh(s.r_l);
  return 1.0 / (std::cosh(s.r_l) * std::sqrt(1.0 - t * t * w * w));
}

std::complex<double> kernel_value(const KernelSpec& spec, double x, double u) {
  return std::visit(
      [&](const auto& v) -> cd {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DeterministicCoherent>)
          return kernel_coherent(x, u, v.alpha, spec.params);
        else if constexpr (std::is_same_v<T, DeterministicSqueezedVac>)
          return kernel_squeezed_vacuum(x, u, v.r_l, spec.params);
        else if constexpr (std::is_same_v<T, PhotonCount>)
          return kernel_photon_count(x, u, v.n, spec.params);
        else if constexpr (std::is_same_v<T, LossyPhotonCount>)
          return kernel_lossy(x, u, v.n, v.eta, v.alpha, spec.params);
        else
          return kernel_baseline(x, u, v.input, spec.params);
      },
      spec.variant);
}

void kernel_column(const KernelSpec& spec, double x, std::span<const double> u,
                   std::span<std::complex<double>> out) {
  if (out.size() != u.size())
    throw std::invalid_argument("kernel_column: output span size mismatch");
  const auto* sq = std::get_if<DeterministicSqueezedVac>(&spec.variant);
  if (sq == nullptr) {
    for (std::size_t k = 0; k < u.size(); ++k) out[k] = kernel_value(spec, x, u[k]);
    return;
  }

  // Branch-tracked square root, swept outward from u = 0 where the argument
  // is real and positive. The tracked argument accumulates winding; crossing
  // the negative real axis flips the root sign.
  const double ch = std::cosh(sq->r_l);
  auto arg_at = [&](double uu) { return squeezed_sqrt_argument(x, uu, sq->r_l, spec.params); };

  auto sweep = [&](std::ptrdiff_t first, std::ptrdiff_t last, std::ptrdiff_t step) {
    cd prev = arg_at(0.0);
    double theta = std::arg(prev);  // real positive at u = 0
    for (std::ptrdiff_t k = first; k != last; k += step) {
      const cd cur = arg_at(u[k]);
      const double dtheta = std::arg(cur / prev);
      // Increments approaching pi are ambiguous between the two ways around
      // the origin; the argument lives in the right half plane, so a genuine
      // step never gets this large.
      if (std::abs(dtheta) > 0.95 * std::numbers::pi)
        throw accuracy_fault("kernel_column: branch tracking lost (u sweep too coarse)");
      theta += dtheta;
      out[k] = 1.0 / (ch * std::polar(std::sqrt(std::abs(cur)), theta / 2.0));
      prev = cur;
    }
  };

  // First node with u >= 0 (u ascends).
  const auto n = static_cast<std::ptrdiff_t>(u.size());
  std::ptrdiff_t split = std::lower_bound(u.begin(), u.end(), 0.0) - u.begin();
  sweep(split, n, +1);
  sweep(split - 1, static_cast<std::ptrdiff_t>(-1), -1);
}

double heralding_probability(int n, double eta, std::complex<double> alpha) {
  if (n < 0) throw std::domain_error("heralding_probability: n must be >= 0");
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::domain_error("heralding_probability: eta must lie in [0, 1]");
  const double m = eta * std::norm(alpha);
  if (m == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(-m + n * std::log(m) - std::lgamma(n + 1.0));
}

HeraldingOptimum max_heralding(int n, InputKind kind) {
  if (n < 0) throw std::domain_error("max_heralding: n must be >= 0");
  if (kind == InputKind::Coherent) {
    if (n == 0) return {0.0, 1.0};
    const double pmax = std::exp(-n + n * std::log(double(n)) - std::lgamma(n + 1.0));
    return {std::sqrt(double(n)), pmax};
  }
  if (n % 2 == 1) return {0.0, 0.0};
  if (n == 0) return {0.0, 1.0};
  // sinh^2 r = n maximizes P_n for even n.
  const double r = std::asinh(std::sqrt(double(n)));
  const double m = n / 2;
  const double logp = -0.5 * std::log(1.0 + n) +
                      n * std::log(0.5 * std::sqrt(n / (1.0 + n))) +
                      std::lgamma(n + 1.0) - 2.0 * std::lgamma(m + 1.0);
  return {r, std::exp(logp)};
}

double input_weight(const BaselineInput& input, int n) {
  if (n < 0) throw std::domain_error("input_weight: n must be >= 0");
  if (const auto* c = std::get_if<CoherentInput>(&input))
    return heralding_probability(n, 1.0, c->alpha);
  const auto& s = std::get<SqueezedVacInput>(input);
  if (n % 2 == 1) return 0.0;
  if (s.r_l == 0.0) return n == 0 ? 1.0 : 0.0;
  const int m = n / 2;
  const double logp = -std::log(std::cosh(s.r_l)) +
                      n * std::log(0.5 * std::tanh(s.r_l)) +
                      std::lgamma(n + 1.0) - 2.0 * std::lgamma(m + 1.0);
  return std::exp(logp);
}

}  // namespace cavwig
