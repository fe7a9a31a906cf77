#pragma once

#include <complex>
#include <span>
#include <variant>

#include "cavwig/system_params.hpp"

namespace cavwig {

// ---------------------------------------------------------------------------
// Kernel variants. Every kernel is the multiplicative factor K(x, u) inside
// the Wigner integral over the off-diagonal offset u, and satisfies
// K(x, 0) = 1 and K(x, -u) = conj(K(x, u)).
// ---------------------------------------------------------------------------

struct DeterministicCoherent {
  std::complex<double> alpha;
};

/// theta is the squeezing angle; the mechanical state is independent of it,
/// so it is accepted and ignored.
struct DeterministicSqueezedVac {
  double r_l = 0.0;
  double theta = 0.0;
};

struct PhotonCount {
  int n = 0;
};

/// n-photon detection behind a transmission-eta channel, coherent input only.
struct LossyPhotonCount {
  int n = 0;
  double eta = 1.0;
  std::complex<double> alpha;
};

struct CoherentInput {
  std::complex<double> alpha;
};
struct SqueezedVacInput {
  double r_l = 0.0;
  double theta = 0.0;
};
using BaselineInput = std::variant<CoherentInput, SqueezedVacInput>;

/// Interaction without the cavity response (phase linear in X): a statistical
/// mixture of momentum-displaced copies of the initial state.
struct BaselineNoCavity {
  BaselineInput input;
};

using KernelVariant = std::variant<DeterministicCoherent, DeterministicSqueezedVac,
                                   PhotonCount, LossyPhotonCount, BaselineNoCavity>;

struct KernelSpec {
  KernelVariant variant;
  SystemParams params;

  static KernelSpec make(KernelVariant v, SystemParams p);
};

// Pointwise kernel evaluations -------------------------------------------------

std::complex<double> kernel_coherent(double x, double u, std::complex<double> alpha,
                                     const SystemParams& p);

/// Closed form (cosh r)^-1 [1 - tanh^2 r (f(x-u/2) f*(x+u/2))^2]^{-1/2}.
/// The square-root argument has Re >= 1 - tanh^2 r > 0 for any finite r, so
/// the principal branch is the continuous one.
std::complex<double> kernel_squeezed_vacuum(double x, double u, double r_l,
                                            const SystemParams& p);

std::complex<double> kernel_photon_count(double x, double u, int n,
                                         const SystemParams& p);

std::complex<double> kernel_lossy(double x, double u, int n, double eta,
                                  std::complex<double> alpha, const SystemParams& p);

std::complex<double> kernel_baseline(double x, double u, const BaselineInput& input,
                                     const SystemParams& p);

/// Evaluate any kernel variant at a point.
std::complex<double> kernel_value(const KernelSpec& spec, double x, double u);

/// Evaluate a kernel along an ascending u sweep (one grid column). For the
/// squeezed-vacuum kernel the square-root branch is tracked continuously
/// outward from u = 0; a jump of the tracked argument by more than pi/2
/// between consecutive nodes raises accuracy_fault. Instantiate the sweep
/// per worker; it must not be shared mid-column.
void kernel_column(const KernelSpec& spec, double x, std::span<const double> u,
                   std::span<std::complex<double>> out);

// Heralding -----------------------------------------------------------------

/// P_n = e^{-eta |alpha|^2} (eta |alpha|^2)^n / n! for a coherent input
/// behind a transmission-eta channel.
double heralding_probability(int n, double eta, std::complex<double> alpha);

enum class InputKind { Coherent, SqueezedVacuum };

/// Drive setting that maximizes the n-photon heralding probability and the
/// probability attained there. Coherent: |alpha| = sqrt(n). Squeezed vacuum:
/// sinh^2 r = n for even n; odd n never heralds.
struct HeraldingOptimum {
  double drive = 0.0;        // |alpha| or r
  double probability = 0.0;
};
HeraldingOptimum max_heralding(int n, InputKind kind);

/// |c_n|^2 of the optical input in the number basis.
double input_weight(const BaselineInput& input, int n);

}  // namespace cavwig
