#include "cavwig/erfcx.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cavwig {
namespace {

using cd = std::complex<double>;

constexpr double kInvSqrtPi = 0.56418958354775628695;

// Weideman rational approximation of the Faddeeva function w(t), Im t >= 0
// (SIAM J. Numer. Anal. 31, 1497 (1994)). Degree-N polynomial coefficients
// computed once by a direct DFT of f(theta) = exp(-t^2)(L^2 + t^2) sampled
// on the tangent grid.
constexpr int kWeidemanN = 64;

struct WeidemanTable {
  double L;
  std::array<double, kWeidemanN> a;  // a[0] multiplies Z^(N-1) (polyval order)

  WeidemanTable() {
    const int N = kWeidemanN, M = 2 * N, M2 = 2 * M;
    L = std::sqrt(N / std::sqrt(2.0));
    std::vector<double> fs(M2, 0.0);
    // f = [0; exp(-t^2)(L^2+t^2)] over k = -M+1..M-1, then fftshift.
    // index into the length-M2 DFT input after the shift:
    for (int k = -M + 1; k <= M - 1; ++k) {
      const double theta = k * std::numbers::pi / M;
      const double t = L * std::tan(theta / 2.0);
      const double f = std::exp(-t * t) * (L * L + t * t);
      const int pos = k + M;          // position in [0, f] layout: 1..2M-1
      const int shifted = (pos + M) % M2;  // fftshift of length M2
      fs[shifted] = f;
    }
    // a_q = Re(DFT(fs))[q] / M2 for q = 1..N, reversed into polyval order.
    for (int q = 1; q <= N; ++q) {
      double acc = 0.0;
      for (int m = 0; m < M2; ++m)
        acc += fs[m] * std::cos(2.0 * std::numbers::pi * q * m / M2);
      a[N - q] = acc / M2;
    }
  }
};

// w(t) for Im t >= 0.
cd faddeeva_upper(cd t) {
  static const WeidemanTable tab;
  const double L = tab.L;
  const cd iL(0.0, 1.0);
  const cd denom = L - iL * t;  // L - i t
  const cd Z = (L + iL * t) / denom;
  cd p = 0.0;
  for (int j = 0; j < kWeidemanN; ++j) p = p * Z + tab.a[j];
  return 2.0 * p / (denom * denom) + kInvSqrtPi / denom;
}

// Laplace continued fraction for erfcx, Re z > 0, |z| large.
cd erfcx_cf(cd z) {
  cd t = z;
  for (int k = 30; k >= 1; --k) t = z + (0.5 * k) / t;
  return kInvSqrtPi / t;
}

}  // namespace

std::complex<double> erfcx_right_halfplane(std::complex<double> z) {
  if (z.real() < 0.0)
    throw std::domain_error("erfcx_right_halfplane: Re z < 0");
  if (std::norm(z) >= 400.0) return erfcx_cf(z);
  // erfcx(z) = w(i z); Im(i z) = Re z >= 0.
  return faddeeva_upper(cd(-z.imag(), z.real()));
}

std::complex<double> erfcx(std::complex<double> z) {
  if (z.real() >= 0.0) return erfcx_right_halfplane(z);
  return 2.0 * std::exp(z * z) - erfcx_right_halfplane(-z);
}

}  // namespace cavwig
