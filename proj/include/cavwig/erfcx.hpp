#pragma once

#include <complex>

namespace cavwig {

/// Scaled complementary error function exp(z^2) erfc(z) for complex z.
///
/// Bounded and accurate for Re z >= 0. For Re z < 0 the reflection
/// erfcx(z) = 2 exp(z^2) - erfcx(-z) is applied and the result can
/// legitimately overflow for large |z|; callers that need the Re z < 0
/// regime should keep the exp(z^2) factor in log space themselves.
std::complex<double> erfcx(std::complex<double> z);

/// erfcx restricted to Re z >= 0 (throws std::domain_error otherwise).
std::complex<double> erfcx_right_halfplane(std::complex<double> z);

}  // namespace cavwig
