#pragma once

#include <complex>

namespace irid::special {

/// Principal branch of log Gamma(z), Lanczos approximation (g = 607/128,
/// 15 terms) with the reflection formula for Re z < 0.5. Relative accuracy
/// is around 1e-15 away from the poles at 0, -1, -2, ...
std::complex<double> lgamma(std::complex<double> z);

std::complex<double> gamma(std::complex<double> z);

/// 1 / Gamma(z); exactly zero at the poles.
std::complex<double> rgamma(std::complex<double> z);

}  // namespace irid::special
