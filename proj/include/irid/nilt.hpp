#pragma once

// Numerical inverse Laplace transform by FFT summation of the Bromwich
// integral (Dubner-Abate / Durbin family).
//
// With window T = 2 tm, damping abscissa c = alpha - ln(rel_err) / T and
// N = 2 m nodes s_n = c + j n 2pi/T, the samples t_k = k tm/m are
//
//     h(t_k) ~ e^(c t_k) / T * [ 2 Re( sum_n F(s_n) e^(j 2pi n k / N) ) - F(c) ]
//
// for k = 1..m. Only the first half of the periodic window is returned; the
// second half absorbs the aliased tail, whose weight is about rel_err.
// t = 0 is skipped because fractional integrators diverge there.
//
// The truncated sum converges only like 1/N for transforms decaying like 1/s,
// and the e^(c t) factor amplifies that error late in the window. Two linear
// corrections are applied by default: the sum runs over oversampling * N
// nodes (folded modulo N, so one N-point FFT still suffices), and each term
// is weighted by the Lanczos sigma factor sinc(n / (oversampling * N)), which
// averages out the Gibbs oscillation of the truncated series. With
// oversampling = 1 and sigma_factors = false the plain sum above is obtained.
// Both corrections keep the result linear in F.
//
// Accuracy is only claimed on [dt, 0.8 tm]; the last 20% of the returned
// window is more exposed to aliasing.

#include <complex>
#include <cstddef>
#include <functional>

#include "irid/lti.hpp"

namespace irid::nilt {

using Complex = std::complex<double>;
using LaplaceFunction = std::function<Complex(Complex)>;

struct NiltConfig {
    /// End of the returned window, seconds.
    double tm = 1.0;
    /// Number of returned samples; a power of two, at least 64.
    std::size_t samples = 1024;
    /// Shift of the Bromwich line, must exceed the real part of every
    /// singularity of F.
    double alpha = 0.0;
    /// Target aliasing error, in (0, 1).
    double rel_err = 1e-8;
    /// Nodes summed per FFT bin, in [1, 256].
    std::size_t oversampling = 16;
    /// Lanczos sigma weighting of the truncated series.
    bool sigma_factors = true;

    double dt() const noexcept { return tm / static_cast<double>(samples); }

    /// Throws ConfigError.
    void validate() const;
};

/// Samples of the inverse transform of f at t_k = k dt, k = 1..samples.
/// f must be analytic for Re s > alpha and satisfy f(conj s) = conj f(s).
/// Throws ConfigError or EvaluationError (f returned NaN/Inf).
lti::TimeSeries invert(const LaplaceFunction& f, const NiltConfig& cfg);

/// Largest imaginary part of the two-sided reconstruction (which also
/// evaluates f on the conjugate nodes), relative to the peak |h|. Near
/// machine precision for conjugate-symmetric f; large otherwise.
double realness_residue(const LaplaceFunction& f, const NiltConfig& cfg);

}  // namespace irid::nilt
