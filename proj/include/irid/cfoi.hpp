#pragma once

// Complex fractional order integrator (CFOI).
//
// The ideal integrator 1 / s^(lambda + j mu) is not real-valued on the real
// axis. Its realizable form keeps the real part with respect to j:
//
//     G(s) = (wgc / s)^lambda * cos(mu * ln(wgc / s))
//
// which equals Re_j[(wgc / s)^(lambda + j mu)] and is conjugate symmetric, so
// its impulse response is real:
//
//     h(t) = Re[ wgc^nu t^(nu - 1) / Gamma(nu) ],   nu = lambda + j mu.

#include <complex>

#include "irid/lti.hpp"

namespace irid::cfoi {

using Complex = std::complex<double>;

/// Order (lambda + j mu) and gain-crossover frequency of one CFOI.
/// lambda in (0, 2), mu in (-1, 0], wgc > 0. mu == 0 is the real-order
/// limit; mu > 0 is rejected rather than interpreted.
class CfoiParams {
public:
    /// Throws ParamError when a value lies outside its range.
    CfoiParams(double lambda, double mu, double wgc);

    double lambda() const noexcept { return lambda_; }
    double mu() const noexcept { return mu_; }
    double wgc() const noexcept { return wgc_; }

private:
    double lambda_;
    double mu_;
    double wgc_;
};

/// G(s) by direct complex evaluation, principal-branch logarithm.
/// Throws SingularInput for s == 0.
Complex transfer(const CfoiParams& p, Complex s);

/// G(j omega) from the closed-form real and imaginary parts. This path never
/// evaluates a complex logarithm, so it is an independent check on transfer().
/// Throws DomainError for omega <= 0.
Complex freq_response(const CfoiParams& p, double omega);

lti::FrequencyResponseSeries freq_response(const CfoiParams& p, const lti::FrequencyGrid& grid);

/// Exact impulse response at t > 0 via the complex gamma function.
/// Throws DomainError for t <= 0.
double analytic_impulse(const CfoiParams& p, double t);

}  // namespace irid::cfoi
