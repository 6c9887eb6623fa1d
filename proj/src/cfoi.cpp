#include "irid/cfoi.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "irid/error.hpp"
#include "irid/special.hpp"

namespace irid::cfoi {

CfoiParams::CfoiParams(double lambda, double mu, double wgc)
    : lambda_(lambda), mu_(mu), wgc_(wgc) {
    if (!(lambda > 0.0 && lambda < 2.0)) {
        std::ostringstream msg;
        msg << "lambda = " << lambda << " is outside the valid range (0, 2)";
        throw ParamError(msg.str());
    }
    if (!(mu > -1.0 && mu <= 0.0)) {
        std::ostringstream msg;
        msg << "mu = " << mu << " is outside the valid range (-1, 0]";
        throw ParamError(msg.str());
    }
    if (!(wgc > 0.0) || !std::isfinite(wgc)) {
        std::ostringstream msg;
        msg << "wgc = " << wgc << " must be a positive frequency in rad/s";
        throw ParamError(msg.str());
    }
}

Complex transfer(const CfoiParams& p, Complex s) {
    if (s == Complex(0.0)) throw SingularInput("CFOI transfer function is singular at s = 0");
    const Complex log_ratio = std::log(p.wgc() / s);
    return std::exp(p.lambda() * log_ratio) * std::cos(p.mu() * log_ratio);
}

Complex freq_response(const CfoiParams& p, double omega) {
    if (!(omega > 0.0)) throw DomainError("frequency must be positive");
    const double half_pi = 0.5 * std::numbers::pi;
    const double scale = std::pow(p.wgc() / omega, p.lambda());
    const double log_ratio = std::log(p.wgc() / omega);

    // cos(mu ln(wgc / (j w))) = A + jB,  j^lambda = C + jD,  C^2 + D^2 = 1
    const double a = std::cosh(p.mu() * half_pi) * std::cos(p.mu() * log_ratio);
    const double b = std::sinh(p.mu() * half_pi) * std::sin(p.mu() * log_ratio);
    const double c = std::cos(p.lambda() * half_pi);
    const double d = std::sin(p.lambda() * half_pi);

    return {scale * (a * c + b * d), scale * (b * c - a * d)};
}

lti::FrequencyResponseSeries freq_response(const CfoiParams& p, const lti::FrequencyGrid& grid) {
    std::vector<Complex> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = freq_response(p, grid[i]);
    return lti::FrequencyResponseSeries(grid, std::move(out));
}

double analytic_impulse(const CfoiParams& p, double t) {
    if (!(t > 0.0)) throw DomainError("analytic impulse response is defined for t > 0 only");
    const Complex nu(p.lambda(), p.mu());
    // wgc^nu t^(nu - 1) / Gamma(nu), assembled in log space.
    const Complex log_value = nu * std::log(p.wgc()) + (nu - 1.0) * std::log(t) - special::lgamma(nu);
    return std::exp(log_value).real();
}

}  // namespace irid::cfoi
