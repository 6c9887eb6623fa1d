#include "irid/nilt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "irid/error.hpp"

namespace irid::nilt {
namespace {

constexpr std::size_t max_oversampling = 256;

struct Nodes {
    std::size_t n;      // FFT length, 2 * samples
    std::size_t count;  // nodes summed, oversampling * n
    double period;      // T = 2 tm
    double abscissa;    // c
    double spacing;     // 2 pi / T
};

Nodes make_nodes(const NiltConfig& cfg) {
    Nodes nodes{};
    nodes.n = 2 * cfg.samples;
    nodes.count = cfg.oversampling * nodes.n;
    nodes.period = 2.0 * cfg.tm;
    nodes.abscissa = cfg.alpha - std::log(cfg.rel_err) / nodes.period;
    nodes.spacing = 2.0 * std::numbers::pi / nodes.period;
    return nodes;
}

Complex evaluate(const LaplaceFunction& f, Complex s) {
    const Complex v = f(s);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        std::ostringstream msg;
        msg << "transform returned a non-finite value at s = " << s.real() << (s.imag() < 0 ? "-" : "+")
            << std::abs(s.imag()) << "j";
        throw EvaluationError(msg.str());
    }
    return v;
}

// Lanczos sigma factor sin(pi x) / (pi x), x = n / count.
double sigma(std::size_t n, std::size_t count) {
    if (n == 0) return 1.0;
    const double x = std::numbers::pi * static_cast<double>(n) / static_cast<double>(count);
    return std::sin(x) / x;
}

// Weighted node values folded modulo n, since e^{j 2 pi (i + r n) k / n}
// does not depend on r. Accumulated in increasing node order.
std::vector<Complex> folded_values(const LaplaceFunction& f, const NiltConfig& cfg, const Nodes& nodes,
                                   bool conjugate) {
    std::vector<Complex> folded(nodes.n, Complex(0.0));
    for (std::size_t i = 0; i < nodes.count; ++i) {
        Complex s(nodes.abscissa, static_cast<double>(i) * nodes.spacing);
        if (conjugate) {
            if (i == 0) continue;
            s = std::conj(s);
        }
        Complex v = evaluate(f, s);
        if (cfg.sigma_factors) v *= sigma(i, nodes.count);
        folded[i % nodes.n] += v;
    }
    return folded;
}

}  // namespace

void NiltConfig::validate() const {
    if (!(tm > 0.0) || !std::isfinite(tm)) throw ConfigError("tm must be positive and finite");
    if (samples < 64 || !std::has_single_bit(samples))
        throw ConfigError("sample count must be a power of two and at least 64");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be finite and >= 0");
    if (!(rel_err > 0.0 && rel_err < 1.0)) throw ConfigError("rel_err must lie in (0, 1)");
    if (oversampling < 1 || oversampling > max_oversampling)
        throw ConfigError("oversampling must lie in [1, 256]");
}

lti::TimeSeries invert(const LaplaceFunction& f, const NiltConfig& cfg) {
    cfg.validate();
    const Nodes nodes = make_nodes(cfg);
    const std::vector<Complex> folded = folded_values(f, cfg, nodes, false);
    const double f_c = evaluate(f, Complex(nodes.abscissa, 0.0)).real();

    std::vector<Complex> sums;
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    fft.inv(sums, folded);  // sum_n w_n F(s_n) e^{+j 2 pi n k / N}

    const double dt = cfg.dt();
    std::vector<double> out(cfg.samples);
    for (std::size_t k = 1; k <= cfg.samples; ++k) {
        const double t = static_cast<double>(k) * dt;
        out[k - 1] = std::exp(nodes.abscissa * t) / nodes.period * (2.0 * sums[k].real() - f_c);
    }
    return lti::TimeSeries(dt, dt, std::move(out));
}

double realness_residue(const LaplaceFunction& f, const NiltConfig& cfg) {
    cfg.validate();
    const Nodes nodes = make_nodes(cfg);
    const std::vector<Complex> upper = folded_values(f, cfg, nodes, false);
    const std::vector<Complex> lower = folded_values(f, cfg, nodes, true);

    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<Complex> up, down;
    fft.inv(up, upper);    // positive frequencies, e^{+j...}
    fft.fwd(down, lower);  // negative frequencies, e^{-j...}

    const double dt = cfg.dt();
    double peak = 0.0, worst_imag = 0.0;
    for (std::size_t k = 1; k <= cfg.samples; ++k) {
        const double scale = std::exp(nodes.abscissa * static_cast<double>(k) * dt) / nodes.period;
        const Complex total = scale * (up[k] + down[k]);
        peak = std::max(peak, std::abs(total.real()));
        worst_imag = std::max(worst_imag, std::abs(total.imag()));
    }
    return peak > 0.0 ? worst_imag / peak : worst_imag;
}

}  // namespace irid::nilt
