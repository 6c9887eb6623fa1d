#include "irid/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "irid/diagnostics.hpp"
#include "irid/error.hpp"
#include "irid/nilt.hpp"
#include "irid/sysid.hpp"

namespace irid::pipeline {
namespace {

template <typename Fn>
auto in_stage(Stage stage, Fn&& fn) {
    try {
        return fn();
    } catch (const ValidationError&) {
        throw;
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(stage, e.what());
    }
}

double max_real_pole(const lti::ContinuousTransferFunction& g) {
    if (g.den().degree() == 0) return -std::numeric_limits<double>::infinity();
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& r : lti::poly_roots(g.den())) worst = std::max(worst, r.real());
    return worst;
}

ModelMetrics model_metrics(const lti::TimeSeries& ref, const lti::TimeSeries& model,
                           const lti::FrequencyResponseSeries& f_ref,
                           const lti::FrequencyResponseSeries& f_model, double tm) {
    const auto impulse = compare_impulse(validated_window(ref, tm), validated_window(model, tm));
    const auto freq = compare_frequency(f_ref, f_model);
    return {impulse.rel_l2, impulse.max_abs, freq.mag_max_err_db, freq.phase_max_err_deg};
}

}  // namespace

void IridRequest::validate() const {
    if (!(tm > 0.0) || !std::isfinite(tm)) throw ConfigError("tm must be positive and finite");
    if (!(wmin > 0.0) || !std::isfinite(wmin)) throw ConfigError("wmin must be positive");
    if (!(wmax > wmin) || !std::isfinite(wmax)) throw ConfigError("wmax must be finite and above wmin");
    if (norder < 1) throw ConfigError("norder must be at least 1");
    if (samples < 64 || !std::has_single_bit(samples))
        throw ConfigError("sample count must be a power of two and at least 64");
    if (samples < 6 * norder) throw ConfigError("sample count too small for the model order");
    if (npoints < 2) throw ConfigError("frequency grid needs at least 2 points");
    if (iterations < 1) throw ConfigError("iteration count must be at least 1");
    if (!(wmin < 0.9 * std::numbers::pi / dt()))
        throw ConfigError("wmin lies above 0.9 times the Nyquist frequency of dt = tm / samples");
}

lti::TimeSeries validated_window(const lti::TimeSeries& h, double tm) {
    const double limit = 0.8 * tm * (1.0 + 1e-12);
    std::size_t n = 0;
    while (n < h.size() && h.time(n) <= limit) ++n;
    return h.head(n);
}

ImpulseComparison compare_impulse(const lti::TimeSeries& a, const lti::TimeSeries& b) {
    if (a.size() != b.size() || a.t0() != b.t0() || a.dt() != b.dt())
        throw GridMismatch("impulse responses are sampled on different grids");
    double diff2 = 0.0, ref2 = 0.0, max_abs = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        diff2 += d * d;
        ref2 += a[k] * a[k];
        max_abs = std::max(max_abs, std::abs(d));
    }
    double rel = 0.0;
    if (diff2 > 0.0) rel = ref2 > 0.0 ? std::sqrt(diff2 / ref2) : std::numeric_limits<double>::infinity();
    return {rel, max_abs};
}

FrequencyComparison compare_frequency(const lti::FrequencyResponseSeries& a,
                                      const lti::FrequencyResponseSeries& b) {
    if (!(a.grid() == b.grid())) throw GridMismatch("frequency responses use different grids");
    std::vector<double> phase_diff(a.size());
    double mag = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double ma = std::abs(a[i]), mb = std::abs(b[i]);
        if (!(ma >= 1e-300) || !(mb >= 1e-300)) {
            std::ostringstream msg;
            msg << "zero magnitude at omega = " << a.grid()[i];
            throw ZeroMagnitude(msg.str());
        }
        mag = std::max(mag, std::abs(20.0 * std::log10(mb / ma)));
        phase_diff[i] = std::arg(b[i] / a[i]);
    }
    double phase = 0.0;
    for (double p : lti::unwrap(phase_diff)) phase = std::max(phase, std::abs(p));
    return {mag, phase * 180.0 / std::numbers::pi};
}

IridResult run_irid(const IridRequest& req) {
    req.validate();
    const double dt = req.dt();
    const double nyquist_cap = 0.9 * std::numbers::pi / dt;
    double wmax = req.wmax;
    if (wmax > nyquist_cap) {
        std::ostringstream msg;
        msg << "wmax = " << req.wmax << " rad/s clamped to " << nyquist_cap
            << " rad/s (0.9 x Nyquist for dt = " << dt << " s)";
        warn(msg.str());
        wmax = nyquist_cap;
    }

    nilt::NiltConfig cfg;
    cfg.tm = req.tm;
    cfg.samples = req.samples;

    const auto& params = req.params;
    lti::TimeSeries h_ref = in_stage(Stage::Nilt, [&] {
        return nilt::invert([&](lti::Complex s) { return cfoi::transfer(params, s); }, cfg);
    });

    // Impulse invariance: dt * h so that Gd(e^{j w dt}) approximates G(j w).
    sysid::FitConfig fit;
    fit.nb = req.norder;
    fit.na = req.norder;
    fit.iterations = req.iterations;
    lti::DiscreteTransferFunction gd =
        in_stage(Stage::Fit, [&] { return sysid::steiglitz_mcbride(h_ref.scaled(dt), fit); });

    lti::ContinuousTransferFunction gc =
        in_stage(Stage::Conversion, [&] { return sysid::bilinear_to_continuous(gd); });

    // Fitted sample n belongs to t = (n + 1) dt; relabel onto the h_ref grid.
    const auto raw = lti::discrete_impulse(gd, req.samples);
    lti::TimeSeries h_d(h_ref.t0(), dt, std::vector<double>(raw.values().begin(), raw.values().end()));
    h_d = h_d.scaled(1.0 / dt);

    // The direct term of gc is a Dirac at t = 0, outside the sampled window.
    lti::TimeSeries h_c = in_stage(Stage::Nilt, [&] {
        nilt::NiltConfig ccfg = cfg;
        ccfg.alpha = std::max(0.0, max_real_pole(gc));
        const double direct = gc.direct_term();
        return nilt::invert([&](lti::Complex s) { return gc(s) - direct; }, ccfg);
    });

    const auto grid = lti::FrequencyGrid::logspace(req.wmin, wmax, req.npoints);
    auto f_ref = cfoi::freq_response(params, grid);
    auto f_d = lti::discrete_freq_response(gd, grid);
    auto f_c = lti::continuous_freq_response(gc, grid);

    ComparisonMetrics metrics{model_metrics(h_ref, h_d, f_ref, f_d, req.tm),
                              model_metrics(h_ref, h_c, f_ref, f_c, req.tm)};
    const auto stability = lti::is_stable_discrete(gd);

    return IridResult{req,
                      wmax,
                      std::move(gd),
                      std::move(gc),
                      std::move(h_ref),
                      std::move(h_d),
                      std::move(h_c),
                      std::move(f_ref),
                      std::move(f_d),
                      std::move(f_c),
                      metrics,
                      stability};
}

}  // namespace irid::pipeline
