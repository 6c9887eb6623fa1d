#pragma once

// Impulse response invariant discretization (IRID) of a CFOI:
//
//   1. sample the CFOI impulse response by numerical inverse Laplace transform
//   2. fit a discrete rational model to dt * h with Steiglitz-McBride
//   3. map it to continuous time with the bilinear transform
//   4. compare impulse and frequency responses of all three systems

#include <cstddef>

#include "irid/cfoi.hpp"
#include "irid/lti.hpp"

namespace irid::pipeline {

struct IridRequest {
    cfoi::CfoiParams params;
    /// NILT window end, seconds. The sample period is derived: dt = tm / samples.
    double tm = 2.0;
    /// Comparison band, rad/s. wmax is clamped to 0.9 pi / dt with a warning.
    double wmin = 0.01;
    double wmax = 100.0;
    /// Numerator and denominator degree of the fitted models.
    std::size_t norder = 5;
    /// NILT sample count m (power of two, >= 64).
    std::size_t samples = 1024;
    /// Frequency grid size.
    std::size_t npoints = 200;
    /// Steiglitz-McBride passes.
    std::size_t iterations = 5;

    double dt() const noexcept { return tm / static_cast<double>(samples); }

    /// Throws ConfigError (CfoiParams validates itself on construction).
    void validate() const;
};

struct ImpulseComparison {
    /// ||a - b|| / ||a||, a is the reference.
    double rel_l2;
    double max_abs;
};

struct FrequencyComparison {
    double mag_max_err_db;
    double phase_max_err_deg;
};

struct ModelMetrics {
    double impulse_rel_l2;
    double impulse_max_abs;
    double mag_max_err_db;
    double phase_max_err_deg;
};

/// Metrics over [dt, 0.8 tm] in time and [wmin, wmax] in frequency.
struct ComparisonMetrics {
    ModelMetrics discrete;
    ModelMetrics continuous;
};

struct IridResult {
    IridRequest request;
    /// wmax after Nyquist clamping.
    double wmax_used;
    lti::DiscreteTransferFunction gd;
    lti::ContinuousTransferFunction gc;
    lti::TimeSeries h_ref;
    lti::TimeSeries h_d;
    lti::TimeSeries h_c;
    lti::FrequencyResponseSeries f_ref;
    lti::FrequencyResponseSeries f_d;
    lti::FrequencyResponseSeries f_c;
    ComparisonMetrics metrics;
    lti::StabilityReport stability;

    bool stable() const noexcept { return stability.stable; }
};

/// Runs the whole IRID chain. Validation problems throw ValidationError
/// subclasses before any computation; failures inside a stage are rethrown
/// as StageError carrying the stage.
IridResult run_irid(const IridRequest& req);

/// Throws GridMismatch unless t0, dt and length agree.
ImpulseComparison compare_impulse(const lti::TimeSeries& a, const lti::TimeSeries& b);

/// Largest |dB difference| and largest |unwrapped phase difference| in
/// degrees. Throws GridMismatch or ZeroMagnitude.
FrequencyComparison compare_frequency(const lti::FrequencyResponseSeries& a,
                                      const lti::FrequencyResponseSeries& b);

/// Leading part of h with t <= 0.8 tm, where NILT accuracy is validated.
lti::TimeSeries validated_window(const lti::TimeSeries& h, double tm);

}  // namespace irid::pipeline
