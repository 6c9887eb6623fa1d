#pragma once

// Polynomials and single-input single-output rational transfer functions.
//
// Coefficient ordering throughout the library is DESCENDING powers, leading
// coefficient first:
//
//     [c0, c1, ..., cn]  <->  c0 x^n + c1 x^(n-1) + ... + cn
//
// This matches the way transfer functions are usually written by hand, e.g.
// (a1 z^5 + ... + a6) / (z^5 + b1 z^4 + ... + b5). Note that many DSP
// libraries use ascending powers of z^-1 instead; for equal-degree numerator
// and denominator the two lists coincide.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace irid::lti {

using Complex = std::complex<double>;

class Polynomial {
public:
    /// Throws ValidationError for an empty list or non-finite coefficients.
    explicit Polynomial(std::vector<double> coeffs);

    std::span<const double> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    double leading() const noexcept { return coeffs_.front(); }
    double operator[](std::size_t i) const { return coeffs_[i]; }

    /// Strips leading zeros; the zero polynomial normalizes to [0].
    Polynomial normalized() const;

    bool is_zero() const noexcept;

    /// Compensated Horner evaluation, about as accurate as plain Horner in
    /// twice the working precision.
    Complex operator()(Complex x) const noexcept;
    double operator()(double x) const noexcept;

    Polynomial scaled(double factor) const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<double> coeffs_;
};

/// Horner evaluation.
Complex poly_eval(const Polynomial& p, Complex x) noexcept;

/// All roots of p (after normalization), via eigenvalues of the companion
/// matrix followed by Newton polishing. Throws DegreeError for constants.
std::vector<Complex> poly_roots(const Polynomial& p);

/// Polynomial with the given roots and leading coefficient 1. Complex roots
/// must come in conjugate pairs; the imaginary residue is discarded.
Polynomial poly_from_roots(std::span<const Complex> roots);

/// H(z) = num(z) / den(z) with sample period ts. The denominator is made
/// monic on construction (num and den are divided by den's leading
/// coefficient after stripping leading zeros).
class DiscreteTransferFunction {
public:
    DiscreteTransferFunction(Polynomial num, Polynomial den, double ts);

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }
    double ts() const noexcept { return ts_; }

    Complex operator()(Complex z) const noexcept { return num_(z) / den_(z); }

private:
    Polynomial num_;
    Polynomial den_;
    double ts_;
};

/// H(s) = num(s) / den(s), monic denominator.
class ContinuousTransferFunction {
public:
    ContinuousTransferFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    Complex operator()(Complex s) const noexcept { return num_(s) / den_(s); }

    /// Limit of H(s) as |s| -> infinity (zero unless strictly improper).
    /// Throws DegreeError if deg(num) > deg(den).
    double direct_term() const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// Uniformly sampled real signal; sample k sits at t0 + k * dt.
class TimeSeries {
public:
    /// Throws ValidationError if dt <= 0 or any value is non-finite.
    TimeSeries(double t0, double dt, std::vector<double> values);

    double t0() const noexcept { return t0_; }
    double dt() const noexcept { return dt_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t k) const { return values_[k]; }
    double time(std::size_t k) const noexcept { return t0_ + static_cast<double>(k) * dt_; }

    /// The first n samples (n is clamped to size()).
    TimeSeries head(std::size_t n) const;
    TimeSeries scaled(double factor) const;

private:
    double t0_;
    double dt_;
    std::vector<double> values_;
};

/// Angular frequencies in rad/s, strictly increasing and positive.
class FrequencyGrid {
public:
    explicit FrequencyGrid(std::vector<double> omegas);

    /// n points log-spaced over [wmin, wmax], endpoints included exactly.
    static FrequencyGrid logspace(double wmin, double wmax, std::size_t n);

    std::span<const double> omegas() const noexcept { return omegas_; }
    std::size_t size() const noexcept { return omegas_.size(); }
    double operator[](std::size_t i) const { return omegas_[i]; }

    friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;

private:
    std::vector<double> omegas_;
};

class FrequencyResponseSeries {
public:
    FrequencyResponseSeries(FrequencyGrid grid, std::vector<Complex> response);

    const FrequencyGrid& grid() const noexcept { return grid_; }
    std::span<const Complex> response() const noexcept { return response_; }
    std::size_t size() const noexcept { return response_.size(); }
    Complex operator[](std::size_t i) const { return response_[i]; }

    /// 20 log10 |H|.
    std::vector<double> magnitude_db() const;
    /// Phase in degrees, unwrapped along the grid starting from the
    /// principal value at the first point.
    std::vector<double> phase_deg() const;

private:
    FrequencyGrid grid_;
    std::vector<Complex> response_;
};

/// Unwraps a phase sequence in radians so that successive differences lie
/// in (-pi, pi].
std::vector<double> unwrap(std::span<const double> radians);

/// Response of the difference equation den * y = num * x to x = delta[0],
/// zero initial state. The series starts at t0 = 0 with dt = g.ts().
TimeSeries discrete_impulse(const DiscreteTransferFunction& g, std::size_t n);

/// H(e^{j w ts}) at each grid point. Points above Nyquist produce a warning
/// and are still evaluated.
FrequencyResponseSeries discrete_freq_response(const DiscreteTransferFunction& g,
                                               const FrequencyGrid& grid);

FrequencyResponseSeries continuous_freq_response(const ContinuousTransferFunction& g,
                                                 const FrequencyGrid& grid);

struct StabilityReport {
    bool stable;
    /// 1 - max |pole|; negative when unstable.
    double margin;
};

StabilityReport is_stable_discrete(const DiscreteTransferFunction& g);

}  // namespace irid::lti
