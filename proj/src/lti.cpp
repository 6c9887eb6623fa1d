#include "irid/lti.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include "ddouble.hpp"
#include "irid/diagnostics.hpp"
#include "irid/error.hpp"

namespace irid::lti {
namespace {

bool all_finite(std::span<const double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double x) { return std::isfinite(x); });
}

Complex derivative_at(std::span<const double> c, Complex x) {
    const std::size_t n = c.size() - 1;
    Complex acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc = acc * x + c[i] * static_cast<double>(n - i);
    return acc;
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ValidationError("polynomial needs at least one coefficient");
    if (!all_finite(coeffs_)) throw ValidationError("polynomial coefficients must be finite");
}

Polynomial Polynomial::normalized() const {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](double c) { return c != 0.0; });
    if (first == coeffs_.end()) return Polynomial({0.0});
    return Polynomial(std::vector<double>(first, coeffs_.end()));
}

bool Polynomial::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

// Horner with a double-double accumulator. Fitted denominators have roots
// clustered near z = 1 and cancel to many digits when evaluated there.
Complex Polynomial::operator()(Complex x) const noexcept {
    using detail::Dd;
    Dd re, im;
    for (double c : coeffs_) {
        const Dd next_re = re * x.real() - im * x.imag() + Dd{c, 0.0};
        const Dd next_im = re * x.imag() + im * x.real();
        re = next_re;
        im = next_im;
    }
    return {re.value(), im.value()};
}

double Polynomial::operator()(double x) const noexcept {
    detail::Dd acc;
    for (double c : coeffs_) acc = acc * x + detail::Dd{c, 0.0};
    return acc.value();
}

Polynomial Polynomial::scaled(double factor) const {
    std::vector<double> out(coeffs_);
    for (double& c : out) c *= factor;
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.size(), b.size());
    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) out[n - a.size() + i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[n - b.size() + i] += b[i];
    return Polynomial(std::move(out));
}

Complex poly_eval(const Polynomial& p, Complex x) noexcept { return p(x); }

std::vector<Complex> poly_roots(const Polynomial& p) {
    const Polynomial q = p.normalized();
    if (q.degree() == 0) throw DegreeError("cannot take roots of a constant polynomial");

    auto c = q.coeffs();
    std::vector<Complex> roots;
    roots.reserve(q.degree());

    // Trailing zeros are exact roots at the origin.
    std::size_t last = c.size();
    while (last > 1 && c[last - 1] == 0.0) {
        roots.emplace_back(0.0, 0.0);
        --last;
    }
    const auto reduced = c.first(last);
    const std::size_t n = reduced.size() - 1;
    if (n == 0) return roots;
    if (n == 1) {
        roots.emplace_back(-reduced[1] / reduced[0], 0.0);
        return roots;
    }

    // Eigen wants ascending order.
    Eigen::VectorXd ascending(n + 1);
    for (std::size_t i = 0; i <= n; ++i) ascending[static_cast<Eigen::Index>(i)] = reduced[n - i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(ascending);

    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
        Complex r = solver.roots()[i];
        Complex value = q(r);
        for (int step = 0; step < 3 && std::abs(value) > 0.0; ++step) {
            const Complex slope = derivative_at(c, r);
            if (slope == Complex(0.0)) break;
            const Complex candidate = r - value / slope;
            const Complex candidate_value = q(candidate);
            if (!std::isfinite(std::abs(candidate_value)) ||
                std::abs(candidate_value) >= std::abs(value))
                break;
            r = candidate;
            value = candidate_value;
        }
        roots.push_back(r);
    }
    return roots;
}

Polynomial poly_from_roots(std::span<const Complex> roots) {
    std::vector<Complex> acc{1.0};
    for (const Complex& r : roots) {
        std::vector<Complex> next(acc.size() + 1, 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i];
            next[i + 1] -= acc[i] * r;
        }
        acc = std::move(next);
    }
    std::vector<double> out(acc.size());
    std::transform(acc.begin(), acc.end(), out.begin(), [](Complex v) { return v.real(); });
    return Polynomial(std::move(out));
}

namespace {

std::pair<Polynomial, Polynomial> make_monic(const Polynomial& num, const Polynomial& den) {
    const Polynomial d = den.normalized();
    if (d.is_zero()) throw ValidationError("transfer function denominator is identically zero");
    const double lead = d.leading();
    auto divide = [lead](const Polynomial& p) {
        std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
        for (double& v : c) v /= lead;
        return Polynomial(std::move(c));
    };
    return {divide(num), divide(d)};
}

}  // namespace

DiscreteTransferFunction::DiscreteTransferFunction(Polynomial num, Polynomial den, double ts)
    : num_(std::move(num)), den_(std::move(den)), ts_(ts) {
    if (!(ts > 0.0) || !std::isfinite(ts))
        throw ValidationError("sample period must be positive and finite");
    std::tie(num_, den_) = make_monic(num_, den_);
}

ContinuousTransferFunction::ContinuousTransferFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    std::tie(num_, den_) = make_monic(num_.normalized(), den_);
}

double ContinuousTransferFunction::direct_term() const {
    const Polynomial n = num_.normalized();
    if (n.is_zero() || n.degree() < den_.degree()) return 0.0;
    if (n.degree() > den_.degree())
        throw DegreeError("improper continuous transfer function has no finite direct term");
    return n.leading();  // den is monic
}

TimeSeries::TimeSeries(double t0, double dt, std::vector<double> values)
    : t0_(t0), dt_(dt), values_(std::move(values)) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("time step must be positive");
    if (!std::isfinite(t0)) throw ValidationError("start time must be finite");
    if (!all_finite(values_)) throw ValidationError("time series values must be finite");
}

TimeSeries TimeSeries::head(std::size_t n) const {
    n = std::min(n, values_.size());
    return TimeSeries(t0_, dt_, std::vector<double>(values_.begin(), values_.begin() + n));
}

TimeSeries TimeSeries::scaled(double factor) const {
    std::vector<double> out(values_);
    for (double& v : out) v *= factor;
    return TimeSeries(t0_, dt_, std::move(out));
}

FrequencyGrid::FrequencyGrid(std::vector<double> omegas) : omegas_(std::move(omegas)) {
    if (omegas_.empty()) throw ValidationError("frequency grid is empty");
    for (std::size_t i = 0; i < omegas_.size(); ++i) {
        if (!(omegas_[i] > 0.0) || !std::isfinite(omegas_[i]))
            throw ValidationError("grid frequencies must be positive and finite");
        if (i > 0 && !(omegas_[i] > omegas_[i - 1]))
            throw ValidationError("grid frequencies must be strictly increasing");
    }
}

FrequencyGrid FrequencyGrid::logspace(double wmin, double wmax, std::size_t n) {
    if (n == 0) throw ValidationError("frequency grid needs at least one point");
    if (!(wmin > 0.0)) throw ValidationError("wmin must be positive");
    if (n == 1) return FrequencyGrid({wmin});
    if (!(wmin < wmax)) throw ValidationError("wmin must be below wmax");
    const double lo = std::log10(wmin);
    const double step = (std::log10(wmax) - lo) / static_cast<double>(n - 1);
    std::vector<double> w(n);
    w.front() = wmin;
    for (std::size_t i = 1; i + 1 < n; ++i) w[i] = std::pow(10.0, lo + step * static_cast<double>(i));
    w.back() = wmax;
    return FrequencyGrid(std::move(w));
}

FrequencyResponseSeries::FrequencyResponseSeries(FrequencyGrid grid, std::vector<Complex> response)
    : grid_(std::move(grid)), response_(std::move(response)) {
    if (grid_.size() != response_.size())
        throw ValidationError("frequency response length does not match its grid");
}

std::vector<double> FrequencyResponseSeries::magnitude_db() const {
    std::vector<double> out(response_.size());
    std::transform(response_.begin(), response_.end(), out.begin(),
                   [](Complex h) { return 20.0 * std::log10(std::abs(h)); });
    return out;
}

std::vector<double> FrequencyResponseSeries::phase_deg() const {
    std::vector<double> raw(response_.size());
    std::transform(response_.begin(), response_.end(), raw.begin(),
                   [](Complex h) { return std::arg(h); });
    auto out = unwrap(raw);
    for (double& p : out) p *= 180.0 / std::numbers::pi;
    return out;
}

std::vector<double> unwrap(std::span<const double> radians) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> out(radians.begin(), radians.end());
    double offset = 0.0;
    for (std::size_t i = 1; i < out.size(); ++i) {
        double delta = radians[i] - radians[i - 1];
        offset += std::remainder(delta, two_pi) - delta;
        out[i] = radians[i] + offset;
    }
    return out;
}

TimeSeries discrete_impulse(const DiscreteTransferFunction& g, std::size_t n) {
    if (n == 0) throw ValidationError("impulse response length must be at least 1");
    // Coefficient lists are aligned at their leading entries, i.e. read as
    // coefficients of z^0, z^-1, ... in the difference equation. For equal
    // numerator and denominator degree this is the same as descending powers.
    auto b = g.num().coeffs();
    auto a = g.den().coeffs();
    std::vector<double> y(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = k < b.size() ? b[k] : 0.0;
        const std::size_t lim = std::min(a.size() - 1, k);
        for (std::size_t i = 1; i <= lim; ++i) acc -= a[i] * y[k - i];
        y[k] = acc;  // a[0] == 1
    }
    return TimeSeries(0.0, g.ts(), std::move(y));
}

namespace {

template <typename Eval>
FrequencyResponseSeries evaluate_on(const FrequencyGrid& grid, Eval&& eval) {
    std::vector<Complex> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto [n, d] = eval(grid[i]);
        if (!(std::abs(d) >= 1e-300)) {
            std::ostringstream msg;
            msg << "denominator vanishes at omega = " << grid[i];
            throw DenominatorZero(msg.str());
        }
        out[i] = n / d;
    }
    return FrequencyResponseSeries(grid, std::move(out));
}

}  // namespace

FrequencyResponseSeries discrete_freq_response(const DiscreteTransferFunction& g,
                                               const FrequencyGrid& grid) {
    const double nyquist = std::numbers::pi / g.ts();
    if (grid[grid.size() - 1] >= nyquist) {
        std::ostringstream msg;
        msg << "frequency grid reaches " << grid[grid.size() - 1]
            << " rad/s, at or above the Nyquist frequency " << nyquist << " rad/s";
        warn(msg.str());
    }
    return evaluate_on(grid, [&](double w) {
        const Complex z = std::polar(1.0, w * g.ts());
        return std::pair{g.num()(z), g.den()(z)};
    });
}

FrequencyResponseSeries continuous_freq_response(const ContinuousTransferFunction& g,
                                                 const FrequencyGrid& grid) {
    return evaluate_on(grid, [&](double w) {
        const Complex s(0.0, w);
        return std::pair{g.num()(s), g.den()(s)};
    });
}

StabilityReport is_stable_discrete(const DiscreteTransferFunction& g) {
    if (g.den().degree() == 0) return {true, 1.0};
    double largest = 0.0;
    for (const Complex& r : poly_roots(g.den())) largest = std::max(largest, std::abs(r));
    return {largest < 1.0, 1.0 - largest};
}

}  // namespace irid::lti
