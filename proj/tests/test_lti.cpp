#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "irid/diagnostics.hpp"
#include "irid/error.hpp"
#include "irid/lti.hpp"

using namespace irid;
using namespace irid::lti;

namespace {

// Captures warnings for the lifetime of the guard.
struct WarningCapture {
    std::vector<std::string> messages;
    WarningSink previous;
    WarningCapture() {
        previous = set_warning_sink([this](std::string_view m) { messages.emplace_back(m); });
    }
    ~WarningCapture() { set_warning_sink(previous); }
};

bool contains_root(const std::vector<Complex>& roots, Complex r, double tol) {
    for (const auto& x : roots)
        if (std::abs(x - r) <= tol) return true;
    return false;
}

}  // namespace

TEST_CASE("Polynomial construction and normalization") {
    CHECK_THROWS_AS(Polynomial({}), ValidationError);
    CHECK_THROWS_AS(Polynomial({1.0, NAN}), ValidationError);
    CHECK(Polynomial({0.0, 0.0, 3.0, 1.0}).normalized() == Polynomial({3.0, 1.0}));
    CHECK(Polynomial({0.0, 0.0}).normalized() == Polynomial({0.0}));
    CHECK(Polynomial({2.0, 1.0, 0.0}).degree() == 2);
    CHECK(Polynomial({1.0, 1.0}) * Polynomial({1.0, -1.0}) == Polynomial({1.0, 0.0, -1.0}));
    CHECK(Polynomial({1.0, 0.0, 0.0}) + Polynomial({2.0, 3.0}) == Polynomial({1.0, 2.0, 3.0}));
}

TEST_CASE("poly_eval") {
    CHECK(poly_eval(Polynomial({1.0, 0.0, -1.0}), 2.0) == Complex(3.0));
    CHECK(poly_eval(Polynomial({5.0}), Complex(-7.0, 3.0)) == Complex(5.0));
    CHECK(poly_eval(Polynomial({1.0, -3.0, 2.0}), 1.0) == Complex(0.0));
}

TEST_CASE("poly_roots on small examples") {
    auto r = poly_roots(Polynomial({1.0, 0.0, -1.0}));
    REQUIRE(r.size() == 2);
    CHECK(contains_root(r, 1.0, 1e-14));
    CHECK(contains_root(r, -1.0, 1e-14));

    r = poly_roots(Polynomial({1.0, -3.0, 2.0}));
    REQUIRE(r.size() == 2);
    CHECK(contains_root(r, 1.0, 1e-14));
    CHECK(contains_root(r, 2.0, 1e-14));

    // Leading zeros are ignored, trailing zeros give exact zero roots.
    r = poly_roots(Polynomial({0.0, 2.0, -2.0, 0.0}));
    REQUIRE(r.size() == 2);
    CHECK(contains_root(r, 0.0, 0.0));
    CHECK(contains_root(r, 1.0, 1e-15));

    CHECK_THROWS_AS(poly_roots(Polynomial({4.0})), DegreeError);
    CHECK_THROWS_AS(poly_roots(Polynomial({0.0, 4.0})), DegreeError);
}

TEST_CASE("poly_roots recovers a known degree-5 factorization") {
    const std::vector<Complex> truth = {0.1, 0.3, -0.5, {0.2, 0.4}, {0.2, -0.4}};
    const Polynomial p = poly_from_roots(truth);
    // (x-0.1)(x-0.3)(x+0.5)(x^2-0.4x+0.2) expanded
    const std::vector<double> expanded = {1.0, -0.3, -0.01, 0.103, -0.04, 0.003};
    for (std::size_t i = 0; i < expanded.size(); ++i) CHECK(p[i] == doctest::Approx(expanded[i]).epsilon(1e-12));
    const auto roots = poly_roots(p);
    REQUIRE(roots.size() == 5);
    for (const auto& t : truth) CHECK(contains_root(roots, t, 1e-6));
}

TEST_CASE("property: root residual bound for random polynomials") {
    std::mt19937_64 rng(20241018);
    std::uniform_real_distribution<double> coef(-10.0, 10.0);
    std::uniform_int_distribution<int> degree(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
        const int deg = degree(rng);
        std::vector<double> c(static_cast<std::size_t>(deg) + 1);
        for (double& x : c) x = coef(rng);
        if (std::abs(c[0]) < 1e-3) c[0] = 1.0;
        const Polynomial p(c);
        double max_coeff = 0.0;
        for (double x : c) max_coeff = std::max(max_coeff, std::abs(x));
        const auto roots = poly_roots(p);
        REQUIRE(roots.size() == static_cast<std::size_t>(deg));
        for (const auto& r : roots) {
            const double bound = 1e-8 * max_coeff * std::pow(std::max(1.0, std::abs(r)), deg);
            CHECK(std::abs(p(r)) <= bound);
        }
    }
}

TEST_CASE("transfer function invariants") {
    CHECK_THROWS_AS(DiscreteTransferFunction(Polynomial({1.0}), Polynomial({0.0}), 1.0), ValidationError);
    CHECK_THROWS_AS(DiscreteTransferFunction(Polynomial({1.0}), Polynomial({1.0}), 0.0), ValidationError);
    const DiscreteTransferFunction g(Polynomial({2.0, 4.0}), Polynomial({0.0, 2.0, -1.0}), 0.5);
    CHECK(g.den() == Polynomial({1.0, -0.5}));
    CHECK(g.num() == Polynomial({1.0, 2.0}));

    const ContinuousTransferFunction c(Polynomial({3.0, 1.0}), Polynomial({3.0, 6.0}));
    CHECK(c.den() == Polynomial({1.0, 2.0}));
    CHECK(c.direct_term() == doctest::Approx(1.0));
    CHECK(ContinuousTransferFunction(Polynomial({1.0}), Polynomial({1.0, 1.0})).direct_term() == 0.0);
    CHECK_THROWS_AS(ContinuousTransferFunction(Polynomial({1.0, 0.0, 0.0}), Polynomial({1.0, 1.0})).direct_term(),
                    DegreeError);
}

TEST_CASE("TimeSeries and FrequencyGrid invariants") {
    CHECK_THROWS_AS(TimeSeries(0.0, 0.0, {1.0}), ValidationError);
    CHECK_THROWS_AS(TimeSeries(0.0, 0.1, {1.0, INFINITY}), ValidationError);
    const TimeSeries ts(0.5, 0.25, {1.0, 2.0, 3.0});
    CHECK(ts.time(2) == 1.0);
    CHECK(ts.head(2).size() == 2);

    CHECK_THROWS_AS(FrequencyGrid({1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(FrequencyGrid({-1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(FrequencyGrid::logspace(10.0, 1.0, 5), ValidationError);
    const auto grid = FrequencyGrid::logspace(0.01, 100.0, 200);
    REQUIRE(grid.size() == 200);
    CHECK(grid[0] == 0.01);
    CHECK(grid[199] == 100.0);
    for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
    CHECK(grid[100] == doctest::Approx(std::pow(10.0, -2.0 + 4.0 * 100.0 / 199.0)).epsilon(1e-13));
}

TEST_CASE("discrete_impulse") {
    auto h = discrete_impulse(DiscreteTransferFunction(Polynomial({1.0}), Polynomial({1.0, -0.5}), 1.0), 4);
    CHECK(h.t0() == 0.0);
    CHECK(std::vector<double>(h.values().begin(), h.values().end()) == std::vector<double>{1.0, 0.5, 0.25, 0.125});

    h = discrete_impulse(DiscreteTransferFunction(Polynomial({1.0, 2.0, 3.0}), Polynomial({1.0}), 0.1), 5);
    CHECK(h.dt() == 0.1);
    CHECK(std::vector<double>(h.values().begin(), h.values().end()) == std::vector<double>{1.0, 2.0, 3.0, 0.0, 0.0});

    h = discrete_impulse(DiscreteTransferFunction(Polynomial({0.0}), Polynomial({1.0, -0.9}), 1.0), 3);
    CHECK(std::vector<double>(h.values().begin(), h.values().end()) == std::vector<double>{0.0, 0.0, 0.0});

    CHECK_THROWS_AS(discrete_impulse(DiscreteTransferFunction(Polynomial({1.0}), Polynomial({1.0}), 1.0), 0),
                    ValidationError);
}

TEST_CASE("property: FIR identity and linearity of discrete_impulse") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> taps(1 + trial % 7);
        for (double& t : taps) t = u(rng);
        const auto h = discrete_impulse(DiscreteTransferFunction(Polynomial(taps), Polynomial({1.0}), 1.0), 12);
        for (std::size_t k = 0; k < 12; ++k) CHECK(h[k] == (k < taps.size() ? taps[k] : 0.0));

        const Polynomial num({u(rng), u(rng), u(rng)});
        const Polynomial den({1.0, 0.3 * u(rng), 0.2 * u(rng)});
        const double alpha = u(rng);
        const auto base = discrete_impulse(DiscreteTransferFunction(num, den, 1.0), 40);
        const auto scaled = discrete_impulse(DiscreteTransferFunction(num.scaled(alpha), den, 1.0), 40);
        for (std::size_t k = 0; k < 40; ++k)
            CHECK(std::abs(scaled[k] - alpha * base[k]) <= 1e-14 * (1.0 + std::abs(alpha * base[k])));
    }
}

TEST_CASE("discrete_freq_response") {
    const auto grid = FrequencyGrid::logspace(0.1, 3.0, 7);
    auto f = discrete_freq_response(DiscreteTransferFunction(Polynomial({1.0}), Polynomial({1.0}), 1.0), grid);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == Complex(1.0, 0.0));
    for (double m : f.magnitude_db()) CHECK(m == 0.0);
    for (double p : f.phase_deg()) CHECK(p == 0.0);

    f = discrete_freq_response(DiscreteTransferFunction(Polynomial({1.0, 0.0}), Polynomial({1.0, 0.0}), 1.0), grid);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(f[i] - 1.0) < 1e-15);

    // (j + 1) / (2 j) = 0.5 - 0.5 j
    const FrequencyGrid half_pi({std::numbers::pi / 2});
    f = discrete_freq_response(DiscreteTransferFunction(Polynomial({1.0, 1.0}), Polynomial({2.0, 0.0}), 1.0), half_pi);
    CHECK(f[0].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f[0].imag() == doctest::Approx(-0.5).epsilon(1e-15));

    // Pole at z = 1; at a subnormal frequency |den| drops below 1e-300.
    CHECK_THROWS_AS(discrete_freq_response(DiscreteTransferFunction(Polynomial({1.0}), Polynomial({1.0, -1.0}), 1.0),
                                           FrequencyGrid({1e-310})),
                    DenominatorZero);
}

TEST_CASE("discrete_freq_response warns above Nyquist but still evaluates") {
    WarningCapture capture;
    const DiscreteTransferFunction g(Polynomial({1.0}), Polynomial({1.0, -0.5}), 1.0);
    const auto f = discrete_freq_response(g, FrequencyGrid({1.0, 4.0}));
    CHECK(f.size() == 2);
    CHECK(capture.messages.size() == 1);
    CHECK(std::isfinite(std::abs(f[1])));
}

TEST_CASE("property: discrete_freq_response agrees with direct polynomial evaluation") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial num({u(rng), u(rng), u(rng), u(rng)});
        const Polynomial den({1.0, 0.4 * u(rng), 0.3 * u(rng), 0.2 * u(rng)});
        const double ts = 0.01 + 0.5 * (u(rng) + 1.0);
        const DiscreteTransferFunction g(num, den, ts);
        const auto grid = FrequencyGrid::logspace(0.01, 0.99 * std::numbers::pi / ts, 25);
        const auto f = discrete_freq_response(g, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Complex z = std::polar(1.0, grid[i] * ts);
            const Complex expected = poly_eval(num, z) / poly_eval(den, z);
            CHECK(std::abs(f[i] - expected) <= 1e-13 * std::abs(expected));
        }
    }
}

TEST_CASE("continuous_freq_response") {
    const FrequencyGrid one({1.0});
    auto f = continuous_freq_response(ContinuousTransferFunction(Polynomial({1.0}), Polynomial({1.0, 0.0})), one);
    CHECK(std::abs(f[0] - Complex(0.0, -1.0)) < 1e-15);

    f = continuous_freq_response(ContinuousTransferFunction(Polynomial({1.0, 0.0}), Polynomial({1.0, 1.0})),
                                 FrequencyGrid({1e6}));
    CHECK(std::abs(f[0]) == doctest::Approx(1.0).epsilon(1e-10));

    f = continuous_freq_response(ContinuousTransferFunction(Polynomial({1.0}), Polynomial({1.0, 1.0})), one);
    CHECK(std::abs(f[0] - Complex(0.5, -0.5)) < 1e-15);
}

TEST_CASE("phase is unwrapped along the grid") {
    // 1/(s+1)^3 falls through -180 degrees near omega = sqrt(3).
    const ContinuousTransferFunction g(Polynomial({1.0}), Polynomial({1.0, 3.0, 3.0, 1.0}));
    const auto f = continuous_freq_response(g, FrequencyGrid::logspace(0.01, 100.0, 300));
    const auto phase = f.phase_deg();
    for (std::size_t i = 1; i < phase.size(); ++i) CHECK(phase[i] < phase[i - 1]);
    CHECK(phase.back() == doctest::Approx(-3.0 * std::atan(100.0) * 180.0 / std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("is_stable_discrete") {
    auto s = is_stable_discrete(DiscreteTransferFunction(Polynomial({1.0}), Polynomial({1.0, -0.5}), 1.0));
    CHECK(s.stable);
    CHECK(s.margin == doctest::Approx(0.5));

    s = is_stable_discrete(DiscreteTransferFunction(Polynomial({1.0}), Polynomial({1.0, -1.5}), 1.0));
    CHECK_FALSE(s.stable);
    CHECK(s.margin == doctest::Approx(-0.5));

    s = is_stable_discrete(DiscreteTransferFunction(Polynomial({1.0}), Polynomial({1.0}), 1.0));
    CHECK(s.stable);
}

TEST_CASE("the published 5th-order discrete denominator for lambda=1.5, mu=-0.4 is not stable") {
    // Root computation puts one real pole at 1.186 and a complex pair at
    // modulus 1.0158, so the published model is unstable as printed.
    const DiscreteTransferFunction g(Polynomial({1.0}),
                                     Polynomial({1.0, -4.6816, 8.7441, -8.1436, 3.7803, -0.6997}), 1.0);
    const auto s = is_stable_discrete(g);
    CHECK_FALSE(s.stable);
    CHECK(s.margin == doctest::Approx(-0.18596808).epsilon(1e-6));
}
