#include "irid/sysid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "ddouble.hpp"
#include "irid/error.hpp"

namespace irid::sysid {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// min ||A x - y||^2 + ridge ||x||^2 by Householder QR on column-equilibrated A.
VectorXd least_squares(MatrixXd a, VectorXd y, double ridge) {
    const Index cols = a.cols();
    if (ridge > 0.0) {
        const Index rows = a.rows();
        a.conservativeResize(rows + cols, Eigen::NoChange);
        a.bottomRows(cols) = std::sqrt(ridge) * MatrixXd::Identity(cols, cols);
        y.conservativeResize(rows + cols);
        y.tail(cols).setZero();
    }
    VectorXd scale(cols);
    for (Index j = 0; j < cols; ++j) {
        const double norm = a.col(j).norm();
        if (!(norm > 0.0)) throw SingularSystem("least-squares matrix has an all-zero column");
        scale[j] = norm;
        a.col(j) /= norm;
    }
    Eigen::HouseholderQR<MatrixXd> qr(a);
    const auto diag = qr.matrixQR().diagonal().cwiseAbs();
    const double tol = static_cast<double>(std::max(a.rows(), cols)) *
                       std::numeric_limits<double>::epsilon() * diag.maxCoeff();
    if (!(diag.minCoeff() > tol)) throw SingularSystem("least-squares matrix is rank deficient");
    VectorXd x = qr.solve(y);
    return x.cwiseQuotient(scale);
}

// y = (b / a) x with a[0] == 1, zero initial state; coefficients of z^0, z^-1, ...
std::vector<double> filter(std::span<const double> b, std::span<const double> a, std::span<const double> x) {
    std::vector<double> y(x.size(), 0.0);
    for (std::size_t n = 0; n < x.size(); ++n) {
        double acc = 0.0;
        for (std::size_t i = 0; i < b.size() && i <= n; ++i) acc += b[i] * x[n - i];
        for (std::size_t i = 1; i < a.size() && i <= n; ++i) acc -= a[i] * y[n - i];
        y[n] = acc;
    }
    return y;
}

bool all_finite(std::span<const double> xs) {
    return std::all_of(xs.begin(), xs.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

void FitConfig::validate() const {
    if (na < 1) throw ConfigError("denominator degree na must be at least 1");
    if (iterations < 1) throw ConfigError("Steiglitz-McBride needs at least one iteration");
    if (!(regularization >= 0.0) || !std::isfinite(regularization))
        throw ConfigError("regularization must be finite and >= 0");
}

lti::DiscreteTransferFunction prony_fit(const lti::TimeSeries& h, std::size_t nb, std::size_t na,
                                        double regularization) {
    const auto x = h.values();
    const std::size_t len = x.size();
    if (len < nb + na + 2) {
        std::ostringstream msg;
        msg << "Prony fit of order (" << nb << ", " << na << ") needs " << nb + na + 2
            << " samples, got " << len;
        throw InsufficientData(msg.str());
    }
    auto sample = [&](std::ptrdiff_t k) { return k < 0 ? 0.0 : x[static_cast<std::size_t>(k)]; };

    std::vector<double> a{1.0};
    if (na > 0) {
        const Index rows = static_cast<Index>(len - nb - 1);
        MatrixXd pred(rows, static_cast<Index>(na));
        VectorXd target(rows);
        for (Index r = 0; r < rows; ++r) {
            const auto n = static_cast<std::ptrdiff_t>(nb + 1) + r;
            target[r] = -x[static_cast<std::size_t>(n)];
            for (std::size_t i = 1; i <= na; ++i) pred(r, static_cast<Index>(i - 1)) = sample(n - static_cast<std::ptrdiff_t>(i));
        }
        const VectorXd sol = least_squares(std::move(pred), std::move(target), regularization);
        for (Index i = 0; i < sol.size(); ++i) a.push_back(sol[i]);
    }

    std::vector<double> b(nb + 1, 0.0);
    for (std::size_t k = 0; k <= nb; ++k)
        for (std::size_t i = 0; i <= std::min(k, na); ++i) b[k] += a[i] * x[k - i];

    return lti::DiscreteTransferFunction(lti::Polynomial(std::move(b)), lti::Polynomial(std::move(a)), h.dt());
}

lti::DiscreteTransferFunction steiglitz_mcbride(const lti::TimeSeries& h, const FitConfig& cfg) {
    cfg.validate();
    const auto y = h.values();
    const std::size_t len = y.size();
    const std::size_t needed = std::max(3 * (cfg.nb + cfg.na), cfg.nb + cfg.na + 2);
    if (len < needed) {
        std::ostringstream msg;
        msg << "Steiglitz-McBride fit of order (" << cfg.nb << ", " << cfg.na << ") needs " << needed
            << " samples, got " << len;
        throw InsufficientData(msg.str());
    }

    const auto start = prony_fit(h, cfg.nb, cfg.na, cfg.regularization);
    std::vector<double> a(start.den().coeffs().begin(), start.den().coeffs().end());
    std::vector<double> b(start.num().coeffs().begin(), start.num().coeffs().end());

    std::vector<double> impulse(len, 0.0);
    impulse[0] = 1.0;
    const std::vector<double> one{1.0};
    const auto rows = static_cast<Index>(len);
    const auto nb1 = static_cast<Index>(cfg.nb + 1);
    const auto na = static_cast<Index>(cfg.na);

    for (std::size_t pass = 0; pass < cfg.iterations; ++pass) {
        const auto u = filter(one, a, impulse);
        const auto v = filter(one, a, y);
        if (!all_finite(u) || !all_finite(v)) {
            std::ostringstream msg;
            msg << "prefiltered signals diverged in iteration " << pass;
            throw NonFiniteIterate(pass, msg.str());
        }

        // v[n] + sum_i a_i v[n-i] = sum_j b_j u[n-j]
        MatrixXd m = MatrixXd::Zero(rows, nb1 + na);
        VectorXd rhs(rows);
        for (Index n = 0; n < rows; ++n) {
            rhs[n] = v[static_cast<std::size_t>(n)];
            for (Index j = 0; j < nb1 && j <= n; ++j) m(n, j) = u[static_cast<std::size_t>(n - j)];
            for (Index i = 1; i <= na && i <= n; ++i) m(n, nb1 + i - 1) = -v[static_cast<std::size_t>(n - i)];
        }
        const VectorXd sol = least_squares(std::move(m), std::move(rhs), cfg.regularization);
        if (!sol.allFinite()) {
            std::ostringstream msg;
            msg << "non-finite coefficients in iteration " << pass;
            throw NonFiniteIterate(pass, msg.str());
        }
        for (Index j = 0; j < nb1; ++j) b[static_cast<std::size_t>(j)] = sol[j];
        for (Index i = 1; i <= na; ++i) a[static_cast<std::size_t>(i)] = sol[nb1 + i - 1];
    }
    return lti::DiscreteTransferFunction(lti::Polynomial(std::move(b)), lti::Polynomial(std::move(a)), h.dt());
}

lti::Complex bilinear_z(lti::Complex s, double ts) {
    const lti::Complex half = 0.5 * ts * s;
    return (1.0 + half) / (1.0 - half);
}

lti::ContinuousTransferFunction bilinear_to_continuous(const lti::DiscreteTransferFunction& g) {
    using detail::Dd;
    const auto& den = g.den();
    double size = 0.0;
    for (double c : den.coeffs()) size += std::abs(c);
    if (std::abs(den(-1.0)) <= 1e-12 * size)
        throw PoleAtMinusOne("discrete denominator has a root at z = -1; the bilinear image is at infinity");

    const lti::Polynomial num = g.num().normalized();
    const std::size_t order = std::max(num.degree(), den.degree());
    const double half = 0.5 * g.ts();

    // Descending coefficients of (1 + s ts/2)^k and (1 - s ts/2)^k. The
    // substitution cancels heavily when the poles crowd z = 1, so it runs in
    // double-double and is rounded once at the end.
    using DdPoly = std::vector<Dd>;
    auto times_linear = [](const DdPoly& p, double a) {  // p(s) (a s + 1)
        DdPoly out(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            out[i] = out[i] + p[i] * a;
            out[i + 1] = out[i + 1] + p[i];
        }
        return out;
    };
    std::vector<DdPoly> plus_pow{{Dd{1.0, 0.0}}}, minus_pow{{Dd{1.0, 0.0}}};
    for (std::size_t k = 0; k < order; ++k) {
        plus_pow.push_back(times_linear(plus_pow.back(), half));
        minus_pow.push_back(times_linear(minus_pow.back(), -half));
    }

    // p(z) (1 - s ts/2)^order, term by term.
    auto substitute = [&](const lti::Polynomial& p) {
        DdPoly acc(order + 1);
        const std::size_t deg = p.degree();
        for (std::size_t i = 0; i <= deg; ++i) {
            const std::size_t power = deg - i;
            const DdPoly& a = plus_pow[power];
            const DdPoly& b = minus_pow[order - power];
            for (std::size_t r = 0; r < a.size(); ++r)
                for (std::size_t c = 0; c < b.size(); ++c) acc[r + c] = acc[r + c] + a[r] * b[c] * p[i];
        }
        return acc;
    };
    const DdPoly n = substitute(num);
    const DdPoly d = substitute(den);

    // Monic denominator, divided before rounding.
    std::size_t first = 0;
    while (first + 1 < d.size() && d[first].value() == 0.0) ++first;
    const Dd lead = d[first];
    std::vector<double> num_out, den_out;
    for (const Dd& c : n) num_out.push_back((c / lead).value());
    for (std::size_t i = first; i < d.size(); ++i) den_out.push_back(i == first ? 1.0 : (d[i] / lead).value());
    return lti::ContinuousTransferFunction(lti::Polynomial(std::move(num_out)), lti::Polynomial(std::move(den_out)));
}

}  // namespace irid::sysid
