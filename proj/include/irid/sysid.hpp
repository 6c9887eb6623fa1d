#pragma once

// Rational model fitting of sampled impulse responses.

#include <cstddef>

#include "irid/lti.hpp"

namespace irid::sysid {

struct FitConfig {
    /// Numerator degree (nb + 1 coefficients).
    std::size_t nb = 5;
    /// Denominator degree, at least 1.
    std::size_t na = 5;
    /// Steiglitz-McBride passes after the Prony start.
    std::size_t iterations = 5;
    /// Ridge weight added to every least-squares solve, >= 0.
    double regularization = 0.0;

    /// Throws ConfigError.
    void validate() const;
};

/// One-shot Prony fit: the denominator comes from linear prediction of
/// h[nb+1..] by its previous na samples, the numerator from the first nb+1
/// terms of a * h. Needs at least nb + na + 2 samples (InsufficientData);
/// throws SingularSystem when the prediction matrix has no usable rank.
lti::DiscreteTransferFunction prony_fit(const lti::TimeSeries& h, std::size_t nb, std::size_t na,
                                        double regularization = 0.0);

/// Steiglitz-McBride iteration started from prony_fit. Each pass prefilters
/// the unit impulse and h through 1 / A_prev and solves one linear least
/// squares problem for B and A (a0 = 1) over all samples. The returned model
/// has ts = h.dt(). Needs at least 3 (nb + na) samples.
///
/// Throws InsufficientData, SingularSystem, or NonFiniteIterate carrying
/// the pass index.
lti::DiscreteTransferFunction steiglitz_mcbride(const lti::TimeSeries& h, const FitConfig& cfg);

/// Tustin substitution z = (1 + s ts/2) / (1 - s ts/2), cleared of
/// denominators and normalized to a monic s-domain denominator. Throws
/// PoleAtMinusOne when den(-1) vanishes.
lti::ContinuousTransferFunction bilinear_to_continuous(const lti::DiscreteTransferFunction& g);

/// z(s) used by bilinear_to_continuous.
lti::Complex bilinear_z(lti::Complex s, double ts);

}  // namespace irid::sysid
