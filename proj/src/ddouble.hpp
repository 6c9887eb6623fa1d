#pragma once

// Minimal double-double arithmetic built on error-free transformations.
// Used where coefficient lists cancel to many digits: polynomial evaluation
// near clustered roots and the bilinear substitution.

#include <cmath>

namespace irid::detail {

struct Dd {
    double hi = 0.0;
    double lo = 0.0;

    double value() const noexcept { return hi + lo; }
};

inline Dd two_sum(double a, double b) noexcept {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd quick(double hi, double lo) noexcept {
    const double s = hi + lo;
    return {s, lo - (s - hi)};
}

inline Dd operator+(Dd a, Dd b) noexcept {
    const Dd s = two_sum(a.hi, b.hi);
    return quick(s.hi, s.lo + a.lo + b.lo);
}

inline Dd operator-(Dd a) noexcept { return {-a.hi, -a.lo}; }
inline Dd operator-(Dd a, Dd b) noexcept { return a + (-b); }

inline Dd operator*(Dd a, double b) noexcept {
    const double p = a.hi * b;
    return quick(p, std::fma(a.hi, b, -p) + a.lo * b);
}

inline Dd operator*(Dd a, Dd b) noexcept {
    const double p = a.hi * b.hi;
    return quick(p, std::fma(a.hi, b.hi, -p) + (a.hi * b.lo + a.lo * b.hi));
}

inline Dd operator/(Dd a, Dd b) noexcept {
    const double q1 = a.hi / b.hi;
    const Dd r = a - b * q1;
    return quick(q1, r.hi / b.hi);
}

}  // namespace irid::detail
