#ifndef SCONV_INTERVAL_HPP
#define SCONV_INTERVAL_HPP

#include <cmath>

#include "sconv/errors.hpp"

namespace sconv {

// Closed interval [a, b] with a < b, both finite.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b))
            throw InvalidParameter("interval endpoints must be finite");
        if (!(a < b)) throw InvalidParameter("interval requires a < b");
    }

    double width() const { return b - a; }
    double midpoint() const { return (a + b) / 2; }
    // Mirror image of x across the midpoint.
    double reflect(double x) const { return a + b - x; }
    bool contains(double x) const { return a <= x && x <= b; }
};

// Evaluation point of the companion identities: a <= x <= (a+b)/2.
struct CompanionPoint {
    double x;

    CompanionPoint(double x_, const Interval& iv) : x(x_) {
        if (!(iv.a <= x && x <= iv.midpoint()))
            throw InvalidParameter("companion point must lie in [a, (a+b)/2]");
    }
};

// Conjugate exponents: q > 1, p = q/(q-1), so 1/p + 1/q = 1.
struct HoelderPair {
    double q;
    double p;

    explicit HoelderPair(double q_) : q(q_), p(q_ / (q_ - 1)) {
        if (!(std::isfinite(q) && q > 1))
            throw InvalidParameter("Hoelder exponent requires q > 1");
    }
};

// Convexity-class parameter s in (0, 1].
struct SParam {
    double s;

    explicit SParam(double s_) : s(s_) {
        if (!(std::isfinite(s) && s > 0 && s <= 1))
            throw InvalidParameter("class parameter requires 0 < s <= 1");
    }
};

} // namespace sconv

#endif
