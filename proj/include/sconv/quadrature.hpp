#ifndef SCONV_QUADRATURE_HPP
#define SCONV_QUADRATURE_HPP

#include <functional>

#include "sconv/interval.hpp"

namespace sconv::quad {

// Scalar integrand together with the interval on which it is defined
// and finite. Integration requests outside `domain` are rejected.
struct Integrand {
    std::function<double(double)> fn;
    Interval domain;
};

struct QuadratureResult {
    double value;
    double error_estimate;  // >= 0; |value - true integral| <= error_estimate
    int subdivisions;       // panels of the adaptive partition, >= 1
};

inline constexpr double kDefaultAbsTol = 1e-10;
inline constexpr int kMaxPanels = 1 << 16;

/// Adaptive Gauss-Kronrod 15(7) integration of g over [a, b].
///
/// Bisects the panel with the largest local error indicator until the
/// summed estimate drops below abs_tol. Throws NumericalFailure (with the
/// best value reached) if the panel budget is exhausted, DomainError if
/// [a,b] leaves g's domain or an evaluation is non-finite.
QuadratureResult integrate(const Integrand& g, double a, double b,
                           double abs_tol = kDefaultAbsTol);

// Convenience overload for integrands valid on all of [a, b].
QuadratureResult integrate(const std::function<double(double)>& fn, double a, double b,
                           double abs_tol = kDefaultAbsTol);

} // namespace sconv::quad

#endif
