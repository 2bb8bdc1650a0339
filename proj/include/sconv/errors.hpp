#ifndef SCONV_ERRORS_HPP
#define SCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sconv {

// Evaluation outside a function's admissible domain, or a non-finite sample.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed parameters (q <= 1, n in {-1,0}, a >= b, ...).
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Adaptive quadrature ran out of subdivision budget. Carries the best
// value reached and its error estimate so callers can still inspect it.
class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& what, double best_value, double error_estimate)
        : std::runtime_error(what), best_value(best_value), error_estimate(error_estimate) {}
    double best_value;
    double error_estimate;
};

// A precondition on the function class was violated (e.g. a negative
// sample where nonnegativity is required).
class HypothesisViolated : public std::runtime_error {
public:
    explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sconv

#endif
