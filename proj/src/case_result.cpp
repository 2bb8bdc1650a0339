#include "sconv/case_result.hpp"

#include <cmath>
#include <limits>

namespace sconv {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::hypothesis_failed: return "hypothesis_failed";
        case Verdict::numerical_failure: return "numerical_failure";
    }
    return "numerical_failure";
}

EvaluationResult make_result(double lhs, double rhs, double quad_error, bool certified,
                             double tol) {
    EvaluationResult r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.quad_error = quad_error;
    r.hypothesis_certified = certified;
    r.slack = rhs - std::abs(lhs);

    if (!std::isfinite(lhs) || !std::isfinite(rhs)) {
        r.verdict = Verdict::numerical_failure;
    } else if (!certified) {
        r.verdict = Verdict::hypothesis_failed;
    } else if (r.slack >= -(tol * (1 + rhs) + 5 * quad_error)) {
        r.verdict = Verdict::holds;
    } else {
        r.verdict = Verdict::violated;
    }

    if (rhs > 0) {
        r.tightness = std::abs(lhs) / rhs;
    } else if (r.verdict == Verdict::holds) {
        // A zero bound holds only against quadrature noise; that is 0/0.
        r.tightness = 0;
    } else {
        r.tightness = std::numeric_limits<double>::infinity();
    }
    return r;
}

} // namespace sconv
