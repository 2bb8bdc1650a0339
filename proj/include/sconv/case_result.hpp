#ifndef SCONV_CASE_RESULT_HPP
#define SCONV_CASE_RESULT_HPP

#include <string>

namespace sconv {

enum class Verdict { holds, violated, hypothesis_failed, numerical_failure };

std::string to_string(Verdict v);

// Outcome of pitting a bound against its deviation.
//   slack     = rhs - |lhs|       (lhs keeps its sign)
//   tightness = |lhs| / rhs       (0 when both sides are 0; 1 at equality)
struct EvaluationResult {
    double lhs = 0;
    double rhs = 0;
    double slack = 0;
    double tightness = 0;
    double quad_error = 0;
    bool hypothesis_certified = false;
    Verdict verdict = Verdict::numerical_failure;
};

/// Fills slack/tightness from lhs/rhs and decides holds/violated at the
/// tolerance slack >= -(tol*(1+rhs) + 5*quad_error).
EvaluationResult make_result(double lhs, double rhs, double quad_error, bool certified,
                             double tol = 1e-9);

} // namespace sconv

#endif
