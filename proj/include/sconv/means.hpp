#ifndef SCONV_MEANS_HPP
#define SCONV_MEANS_HPP

#include <optional>
#include <string>

#include "sconv/case_result.hpp"
#include "sconv/interval.hpp"

namespace sconv::means {

// Nonnegative arguments of a two-variable mean. alpha != beta is
// required only where the generalized logarithmic mean needs it.
struct MeanArgs {
    double alpha;
    double beta;

    MeanArgs(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
        if (!(std::isfinite(alpha) && std::isfinite(beta) && alpha >= 0 && beta >= 0))
            throw InvalidParameter("mean arguments must be nonnegative finite reals");
    }
};

double arithmetic_mean(const MeanArgs& args);

/// L_n(alpha, beta) = [ (beta^{n+1} - alpha^{n+1}) / ((beta-alpha)(n+1)) ]^{1/n},
/// n extended to reals excluding {-1, 0}; requires alpha != beta.
double generalized_log_mean(const MeanArgs& args, double n);

/// L_s^s(alpha, beta): the s-th power of L_s, i.e. the integral mean of
/// x^s over [alpha, beta], in closed form.
double power_log_mean(const MeanArgs& args, double s);

enum class PropositionId { p3_1a, p3_1b, p3_2, p3_3 };

PropositionId parse_proposition_id(const std::string& text);
std::string to_string(PropositionId id);

/// Mean-difference lhs of a proposition (e.g. |L_s^s - A^s| for 3.1a/3.2).
double proposition_lhs(PropositionId id, double a, double b, double s);

/// Sign-corrected bound: the underlying fixed-point corollary applied to
/// f(x) = x^s, whose |f''| is s(1-s) x^{s-2}.
double proposition_rhs(PropositionId id, double a, double b, double s,
                       std::optional<double> q);

/// Known-bad variant kept under regression: keeps the s(s-1) coefficient,
/// which makes the "bound" negative for s in (0,1). Never use outside tests.
double proposition_rhs_bad_sign(PropositionId id, double a, double b, double s,
                                std::optional<double> q);

/// lhs vs rhs at tolerance lhs <= rhs + 1e-12*(1+rhs).
/// Requires 0 < a < b, 0 < s < 1, and q > 1 for 3.2/3.3.
EvaluationResult verify_proposition(PropositionId id, double a, double b, double s,
                                    std::optional<double> q = std::nullopt);

} // namespace sconv::means

#endif
