#include "sconv/means.hpp"

#include <cmath>

namespace sconv::means {
namespace {

constexpr double kPropositionTol = 1e-12;

void require_proposition_domain(PropositionId id, double a, double b, double s,
                                std::optional<double> q) {
    if (!(std::isfinite(a) && std::isfinite(b) && 0 < a && a < b))
        throw InvalidParameter("propositions require 0 < a < b");
    if (!(std::isfinite(s) && 0 < s && s < 1))
        throw InvalidParameter("propositions require 0 < s < 1");
    const bool needs_q = (id == PropositionId::p3_2 || id == PropositionId::p3_3);
    if (needs_q && !(q && std::isfinite(*q) && *q > 1))
        throw InvalidParameter("propositions 3.2/3.3 require q > 1");
}

// Closed forms with the curvature coefficient of x^s factored out, so the
// corrected (s(1-s)) and known-bad (s(s-1)) variants share the algebra.
double proposition_bound(PropositionId id, double a, double b, double s,
                         std::optional<double> q, double curvature_coeff) {
    const double w = b - a, m = (a + b) / 2;
    switch (id) {
        case PropositionId::p3_1a: {
            const double D = (s + 1) * (s + 2) * (s + 3);
            return w * w * curvature_coeff / (8 * D) *
                   (std::pow(a, s - 2) + (s * s + 3 * s + 2) * std::pow(m, s - 2) +
                    std::pow(b, s - 2));
        }
        case PropositionId::p3_1b: {
            const double D = (s + 1) * (s + 2) * (s + 3);
            const double q1 = (3 * a + b) / 4, q3 = (a + 3 * b) / 4;
            return w * w * curvature_coeff / (128 * D) *
                   (2 * (std::pow(a, s - 2) + std::pow(b, s - 2)) +
                    (3 * s * s + 5 * s + 6) * (std::pow(q1, s - 2) + std::pow(q3, s - 2)));
        }
        case PropositionId::p3_2: {
            const HoelderPair hp(*q);
            const double C = std::pow(s + 1, 1 / hp.q) * std::pow(2 * hp.p + 1, 1 / hp.p);
            const double aq = std::pow(a, (s - 2) * hp.q), mq = std::pow(m, (s - 2) * hp.q),
                         bq = std::pow(b, (s - 2) * hp.q);
            return w * w * curvature_coeff / (16 * C) *
                   (std::pow(aq + mq, 1 / hp.q) + std::pow(mq + bq, 1 / hp.q));
        }
        case PropositionId::p3_3: {
            const HoelderPair hp(*q);
            const double C = std::pow(s + 1, 1 / hp.q) * std::pow(2 * hp.p + 1, 1 / hp.p);
            return w * w * curvature_coeff / (8 * C) *
                   std::pow(std::pow(a, (s - 2) * hp.q) + std::pow(b, (s - 2) * hp.q),
                            1 / hp.q);
        }
    }
    throw InvalidParameter("unknown proposition id");
}

} // namespace

double arithmetic_mean(const MeanArgs& args) { return (args.alpha + args.beta) / 2; }

double generalized_log_mean(const MeanArgs& args, double n) {
    if (!(std::isfinite(n)) || n == -1 || n == 0)
        throw InvalidParameter("generalized logarithmic mean requires n outside {-1, 0}");
    if (args.alpha == args.beta)
        throw InvalidParameter("generalized logarithmic mean requires alpha != beta");
    const double num = std::pow(args.beta, n + 1) - std::pow(args.alpha, n + 1);
    const double den = (args.beta - args.alpha) * (n + 1);
    return std::pow(num / den, 1 / n);
}

double power_log_mean(const MeanArgs& args, double s) {
    if (!(std::isfinite(s)) || s == -1 || s == 0)
        throw InvalidParameter("power log mean requires s outside {-1, 0}");
    if (args.alpha == args.beta)
        throw InvalidParameter("power log mean requires alpha != beta");
    const double num = std::pow(args.beta, s + 1) - std::pow(args.alpha, s + 1);
    return num / ((args.beta - args.alpha) * (s + 1));
}

PropositionId parse_proposition_id(const std::string& text) {
    if (text == "3.1a") return PropositionId::p3_1a;
    if (text == "3.1b") return PropositionId::p3_1b;
    if (text == "3.2") return PropositionId::p3_2;
    if (text == "3.3") return PropositionId::p3_3;
    throw InvalidParameter("unknown proposition '" + text + "' (want 3.1a, 3.1b, 3.2, 3.3)");
}

std::string to_string(PropositionId id) {
    switch (id) {
        case PropositionId::p3_1a: return "3.1a";
        case PropositionId::p3_1b: return "3.1b";
        case PropositionId::p3_2: return "3.2";
        case PropositionId::p3_3: return "3.3";
    }
    return "?";
}

double proposition_lhs(PropositionId id, double a, double b, double s) {
    const MeanArgs args(a, b);
    const double lss = power_log_mean(args, s);
    switch (id) {
        case PropositionId::p3_1a:
        case PropositionId::p3_2:
            return std::abs(lss - std::pow(arithmetic_mean(args), s));
        case PropositionId::p3_1b: {
            const double q1 = (3 * a + b) / 4, q3 = (a + 3 * b) / 4;
            return std::abs(lss - arithmetic_mean(MeanArgs(std::pow(q1, s), std::pow(q3, s))));
        }
        case PropositionId::p3_3:
            return std::abs(lss - arithmetic_mean(MeanArgs(std::pow(a, s), std::pow(b, s))));
    }
    throw InvalidParameter("unknown proposition id");
}

double proposition_rhs(PropositionId id, double a, double b, double s,
                       std::optional<double> q) {
    require_proposition_domain(id, a, b, s, q);
    return proposition_bound(id, a, b, s, q, s * (1 - s));
}

double proposition_rhs_bad_sign(PropositionId id, double a, double b, double s,
                                std::optional<double> q) {
    require_proposition_domain(id, a, b, s, q);
    return proposition_bound(id, a, b, s, q, s * (s - 1));
}

EvaluationResult verify_proposition(PropositionId id, double a, double b, double s,
                                    std::optional<double> q) {
    require_proposition_domain(id, a, b, s, q);
    const double lhs = proposition_lhs(id, a, b, s);
    const double rhs = proposition_rhs(id, a, b, s, q);
    return make_result(lhs, rhs, /*quad_error=*/0.0, /*certified=*/true, kPropositionTol);
}

} // namespace sconv::means
