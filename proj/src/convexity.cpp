#include "sconv/convexity.hpp"

#include <cmath>
#include <random>

namespace sconv::funcat {
namespace {

constexpr int kGridPoints = 32;  // per axis on (x, y)
constexpr int kAlphaPoints = 17;

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa draw; bit-stable across standard libraries.
    return double(rng() >> 11) * 0x1p-53;
}

ConvexityReport run_check(ConvexityClass cls, const std::function<double(double)>& f,
                          const Interval& iv, double s, int n_samples, std::uint64_t seed) {
    if (!(s > 0 && s <= 1)) throw InvalidParameter("class parameter requires 0 < s <= 1");
    if (n_samples < 1) throw InvalidParameter("certification requires n_samples >= 1");

    ConvexityReport report{cls, s, 0, -std::numeric_limits<double>::infinity(), 0.0,
                           std::nullopt, false};
    ClassWitness worst{iv.a, iv.a, 0.0};

    auto probe = [&](double x, double y, double alpha) {
        const double beta = 1 - alpha;
        const double mix = alpha * x + beta * y;
        const double fx = f(x), fy = f(y), fm = f(mix);
        if (!std::isfinite(fx) || !std::isfinite(fy) || !std::isfinite(fm))
            throw DomainError("non-finite sample while certifying convexity class");
        report.scale = std::max({report.scale, std::abs(fx), std::abs(fy), std::abs(fm)});
        const double rhs = std::pow(alpha, s) * fx + std::pow(beta, s) * fy;
        const double violation = (cls == ConvexityClass::s_convex) ? fm - rhs : rhs - fm;
        if (violation > report.max_violation) {
            report.max_violation = violation;
            worst = ClassWitness{x, y, alpha};
        }
        ++report.samples;
    };

    for (int i = 0; i < kGridPoints; ++i) {
        const double x = iv.a + iv.width() * i / (kGridPoints - 1);
        for (int j = 0; j < kGridPoints; ++j) {
            const double y = iv.a + iv.width() * j / (kGridPoints - 1);
            for (int k = 0; k < kAlphaPoints; ++k)
                probe(x, y, double(k) / (kAlphaPoints - 1));
        }
    }

    std::mt19937_64 rng(seed);
    for (int i = 0; i < n_samples; ++i) {
        const double x = iv.a + iv.width() * uniform01(rng);
        const double y = iv.a + iv.width() * uniform01(rng);
        probe(x, y, uniform01(rng));
    }

    report.pass = report.max_violation <= report.tolerance();
    if (!report.pass) report.witness = worst;
    return report;
}

void require_value_domain(const FunctionSpec& fs, const Interval& iv) {
    if (iv.a < fs.value_domain_min)
        throw DomainError("interval starts below the admissible domain of " + fs.name);
}

} // namespace

double ConvexityReport::tolerance() const { return kCertificationTol * (1 + scale); }

ConvexityReport check_s_convexity(const FunctionSpec& fs, const Interval& iv, double s,
                                  int n_samples, std::uint64_t seed) {
    require_value_domain(fs, iv);
    return run_check(ConvexityClass::s_convex, fs.f, iv, s, n_samples, seed);
}

ConvexityReport check_s_concavity(const FunctionSpec& fs, const Interval& iv, double s,
                                  int n_samples, std::uint64_t seed) {
    require_value_domain(fs, iv);
    return run_check(ConvexityClass::s_concave, fs.f, iv, s, n_samples, seed);
}

ConvexityReport check_s_convexity_of(const std::function<double(double)>& f,
                                     const Interval& iv, double s, int n_samples,
                                     std::uint64_t seed) {
    return run_check(ConvexityClass::s_convex, f, iv, s, n_samples, seed);
}

ConvexityReport check_s_concavity_of(const std::function<double(double)>& f,
                                     const Interval& iv, double s, int n_samples,
                                     std::uint64_t seed) {
    return run_check(ConvexityClass::s_concave, f, iv, s, n_samples, seed);
}

double estimate_max_s(const FunctionSpec& fs, const Interval& iv,
                      const SamplingPlan& sampling) {
    require_value_domain(fs, iv);
    constexpr int kNonnegSamples = 257;
    for (int i = 0; i < kNonnegSamples; ++i) {
        const double x = iv.a + iv.width() * i / (kNonnegSamples - 1);
        const double v = fs.f(x);
        if (!std::isfinite(v)) throw DomainError("non-finite sample of " + fs.name);
        if (v < 0)
            throw HypothesisViolated(fs.name + " sampled negative; max-s search needs f >= 0");
    }

    auto passes = [&](double s) {
        return check_s_convexity(fs, iv, s, sampling.n_samples, sampling.seed).pass;
    };

    if (passes(1.0)) return 1.0;
    double lo = 0.0, hi = 1.0;  // lo: largest passing (0 = none yet), hi: smallest failing
    while (hi - lo > 5e-4) {
        const double mid = (lo + hi) / 2;
        (passes(mid) ? lo : hi) = mid;
    }
    return lo > 0 ? (lo + hi) / 2 : 0.0;
}

} // namespace sconv::funcat
