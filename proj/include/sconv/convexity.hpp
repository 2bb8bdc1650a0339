#ifndef SCONV_CONVEXITY_HPP
#define SCONV_CONVEXITY_HPP

#include <cstdint>
#include <optional>

#include "sconv/function_catalog.hpp"
#include "sconv/interval.hpp"

namespace sconv::funcat {

enum class ConvexityClass { s_convex, s_concave };

// Combination triple that produced the worst violation.
struct ClassWitness {
    double x;
    double y;
    double alpha;
};

struct ConvexityReport {
    ConvexityClass class_tested;
    double s;
    long samples;
    double max_violation;
    double scale;  // max |f| seen while sampling
    std::optional<ClassWitness> witness;
    bool pass;

    double tolerance() const;
};

struct SamplingPlan {
    int n_samples = 512;
    std::uint64_t seed = 0;
};

inline constexpr double kCertificationTol = 1e-9;

/// Samples the defining inequality f(ax+by) <= a^s f(x) + b^s f(y)
/// (b = 1-a) on a 32x32 (x,y) grid x 17 alpha values plus n_samples
/// seeded random triples. pass iff the largest violation stays below
/// 1e-9 * (1 + max sampled |f|).
ConvexityReport check_s_convexity(const FunctionSpec& fs, const Interval& iv, double s,
                                  int n_samples, std::uint64_t seed);

/// Same sampling with the inequality reversed.
ConvexityReport check_s_concavity(const FunctionSpec& fs, const Interval& iv, double s,
                                  int n_samples, std::uint64_t seed);

// Variants for derived functions (|f''|, |f''|^q, ...) that only exist
// as callables. The FunctionSpec overloads forward here with fs.f.
ConvexityReport check_s_convexity_of(const std::function<double(double)>& f,
                                     const Interval& iv, double s, int n_samples,
                                     std::uint64_t seed);
ConvexityReport check_s_concavity_of(const std::function<double(double)>& f,
                                     const Interval& iv, double s, int n_samples,
                                     std::uint64_t seed);

/// Largest s in (0,1] for which check_s_convexity passes, located by
/// bisection to +-1e-3; returns 1 outright when the s=1 check passes
/// and 0 when no probed s passes. Requires f >= 0 on iv (sampled);
/// throws HypothesisViolated otherwise.
double estimate_max_s(const FunctionSpec& fs, const Interval& iv,
                      const SamplingPlan& sampling = {});

} // namespace sconv::funcat

#endif
