#ifndef SCONV_FUNCTION_CATALOG_HPP
#define SCONV_FUNCTION_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sconv/interval.hpp"

namespace sconv::funcat {

// A twice-differentiable scalar function bundle with analytic derivatives.
//
// domain_min is the smallest admissible interval endpoint for operations
// that evaluate f'' (identities and theorem bounds); value_domain_min is
// the weaker floor for operations that only sample f itself (convexity
// certification, Hadamard chain). For x^r with fractional r the two
// differ: f is finite at 0 but f'' is not.
struct FunctionSpec {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> f1;
    std::function<double(double)> f2;
    double domain_min = 0.0;
    double value_domain_min = 0.0;
    std::optional<double> symmetry_center;
};

inline constexpr double kFractionalPowerFloor = 1e-6;

/// f(x) = x^r with analytic first and second derivatives.
/// domain_min = 0 for r >= 2 and r in {0, 1}, else 1e-6.
FunctionSpec make_power_function(double r);

/// Polynomial sum c[i] * x^i, degree <= 4.
FunctionSpec make_polynomial(const std::vector<double>& coeffs);

FunctionSpec make_exp();

// Wrappers; derivatives follow the base entry.
FunctionSpec negate(FunctionSpec base);
FunctionSpec shift(FunctionSpec base, double offset);

/// Resolves a catalog name: "pow:R", "poly:c0,c1,...", "exp",
/// "neg:<name>", "shift:<c>:<name>". Throws InvalidParameter on
/// unknown or malformed names.
FunctionSpec lookup(const std::string& name);

/// Entries every shipped sweep and test grid draws from.
const std::vector<std::string>& default_catalog_names();

/// Max |fd - analytic| over interior sample points, where fd is the
/// 5-point central difference of `value` compared against `deriv`.
/// Mismatch is measured relative to 1 + |deriv|.
double derivative_mismatch(const std::function<double(double)>& value,
                           const std::function<double(double)>& deriv, const Interval& iv,
                           int n_points = 100);

} // namespace sconv::funcat

#endif
