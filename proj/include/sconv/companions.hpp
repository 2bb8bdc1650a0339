#ifndef SCONV_COMPANIONS_HPP
#define SCONV_COMPANIONS_HPP

#include "sconv/function_catalog.hpp"
#include "sconv/interval.hpp"
#include "sconv/quadrature.hpp"

namespace sconv::companions {

using funcat::FunctionSpec;

// Value of an integral-bearing expression together with the quadrature
// error it inherits.
struct Estimate {
    double value;
    double quad_error;
};

inline constexpr double kIdentityQuadTol = 1e-11;

/// (1/(b-a)) * integral of f over [a, b].
Estimate integral_mean(const FunctionSpec& fs, const Interval& iv,
                       double abs_tol = kIdentityQuadTol);

/// Signed companion deviation
///   (1/(b-a)) int f  -  [f(x)+f(a+b-x)]/2  +  (x-(3a+b)/4)/2 * [f'(x)-f'(a+b-x)]
/// for x in [a, (a+b)/2].
Estimate companion_deviation(const FunctionSpec& fs, const Interval& iv, CompanionPoint x,
                             double abs_tol = kIdentityQuadTol);

/// Exact three-integral representation of the companion deviation:
///   (1/(2(b-a))) [ int_a^x (t-a)^2 f''  +  int_x^{a+b-x} (t-(a+b)/2)^2 f''
///                  + int_{a+b-x}^b (t-b)^2 f'' ].
/// Degenerate sub-intervals (x = a, x = (a+b)/2) contribute exactly 0.
Estimate liu_identity_rhs(const FunctionSpec& fs, const Interval& iv, CompanionPoint x,
                          double abs_tol = kIdentityQuadTol);

// Both sides of the midpoint-gradient identity, equal up to quadrature:
//   lhs = (1/(b-a)) int f - f(x) + (x-(a+b)/2) f'(x)
//   rhs = ((x-a)^3/(2(b-a))) int_0^1 t^2 f''(tx+(1-t)a) dt
//       + ((b-x)^3/(2(b-a))) int_0^1 t^2 f''(tx+(1-t)b) dt
struct IdentityPair {
    Estimate lhs;
    Estimate rhs;
};
IdentityPair set_identity_pair(const FunctionSpec& fs, const Interval& iv, double x,
                               double abs_tol = kIdentityQuadTol);

/// Companion bound for |f''| s-convex on [a, b], x in [a, (a+b)/2].
double bound_sconvex_abs(const FunctionSpec& fs, const Interval& iv, double x, SParam s);

/// Companion bound for |f''|^q s-convex (Hoelder split), x in [a, (a+b)/2].
double bound_sconvex_power(const FunctionSpec& fs, const Interval& iv, double x, SParam s,
                           HoelderPair hp);

/// Companion bound for |f''|^q s-concave, x in [a, (a+b)/2].
double bound_sconcave_power(const FunctionSpec& fs, const Interval& iv, double x, SParam s,
                            HoelderPair hp);

/// Midpoint-gradient bound for |f''|^q s-concave, x in [a, b]. Pairs
/// with |set_identity_pair().lhs|. Second midpoint is (x+b)/2.
double bound_thm12(const FunctionSpec& fs, const Interval& iv, double x, SParam s,
                   HoelderPair hp);

/// Known-bad variant kept under regression: repeats (x+a)/2 in the
/// second term of bound_thm12. Violated e.g. by pow:2.5 on [0,2] at
/// x=a; never use outside tests.
double bound_thm12_bad_midpoint(const FunctionSpec& fs, const Interval& iv, double x,
                                SParam s, HoelderPair hp);

// Chain for s-convex nonnegative f:
//   2^{s-1} f((a+b)/2)  <=  (1/(b-a)) int f  <=  (f(a)+f(b))/(s+1).
struct HadamardTriple {
    double lower;
    double mean;
    double upper;
    double quad_error;
};
HadamardTriple hadamard_triple(const FunctionSpec& fs, const Interval& iv, SParam s,
                               double abs_tol = kIdentityQuadTol);

/// M (b-a) [ 1/4 + ((x - (a+b)/2)/(b-a))^2 ] for sup|f'| <= M.
double classical_ostrowski_bound(double M, const Interval& iv, double x);

// Fixed-point closed forms. Implemented independently of the parent
// bounds; the equality against the parent at the designated x is part
// of the test surface, not an alias.
double cor_2_3_1(const FunctionSpec& fs, const Interval& iv, SParam s);
double cor_2_3_2(const FunctionSpec& fs, const Interval& iv, SParam s);
double cor_2_7_1(const FunctionSpec& fs, const Interval& iv, SParam s, HoelderPair hp);
double cor_2_7_2(const FunctionSpec& fs, const Interval& iv, SParam s, HoelderPair hp);
double cor_2_8(const FunctionSpec& fs, const Interval& iv, SParam s, HoelderPair hp);
double cor_2_11(const FunctionSpec& fs, const Interval& iv, SParam s, HoelderPair hp);
double cor_1_1(const FunctionSpec& fs, const Interval& iv, SParam s, HoelderPair hp);

} // namespace sconv::companions

#endif
