#include "sconv/companions.hpp"

#include <cmath>

namespace sconv::companions {
namespace {

using quad::integrate;

void require_full_domain(const FunctionSpec& fs, const Interval& iv) {
    if (iv.a < fs.domain_min)
        throw DomainError("interval starts below the derivative domain of " + fs.name);
}

void require_value_domain(const FunctionSpec& fs, const Interval& iv) {
    if (iv.a < fs.value_domain_min)
        throw DomainError("interval starts below the admissible domain of " + fs.name);
}

double checked(const std::function<double(double)>& f, double t) {
    const double v = f(t);
    if (!std::isfinite(v)) throw DomainError("non-finite function evaluation");
    return v;
}

double d2abs(const FunctionSpec& fs, double t) { return std::abs(checked(fs.f2, t)); }

double cube(double v) { return v * v * v; }

void require_companion_point(double x, const Interval& iv) {
    if (!(iv.a <= x && x <= iv.midpoint()))
        throw InvalidParameter("companion point must lie in [a, (a+b)/2]");
}

// (u^q + v^q)^{1/q}
double qsum(double u, double v, double q) {
    return std::pow(std::pow(u, q) + std::pow(v, q), 1 / q);
}

double concavity_prefactor(double s, const HoelderPair& hp) {
    return std::pow(2.0, (s - 1) / hp.q) / std::pow(2 * hp.p + 1, 1 / hp.p);
}

} // namespace

Estimate integral_mean(const FunctionSpec& fs, const Interval& iv, double abs_tol) {
    require_value_domain(fs, iv);
    const auto r = integrate(fs.f, iv.a, iv.b, abs_tol);
    return Estimate{r.value / iv.width(), r.error_estimate / iv.width()};
}

Estimate companion_deviation(const FunctionSpec& fs, const Interval& iv, CompanionPoint x,
                             double abs_tol) {
    require_full_domain(fs, iv);
    const Estimate mean = integral_mean(fs, iv, abs_tol);
    const double y = iv.reflect(x.x);
    const double avg = (checked(fs.f, x.x) + checked(fs.f, y)) / 2;
    const double lever = x.x - (3 * iv.a + iv.b) / 4;
    const double bracket = lever / 2 * (checked(fs.f1, x.x) - checked(fs.f1, y));
    return Estimate{mean.value - avg + bracket, mean.quad_error};
}

Estimate liu_identity_rhs(const FunctionSpec& fs, const Interval& iv, CompanionPoint x,
                          double abs_tol) {
    require_full_domain(fs, iv);
    const double a = iv.a, b = iv.b, m = iv.midpoint(), y = iv.reflect(x.x);
    const double part_tol = abs_tol / 3;

    double total = 0, err = 0;
    if (x.x > a) {
        const auto r = integrate(
            [&](double t) { return (t - a) * (t - a) * checked(fs.f2, t); }, a, x.x, part_tol);
        total += r.value;
        err += r.error_estimate;
    }
    if (x.x < m) {
        const auto r = integrate(
            [&](double t) { return (t - m) * (t - m) * checked(fs.f2, t); }, x.x, y, part_tol);
        total += r.value;
        err += r.error_estimate;
    }
    if (x.x > a) {
        const auto r = integrate(
            [&](double t) { return (t - b) * (t - b) * checked(fs.f2, t); }, y, b, part_tol);
        total += r.value;
        err += r.error_estimate;
    }
    const double scale = 2 * iv.width();
    return Estimate{total / scale, err / scale};
}

IdentityPair set_identity_pair(const FunctionSpec& fs, const Interval& iv, double x,
                               double abs_tol) {
    require_full_domain(fs, iv);
    if (!iv.contains(x)) throw InvalidParameter("evaluation point must lie in [a, b]");

    const Estimate mean = integral_mean(fs, iv, abs_tol);
    const double lhs =
        mean.value - checked(fs.f, x) + (x - iv.midpoint()) * checked(fs.f1, x);

    double rhs = 0, rhs_err = 0;
    const double wa = cube(x - iv.a) / (2 * iv.width());
    const double wb = cube(iv.b - x) / (2 * iv.width());
    if (wa > 0) {
        const auto r = integrate(
            [&](double t) { return t * t * checked(fs.f2, t * x + (1 - t) * iv.a); }, 0, 1,
            abs_tol / 2);
        rhs += wa * r.value;
        rhs_err += wa * r.error_estimate;
    }
    if (wb > 0) {
        const auto r = integrate(
            [&](double t) { return t * t * checked(fs.f2, t * x + (1 - t) * iv.b); }, 0, 1,
            abs_tol / 2);
        rhs += wb * r.value;
        rhs_err += wb * r.error_estimate;
    }
    return IdentityPair{Estimate{lhs, mean.quad_error}, Estimate{rhs, rhs_err}};
}

double bound_sconvex_abs(const FunctionSpec& fs, const Interval& iv, double x, SParam sp) {
    require_full_domain(fs, iv);
    require_companion_point(x, iv);
    const double s = sp.s;
    const double denom = (s + 1) * (s + 2) * (s + 3) * iv.width();
    const double outer = cube(x - iv.a) / denom * (d2abs(fs, iv.a) + d2abs(fs, iv.b));
    const double inner = (4 * (s * s + 3 * s + 2) * cube(x - iv.a) +
                          (s * s + s + 2) * cube(iv.a + iv.b - 2 * x)) /
                         (8 * denom) * (d2abs(fs, x) + d2abs(fs, iv.reflect(x)));
    return outer + inner;
}

double bound_sconvex_power(const FunctionSpec& fs, const Interval& iv, double x, SParam sp,
                           HoelderPair hp) {
    require_full_domain(fs, iv);
    require_companion_point(x, iv);
    const double da = d2abs(fs, iv.a), dx = d2abs(fs, x);
    const double dy = d2abs(fs, iv.reflect(x)), db = d2abs(fs, iv.b);
    const double pref = 1 / (2 * iv.width() * std::pow(2 * hp.p + 1, 1 / hp.p) *
                             std::pow(sp.s + 1, 1 / hp.q));
    return pref * (cube(x - iv.a) * qsum(da, dx, hp.q) +
                   cube(iv.a + iv.b - 2 * x) / 4 * qsum(dx, dy, hp.q) +
                   cube(x - iv.a) * qsum(dy, db, hp.q));
}

double bound_sconcave_power(const FunctionSpec& fs, const Interval& iv, double x, SParam sp,
                            HoelderPair hp) {
    require_full_domain(fs, iv);
    require_companion_point(x, iv);
    const double pref = concavity_prefactor(sp.s, hp) / (2 * iv.width());
    return pref * (cube(x - iv.a) * d2abs(fs, (x + iv.a) / 2) +
                   cube(iv.a + iv.b - 2 * x) / 4 * d2abs(fs, iv.midpoint()) +
                   cube(x - iv.a) * d2abs(fs, (iv.a + 2 * iv.b - x) / 2));
}

double bound_thm12(const FunctionSpec& fs, const Interval& iv, double x, SParam sp,
                   HoelderPair hp) {
    require_full_domain(fs, iv);
    if (!iv.contains(x)) throw InvalidParameter("evaluation point must lie in [a, b]");
    const double pref = concavity_prefactor(sp.s, hp) / iv.width();
    return pref *
           (cube(x - iv.a) * d2abs(fs, (x + iv.a) / 2) +
            cube(iv.b - x) * d2abs(fs, (x + iv.b) / 2)) /
           2;
}

double bound_thm12_bad_midpoint(const FunctionSpec& fs, const Interval& iv, double x,
                                SParam sp, HoelderPair hp) {
    require_full_domain(fs, iv);
    if (!iv.contains(x)) throw InvalidParameter("evaluation point must lie in [a, b]");
    const double pref = concavity_prefactor(sp.s, hp) / iv.width();
    const double repeated = d2abs(fs, (x + iv.a) / 2);
    return pref * (cube(x - iv.a) * repeated + cube(iv.b - x) * repeated) / 2;
}

HadamardTriple hadamard_triple(const FunctionSpec& fs, const Interval& iv, SParam sp,
                               double abs_tol) {
    require_value_domain(fs, iv);
    const Estimate mean = integral_mean(fs, iv, abs_tol);
    const double lower = std::pow(2.0, sp.s - 1) * checked(fs.f, iv.midpoint());
    const double upper = (checked(fs.f, iv.a) + checked(fs.f, iv.b)) / (sp.s + 1);
    return HadamardTriple{lower, mean.value, upper, mean.quad_error};
}

double classical_ostrowski_bound(double M, const Interval& iv, double x) {
    if (!(M >= 0)) throw InvalidParameter("Ostrowski bound requires M >= 0");
    if (!iv.contains(x)) throw InvalidParameter("evaluation point must lie in [a, b]");
    const double t = (x - iv.midpoint()) / iv.width();
    return M * iv.width() * (0.25 + t * t);
}

double cor_2_3_1(const FunctionSpec& fs, const Interval& iv, SParam sp) {
    require_full_domain(fs, iv);
    const double s = sp.s;
    const double pref = iv.width() * iv.width() / (8 * (s + 1) * (s + 2) * (s + 3));
    return pref * (d2abs(fs, iv.a) + (s * s + 3 * s + 2) * d2abs(fs, iv.midpoint()) +
                   d2abs(fs, iv.b));
}

double cor_2_3_2(const FunctionSpec& fs, const Interval& iv, SParam sp) {
    require_full_domain(fs, iv);
    const double s = sp.s;
    const double q1 = (3 * iv.a + iv.b) / 4, q3 = (iv.a + 3 * iv.b) / 4;
    const double pref = iv.width() * iv.width() / (128 * (s + 1) * (s + 2) * (s + 3));
    return pref * (2 * d2abs(fs, iv.a) +
                   (3 * s * s + 5 * s + 6) * (d2abs(fs, q1) + d2abs(fs, q3)) +
                   2 * d2abs(fs, iv.b));
}

double cor_2_7_1(const FunctionSpec& fs, const Interval& iv, SParam sp, HoelderPair hp) {
    require_full_domain(fs, iv);
    const double da = d2abs(fs, iv.a), dm = d2abs(fs, iv.midpoint()), db = d2abs(fs, iv.b);
    const double pref = iv.width() * iv.width() /
                        (16 * std::pow(sp.s + 1, 1 / hp.q) * std::pow(2 * hp.p + 1, 1 / hp.p));
    return pref * (qsum(da, dm, hp.q) + qsum(dm, db, hp.q));
}

double cor_2_7_2(const FunctionSpec& fs, const Interval& iv, SParam sp, HoelderPair hp) {
    require_full_domain(fs, iv);
    const double q1 = (3 * iv.a + iv.b) / 4, q3 = (iv.a + 3 * iv.b) / 4;
    const double da = d2abs(fs, iv.a), d1 = d2abs(fs, q1), d3 = d2abs(fs, q3),
                 db = d2abs(fs, iv.b);
    const double pref = iv.width() * iv.width() /
                        (128 * std::pow(2 * hp.p + 1, 1 / hp.p) * std::pow(sp.s + 1, 1 / hp.q));
    return pref * (qsum(da, d1, hp.q) + 2 * qsum(d1, d3, hp.q) + qsum(d3, db, hp.q));
}

double cor_2_8(const FunctionSpec& fs, const Interval& iv, SParam sp, HoelderPair hp) {
    require_full_domain(fs, iv);
    const double pref = iv.width() * iv.width() /
                        (8 * std::pow(2 * hp.p + 1, 1 / hp.p) * std::pow(sp.s + 1, 1 / hp.q));
    return pref * qsum(d2abs(fs, iv.a), d2abs(fs, iv.b), hp.q);
}

double cor_2_11(const FunctionSpec& fs, const Interval& iv, SParam sp, HoelderPair hp) {
    require_full_domain(fs, iv);
    const double pref = concavity_prefactor(sp.s, hp) * iv.width() * iv.width() / 128;
    return pref * (d2abs(fs, (7 * iv.a + iv.b) / 8) + 2 * d2abs(fs, iv.midpoint()) +
                   d2abs(fs, (iv.a + 7 * iv.b) / 8));
}

double cor_1_1(const FunctionSpec& fs, const Interval& iv, SParam sp, HoelderPair hp) {
    require_full_domain(fs, iv);
    const double pref = concavity_prefactor(sp.s, hp) * iv.width() * iv.width() / 16;
    return pref *
           (d2abs(fs, (3 * iv.a + iv.b) / 4) + d2abs(fs, (iv.a + 3 * iv.b) / 4));
}

} // namespace sconv::companions
