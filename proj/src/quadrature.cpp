#include "sconv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace sconv::quad {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Nodes/weights from the standard tabulation (QUADPACK).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

// Weights of the embedded Gauss rule (nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7]).
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;  // K15 estimate
    double err;    // local error indicator
};

struct PanelWorse {
    bool operator()(const Panel& lhs, const Panel& rhs) const { return lhs.err < rhs.err; }
};

Panel evaluate_panel(const std::function<double(double)>& fn, double a, double b) {
    const double half = (b - a) / 2;
    const double center = (a + b) / 2;

    double fv[15];
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kXgk[i];
        fv[i] = fn(center - dx);
        if (i < 7) fv[14 - i] = fn(center + dx);
    }
    for (int i = 0; i < 15; ++i) {
        if (!std::isfinite(fv[i]))
            throw DomainError("non-finite integrand evaluation inside panel");
    }

    double resk = 0, resg = 0, resabs = 0;
    for (int i = 0; i < 8; ++i) {
        const double pair = (i < 7) ? fv[i] + fv[14 - i] : fv[7];
        const double pabs = (i < 7) ? std::abs(fv[i]) + std::abs(fv[14 - i]) : std::abs(fv[7]);
        resk += kWgk[i] * pair;
        resabs += kWgk[i] * pabs;
        if (i % 2 == 1) resg += kWg[i / 2] * pair;
    }

    const double mean = resk / 2;
    double resasc = 0;
    for (int i = 0; i < 8; ++i) {
        resasc += kWgk[i] * (std::abs(fv[i] - mean) +
                             ((i < 7) ? std::abs(fv[14 - i] - mean) : 0.0));
    }
    resasc *= half;
    resabs *= half;

    // QUADPACK-style conditioning of the raw |K15 - G7| indicator.
    double err = std::abs(resk - resg) * half;
    if (resasc != 0 && err != 0)
        err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50 * eps * resabs);

    return Panel{a, b, resk * half, err};
}

} // namespace

QuadratureResult integrate(const Integrand& g, double a, double b, double abs_tol) {
    if (!(a < b)) throw InvalidParameter("integration requires a < b");
    if (!(abs_tol > 0)) throw InvalidParameter("integration requires abs_tol > 0");
    if (a < g.domain.a || b > g.domain.b)
        throw DomainError("integration range leaves the integrand domain");

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> panels;
    Panel first = evaluate_panel(g.fn, a, b);
    double total = first.value;
    double total_err = first.err;
    panels.push(first);

    while (total_err > abs_tol && static_cast<int>(panels.size()) < kMaxPanels) {
        Panel worst = panels.top();
        panels.pop();
        const double mid = (worst.a + worst.b) / 2;
        if (mid <= worst.a || mid >= worst.b) {
            // Panel is at floating-point resolution; cannot refine further.
            panels.push(worst);
            break;
        }
        Panel left = evaluate_panel(g.fn, worst.a, mid);
        Panel right = evaluate_panel(g.fn, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        panels.push(left);
        panels.push(right);
    }

    const int n = static_cast<int>(panels.size());
    if (total_err > abs_tol)
        throw NumericalFailure("quadrature tolerance not met within panel budget", total,
                               total_err);
    if (!std::isfinite(total))
        throw DomainError("quadrature accumulated a non-finite value");
    return QuadratureResult{total, total_err, n};
}

QuadratureResult integrate(const std::function<double(double)>& fn, double a, double b,
                           double abs_tol) {
    return integrate(Integrand{fn, Interval(a, b)}, a, b, abs_tol);
}

} // namespace sconv::quad
