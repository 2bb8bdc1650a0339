#include "sconv/function_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sconv::funcat {
namespace {

bool is_integerish(double r) { return r == std::floor(r); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

double parse_number(const std::string& text) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw InvalidParameter("catalog name: bad numeric field '" + text + "'");
    }
    if (pos != text.size() || !std::isfinite(v))
        throw InvalidParameter("catalog name: bad numeric field '" + text + "'");
    return v;
}

} // namespace

FunctionSpec make_power_function(double r) {
    if (!std::isfinite(r)) throw InvalidParameter("power exponent must be finite");
    FunctionSpec fs;
    std::ostringstream name;
    name << "pow:" << r;
    fs.name = name.str();
    fs.f = [r](double x) { return std::pow(x, r); };
    fs.f1 = [r](double x) { return r == 0 ? 0.0 : r * std::pow(x, r - 1); };
    fs.f2 = [r](double x) {
        return (r == 0 || r == 1) ? 0.0 : r * (r - 1) * std::pow(x, r - 2);
    };
    const bool whole_axis = r >= 2 || r == 0 || r == 1;
    fs.domain_min = whole_axis ? 0.0 : kFractionalPowerFloor;
    // f itself is finite at 0 for any nonnegative exponent.
    fs.value_domain_min = (r >= 0) ? 0.0 : kFractionalPowerFloor;
    if (is_integerish(r) && r >= 0 && std::fmod(r, 2.0) == 0) fs.symmetry_center = 0.0;
    return fs;
}

FunctionSpec make_polynomial(const std::vector<double>& coeffs) {
    if (coeffs.empty() || coeffs.size() > 5)
        throw InvalidParameter("polynomial catalog entries take 1..5 coefficients");
    for (double c : coeffs)
        if (!std::isfinite(c)) throw InvalidParameter("polynomial coefficient must be finite");

    FunctionSpec fs;
    std::ostringstream name;
    name << "poly:";
    for (std::size_t i = 0; i < coeffs.size(); ++i) name << (i ? "," : "") << coeffs[i];
    fs.name = name.str();

    auto horner = [](const std::vector<double>& c, double x) {
        double acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    std::vector<double> d1, d2;
    for (std::size_t i = 1; i < coeffs.size(); ++i) d1.push_back(coeffs[i] * double(i));
    for (std::size_t i = 1; i < d1.size(); ++i) d2.push_back(d1[i] * double(i));

    fs.f = [coeffs, horner](double x) { return horner(coeffs, x); };
    fs.f1 = [d1, horner](double x) { return d1.empty() ? 0.0 : horner(d1, x); };
    fs.f2 = [d2, horner](double x) { return d2.empty() ? 0.0 : horner(d2, x); };
    return fs;
}

FunctionSpec make_exp() {
    FunctionSpec fs;
    fs.name = "exp";
    fs.f = [](double x) { return std::exp(x); };
    fs.f1 = fs.f;
    fs.f2 = fs.f;
    return fs;
}

FunctionSpec negate(FunctionSpec base) {
    FunctionSpec fs = std::move(base);
    fs.name = "neg:" + fs.name;
    auto f = fs.f, f1 = fs.f1, f2 = fs.f2;
    fs.f = [f](double x) { return -f(x); };
    fs.f1 = [f1](double x) { return -f1(x); };
    fs.f2 = [f2](double x) { return -f2(x); };
    return fs;
}

FunctionSpec shift(FunctionSpec base, double offset) {
    if (!std::isfinite(offset)) throw InvalidParameter("shift offset must be finite");
    FunctionSpec fs = std::move(base);
    std::ostringstream name;
    name << "shift:" << offset << ":" << fs.name;
    fs.name = name.str();
    auto f = fs.f;
    fs.f = [f, offset](double x) { return f(x) + offset; };
    return fs;
}

FunctionSpec lookup(const std::string& name) {
    if (name == "exp") return make_exp();
    if (name.rfind("pow:", 0) == 0) return make_power_function(parse_number(name.substr(4)));
    if (name.rfind("poly:", 0) == 0) {
        std::vector<double> coeffs;
        for (const auto& field : split(name.substr(5), ','))
            coeffs.push_back(parse_number(field));
        return make_polynomial(coeffs);
    }
    if (name.rfind("neg:", 0) == 0) return negate(lookup(name.substr(4)));
    if (name.rfind("shift:", 0) == 0) {
        const auto rest = name.substr(6);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw InvalidParameter("catalog name: shift needs 'shift:<c>:<name>'");
        return shift(lookup(rest.substr(colon + 1)), parse_number(rest.substr(0, colon)));
    }
    throw InvalidParameter("unknown catalog entry '" + name + "'");
}

const std::vector<std::string>& default_catalog_names() {
    static const std::vector<std::string> names = {
        "pow:0",        "pow:0.5",      "pow:1",   "pow:1.5",
        "pow:2",        "pow:2.2",      "pow:2.5", "pow:2.75",
        "pow:3",        "pow:3.5",      "pow:4",   "pow:5",
        "exp",          "neg:exp",      "neg:pow:2", "neg:pow:0.5",
        "shift:3:pow:2", "shift:2:pow:1", "poly:0,0,1,1", "poly:5,-1,3,0,1",
        "poly:1,2,2",
    };
    return names;
}

double derivative_mismatch(const std::function<double(double)>& value,
                           const std::function<double(double)>& deriv, const Interval& iv,
                           int n_points) {
    if (n_points < 1) throw InvalidParameter("derivative check needs n_points >= 1");
    double worst = 0;
    for (int i = 0; i < n_points; ++i) {
        // Interior points only; keep the 5-point stencil inside [a, b].
        const double t = (i + 1.0) / (n_points + 1.0);
        const double x = iv.a + t * iv.width();
        double h = 1e-3 * (1 + std::abs(x));
        h = std::min({h, (x - iv.a) / 3, (iv.b - x) / 3});
        if (!(h > 0)) continue;
        const double fd =
            (value(x - 2 * h) - 8 * value(x - h) + 8 * value(x + h) - value(x + 2 * h)) /
            (12 * h);
        const double exact = deriv(x);
        if (!std::isfinite(fd) || !std::isfinite(exact))
            throw DomainError("non-finite sample in derivative consistency check");
        worst = std::max(worst, std::abs(fd - exact) / (1 + std::abs(exact)));
    }
    return worst;
}

} // namespace sconv::funcat
