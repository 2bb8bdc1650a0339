#include "sconv/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <sstream>
#include <thread>

#include "sconv/companions.hpp"
#include "sconv/convexity.hpp"
#include "sconv/means.hpp"

namespace sconv::sweep {
namespace {

constexpr double kQuadTol = companions::kIdentityQuadTol;

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string bits(double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, sizeof(u));
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(u));
    return buf;
}

double sample_sup_abs_deriv(const funcat::FunctionSpec& fs, const Interval& iv) {
    constexpr int kPoints = 4097;
    double sup = 0;
    for (int i = 0; i < kPoints; ++i) {
        const double t = iv.a + iv.width() * i / (kPoints - 1);
        const double v = std::abs(fs.f1(t));
        if (!std::isfinite(v)) throw DomainError("non-finite f' while bounding sup|f'|");
        sup = std::max(sup, v);
    }
    return sup;
}

bool sampled_nonnegative(const funcat::FunctionSpec& fs, const Interval& iv) {
    constexpr int kPoints = 257;
    for (int i = 0; i < kPoints; ++i) {
        const double t = iv.a + iv.width() * i / (kPoints - 1);
        const double v = fs.f(t);
        if (!std::isfinite(v)) throw DomainError("non-finite f while checking nonnegativity");
        if (v < 0) return false;
    }
    return true;
}

} // namespace

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::thm2_1: return "thm2.1";
        case TheoremId::thm2_2: return "thm2.2";
        case TheoremId::thm2_3: return "thm2.3";
        case TheoremId::thm1_2: return "thm1.2";
        case TheoremId::cor2_3_1: return "cor2.3.1";
        case TheoremId::cor2_3_2: return "cor2.3.2";
        case TheoremId::cor2_7_1: return "cor2.7.1";
        case TheoremId::cor2_7_2: return "cor2.7.2";
        case TheoremId::cor2_8: return "cor2.8";
        case TheoremId::cor2_11: return "cor2.11";
        case TheoremId::cor1_1: return "cor1.1";
        case TheoremId::hadamard: return "hadamard";
        case TheoremId::ostrowski_classical: return "ostrowski_classical";
        case TheoremId::prop3_1a: return "prop3.1a";
        case TheoremId::prop3_1b: return "prop3.1b";
        case TheoremId::prop3_2: return "prop3.2";
        case TheoremId::prop3_3: return "prop3.3";
    }
    throw InvalidParameter("unknown theorem id");
}

TheoremId parse_theorem_id(const std::string& text) {
    static const std::pair<const char*, TheoremId> table[] = {
        {"thm2.1", TheoremId::thm2_1},
        {"thm2.2", TheoremId::thm2_2},
        {"thm2.3", TheoremId::thm2_3},
        {"thm1.2", TheoremId::thm1_2},
        {"cor2.3.1", TheoremId::cor2_3_1},
        {"cor2.3.2", TheoremId::cor2_3_2},
        {"cor2.7.1", TheoremId::cor2_7_1},
        {"cor2.7.2", TheoremId::cor2_7_2},
        {"cor2.8", TheoremId::cor2_8},
        {"cor2.11", TheoremId::cor2_11},
        {"cor1.1", TheoremId::cor1_1},
        {"hadamard", TheoremId::hadamard},
        {"ostrowski_classical", TheoremId::ostrowski_classical},
        {"prop3.1a", TheoremId::prop3_1a},
        {"prop3.1b", TheoremId::prop3_1b},
        {"prop3.2", TheoremId::prop3_2},
        {"prop3.3", TheoremId::prop3_3},
    };
    for (const auto& [name, id] : table)
        if (text == name) return id;
    throw InvalidParameter("unknown theorem id '" + text + "'");
}

bool needs_q(TheoremId id) {
    switch (id) {
        case TheoremId::thm2_2:
        case TheoremId::thm2_3:
        case TheoremId::thm1_2:
        case TheoremId::cor2_7_1:
        case TheoremId::cor2_7_2:
        case TheoremId::cor2_8:
        case TheoremId::cor2_11:
        case TheoremId::cor1_1:
        case TheoremId::prop3_2:
        case TheoremId::prop3_3: return true;
        default: return false;
    }
}

bool needs_x(TheoremId id) {
    switch (id) {
        case TheoremId::thm2_1:
        case TheoremId::thm2_2:
        case TheoremId::thm2_3:
        case TheoremId::thm1_2:
        case TheoremId::ostrowski_classical: return true;
        default: return false;
    }
}

bool x_spans_full_interval(TheoremId id) {
    return id == TheoremId::thm1_2 || id == TheoremId::ostrowski_classical;
}

void InequalityCase::validate() const {
    if (needs_x(theorem_id)) {
        if (!x) throw InvalidParameter(to_string(theorem_id) + " requires x");
        const double hi = x_spans_full_interval(theorem_id) ? interval.b : interval.midpoint();
        if (!(interval.a <= *x && *x <= hi))
            throw InvalidParameter("x outside the admissible range for " +
                                   to_string(theorem_id));
    } else if (x) {
        throw InvalidParameter(to_string(theorem_id) + " takes no x");
    }
    if (needs_q(theorem_id)) {
        if (!q || !(*q > 1))
            throw InvalidParameter(to_string(theorem_id) + " requires q > 1");
    } else if (q) {
        throw InvalidParameter(to_string(theorem_id) + " takes no q");
    }
    const bool is_prop = theorem_id == TheoremId::prop3_1a ||
                         theorem_id == TheoremId::prop3_1b ||
                         theorem_id == TheoremId::prop3_2 || theorem_id == TheoremId::prop3_3;
    if (is_prop) {
        if (!(s > 0 && s < 1))
            throw InvalidParameter(to_string(theorem_id) + " requires 0 < s < 1");
        if (!(interval.a > 0))
            throw InvalidParameter(to_string(theorem_id) + " requires 0 < a < b");
    } else {
        SParam check(s);
    }
}

void SweepConfig::validate() const {
    if (x_count < 2) throw InvalidParameter("sweep needs x_count >= 2");
    if (n_samples < 1) throw InvalidParameter("sweep needs n_samples >= 1");
    if (jobs < 1) throw InvalidParameter("sweep needs jobs >= 1");
    if (theorems.empty()) throw InvalidParameter("sweep needs at least one theorem");
    bool any_q = false, any_s = !theorems.empty();
    for (TheoremId t : theorems) any_q = any_q || needs_q(t);
    if (any_s && s_values.empty()) throw InvalidParameter("sweep needs s values");
    if (any_q && q_values.empty())
        throw InvalidParameter("sweep includes Hoelder cases but has no q values");
    for (const std::string& name : functions) funcat::lookup(name);  // fail fast
}

EvaluationContext::EvaluationContext(double tolerance, int n_samples, std::uint64_t seed)
    : tolerance_(tolerance), n_samples_(n_samples), seed_(seed) {}

bool EvaluationContext::certify(const std::string& kind, const funcat::FunctionSpec& fs,
                                const Interval& iv, double s, std::optional<double> q,
                                const std::function<double(double)>& g, bool concave) {
    const std::string key = kind + "|" + fs.name + "|" + bits(iv.a) + "|" + bits(iv.b) + "|" +
                            bits(s) + "|" + bits(q ? *q : std::nan(""));
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cert_cache_.find(key);
        if (it != cert_cache_.end()) return it->second;
    }
    const std::uint64_t cert_seed = seed_ ^ fnv1a(key);
    const auto report = concave
                            ? funcat::check_s_concavity_of(g, iv, s, n_samples_, cert_seed)
                            : funcat::check_s_convexity_of(g, iv, s, n_samples_, cert_seed);
    std::lock_guard<std::mutex> lock(mutex_);
    cert_cache_.emplace(key, report.pass);
    return report.pass;
}

EvaluationResult EvaluationContext::evaluate(const InequalityCase& c) {
    c.validate();
    try {
        const Interval& iv = c.interval;
        const SParam sp(c.s);
        switch (c.theorem_id) {
            case TheoremId::thm2_1:
            case TheoremId::cor2_3_1:
            case TheoremId::cor2_3_2: {
                const auto fs = funcat::lookup(c.function_name);
                double x = c.x ? *c.x : 0;
                double rhs = 0;
                if (c.theorem_id == TheoremId::thm2_1) {
                    rhs = companions::bound_sconvex_abs(fs, iv, x, sp);
                } else if (c.theorem_id == TheoremId::cor2_3_1) {
                    x = iv.midpoint();
                    rhs = companions::cor_2_3_1(fs, iv, sp);
                } else {
                    x = (3 * iv.a + iv.b) / 4;
                    rhs = companions::cor_2_3_2(fs, iv, sp);
                }
                const bool ok = certify(
                    "abs-f2-sconvex", fs, iv, c.s, std::nullopt,
                    [&fs](double t) { return std::abs(fs.f2(t)); }, /*concave=*/false);
                const auto dev = companions::companion_deviation(fs, iv, {x, iv}, kQuadTol);
                return make_result(dev.value, rhs, dev.quad_error, ok, tolerance_);
            }
            case TheoremId::thm2_2:
            case TheoremId::cor2_7_1:
            case TheoremId::cor2_7_2:
            case TheoremId::cor2_8: {
                const auto fs = funcat::lookup(c.function_name);
                const HoelderPair hp(*c.q);
                double x = c.x ? *c.x : 0;
                double rhs = 0;
                if (c.theorem_id == TheoremId::thm2_2) {
                    rhs = companions::bound_sconvex_power(fs, iv, x, sp, hp);
                } else if (c.theorem_id == TheoremId::cor2_7_1) {
                    x = iv.midpoint();
                    rhs = companions::cor_2_7_1(fs, iv, sp, hp);
                } else if (c.theorem_id == TheoremId::cor2_7_2) {
                    x = (3 * iv.a + iv.b) / 4;
                    rhs = companions::cor_2_7_2(fs, iv, sp, hp);
                } else {
                    x = iv.a;  // identity-complete deviation at x = a
                    rhs = companions::cor_2_8(fs, iv, sp, hp);
                }
                const bool ok = certify(
                    "pow-f2-sconvex", fs, iv, c.s, c.q,
                    [&fs, q = hp.q](double t) { return std::pow(std::abs(fs.f2(t)), q); },
                    /*concave=*/false);
                const auto dev = companions::companion_deviation(fs, iv, {x, iv}, kQuadTol);
                return make_result(dev.value, rhs, dev.quad_error, ok, tolerance_);
            }
            case TheoremId::thm2_3:
            case TheoremId::cor2_11: {
                const auto fs = funcat::lookup(c.function_name);
                const HoelderPair hp(*c.q);
                double x = c.x ? *c.x : (3 * iv.a + iv.b) / 4;
                const double rhs = c.theorem_id == TheoremId::thm2_3
                                       ? companions::bound_sconcave_power(fs, iv, x, sp, hp)
                                       : companions::cor_2_11(fs, iv, sp, hp);
                const bool ok = certify(
                    "pow-f2-sconcave", fs, iv, c.s, c.q,
                    [&fs, q = hp.q](double t) { return std::pow(std::abs(fs.f2(t)), q); },
                    /*concave=*/true);
                const auto dev = companions::companion_deviation(fs, iv, {x, iv}, kQuadTol);
                return make_result(dev.value, rhs, dev.quad_error, ok, tolerance_);
            }
            case TheoremId::thm1_2:
            case TheoremId::cor1_1: {
                const auto fs = funcat::lookup(c.function_name);
                const HoelderPair hp(*c.q);
                const double x = c.x ? *c.x : iv.midpoint();
                const double rhs = c.theorem_id == TheoremId::thm1_2
                                       ? companions::bound_thm12(fs, iv, x, sp, hp)
                                       : companions::cor_1_1(fs, iv, sp, hp);
                const bool ok = certify(
                    "pow-f2-sconcave", fs, iv, c.s, c.q,
                    [&fs, q = hp.q](double t) { return std::pow(std::abs(fs.f2(t)), q); },
                    /*concave=*/true);
                const auto pair = companions::set_identity_pair(fs, iv, x, kQuadTol);
                return make_result(pair.lhs.value, rhs, pair.lhs.quad_error, ok, tolerance_);
            }
            case TheoremId::hadamard: {
                const auto fs = funcat::lookup(c.function_name);
                const bool ok =
                    certify("f-sconvex", fs, iv, c.s, std::nullopt, fs.f, false) &&
                    sampled_nonnegative(fs, iv);
                const auto t = companions::hadamard_triple(fs, iv, sp, kQuadTol);
                EvaluationResult r;
                r.lhs = t.mean;
                r.rhs = t.upper;
                // slack is the binding side of the chain.
                r.slack = std::min(t.mean - t.lower, t.upper - t.mean);
                r.tightness = t.upper > 0 ? std::abs(t.mean) / t.upper
                              : (t.mean == 0 ? 0
                                             : std::numeric_limits<double>::infinity());
                r.quad_error = t.quad_error;
                r.hypothesis_certified = ok;
                const double tol = tolerance_ * (1 + std::abs(t.mean)) + 5 * t.quad_error;
                if (!std::isfinite(r.slack)) r.verdict = Verdict::numerical_failure;
                else if (!ok) r.verdict = Verdict::hypothesis_failed;
                else r.verdict = r.slack >= -tol ? Verdict::holds : Verdict::violated;
                return r;
            }
            case TheoremId::ostrowski_classical: {
                const auto fs = funcat::lookup(c.function_name);
                if (iv.a < fs.domain_min)
                    throw DomainError("interval starts below the derivative domain");
                const double M = sample_sup_abs_deriv(fs, iv);
                const double rhs = companions::classical_ostrowski_bound(M, iv, *c.x);
                const auto mean = companions::integral_mean(fs, iv, kQuadTol);
                const double lhs = fs.f(*c.x) - mean.value;
                return make_result(lhs, rhs, mean.quad_error, true, tolerance_);
            }
            case TheoremId::prop3_1a:
            case TheoremId::prop3_1b:
            case TheoremId::prop3_2:
            case TheoremId::prop3_3: {
                means::PropositionId pid;
                bool hoelder = false;
                switch (c.theorem_id) {
                    case TheoremId::prop3_1a: pid = means::PropositionId::p3_1a; break;
                    case TheoremId::prop3_1b: pid = means::PropositionId::p3_1b; break;
                    case TheoremId::prop3_2:
                        pid = means::PropositionId::p3_2;
                        hoelder = true;
                        break;
                    default:
                        pid = means::PropositionId::p3_3;
                        hoelder = true;
                        break;
                }
                // The hypothesis behind the underlying corollary: |f''| of
                // x^s (or its q-th power) is s-convex; re-certified, not
                // assumed.
                auto fs = funcat::make_power_function(c.s);
                std::function<double(double)> g;
                if (hoelder) {
                    g = [fs, q = *c.q](double t) { return std::pow(std::abs(fs.f2(t)), q); };
                } else {
                    g = [fs](double t) { return std::abs(fs.f2(t)); };
                }
                const bool ok = certify(hoelder ? "pow-f2-sconvex" : "abs-f2-sconvex", fs, iv,
                                        c.s, c.q, g, false);
                const double lhs = means::proposition_lhs(pid, iv.a, iv.b, c.s);
                const double rhs = means::proposition_rhs(pid, iv.a, iv.b, c.s, c.q);
                return make_result(lhs, rhs, 0.0, ok, tolerance_);
            }
        }
        throw InvalidParameter("unknown theorem id");
    } catch (const NumericalFailure&) {
        EvaluationResult r;
        r.verdict = Verdict::numerical_failure;
        return r;
    } catch (const DomainError&) {
        EvaluationResult r;
        r.verdict = Verdict::numerical_failure;
        return r;
    }
}

EvaluationResult evaluate_case(const InequalityCase& c) {
    EvaluationContext ctx;
    return ctx.evaluate(c);
}

namespace {

std::vector<InequalityCase> expand_grid(const SweepConfig& cfg) {
    std::vector<InequalityCase> grid;
    auto is_prop = [](TheoremId t) {
        return t == TheoremId::prop3_1a || t == TheoremId::prop3_1b ||
               t == TheoremId::prop3_2 || t == TheoremId::prop3_3;
    };
    for (TheoremId t : cfg.theorems) {
        // Propositions are intrinsically about f(x) = x^s; the function
        // dimension collapses to that single entry.
        const std::vector<std::string> fn_axis =
            is_prop(t) ? std::vector<std::string>{std::string()} : cfg.functions;
        for (const std::string& fn : fn_axis) {
            for (const Interval& iv : cfg.intervals) {
                for (double s : cfg.s_values) {
                    if (is_prop(t) && !(s > 0 && s < 1)) continue;
                    std::string case_fn = fn;
                    if (is_prop(t)) {
                        std::ostringstream name;
                        name << "pow:" << s;
                        case_fn = name.str();
                    }
                    std::vector<std::optional<double>> qs;
                    if (needs_q(t))
                        for (double q : cfg.q_values) qs.emplace_back(q);
                    else
                        qs.emplace_back(std::nullopt);
                    for (const auto& q : qs) {
                        if (needs_x(t)) {
                            const double hi =
                                x_spans_full_interval(t) ? iv.b : iv.midpoint();
                            for (int i = 0; i < cfg.x_count; ++i) {
                                const double x =
                                    iv.a + (hi - iv.a) * i / (cfg.x_count - 1);
                                grid.push_back({t, case_fn, iv, x, s, q});
                            }
                        } else {
                            grid.push_back({t, case_fn, iv, std::nullopt, s, q});
                        }
                    }
                }
            }
        }
    }
    return grid;
}

} // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const std::vector<InequalityCase> grid = expand_grid(cfg);

    EvaluationContext ctx(cfg.tolerance, cfg.n_samples, cfg.seed);
    std::vector<EvaluationResult> results(grid.size());

    if (cfg.jobs <= 1 || grid.size() < 2) {
        for (std::size_t i = 0; i < grid.size(); ++i) results[i] = ctx.evaluate(grid[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
                results[i] = ctx.evaluate(grid[i]);
        };
        std::vector<std::thread> pool;
        const int n = std::min<int>(cfg.jobs, static_cast<int>(grid.size()));
        pool.reserve(n);
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepReport report;
    report.records.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const EvaluationResult& r = results[i];
        report.records.push_back({grid[i], r});
        ++report.total;
        switch (r.verdict) {
            case Verdict::holds: ++report.holds; break;
            case Verdict::violated: ++report.violated; break;
            case Verdict::hypothesis_failed: ++report.hypothesis_failed; break;
            case Verdict::numerical_failure: ++report.numerical_failure; break;
        }
        const bool scored =
            r.verdict == Verdict::holds || r.verdict == Verdict::violated;
        if (scored && std::isfinite(r.slack)) {
            if (!report.min_slack_index ||
                r.slack < report.records[*report.min_slack_index].r.slack)
                report.min_slack_index = i;
        }
    }
    if (!report.min_slack_index && report.total > 0) report.min_slack_index = 0;
    return report;
}

} // namespace sconv::sweep
