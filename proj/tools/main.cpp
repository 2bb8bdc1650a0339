// Command-line front end: single-case verification, config-driven
// sweeps, identity residual reports, convexity certification, and the
// special-means propositions.
//
// Exit codes: 0 all holds, 1 violation found, 2 usage/config error,
// 3 numerical failure encountered.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sconv/companions.hpp"
#include "sconv/config.hpp"
#include "sconv/convexity.hpp"
#include "sconv/means.hpp"
#include "sconv/report.hpp"
#include "sconv/sweep.hpp"

namespace {

using namespace sconv;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

Interval parse_interval(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw InvalidParameter("interval must be 'a,b', got '" + text + "'");
    try {
        return Interval(std::stod(text.substr(0, comma)),
                        std::stod(text.substr(comma + 1)));
    } catch (const InvalidParameter&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidParameter("interval must be 'a,b' with numeric endpoints, got '" +
                               text + "'");
    }
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InvalidParameter("cannot open output path '" + out_path + "'");
    out << content;
}

int exit_code_for(const sweep::SweepReport& report) {
    if (report.violated > 0) return kExitViolation;
    if (report.numerical_failure > 0) return kExitNumerical;
    return kExitOk;
}

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    double tolerance = 1e-9;
    int samples = 512;
    std::uint64_t seed = 0;
};

sweep::SweepReport single_case_report(const sweep::InequalityCase& c,
                                      const EvaluationResult& r) {
    sweep::SweepReport report;
    report.total = 1;
    switch (r.verdict) {
        case Verdict::holds: report.holds = 1; break;
        case Verdict::violated: report.violated = 1; break;
        case Verdict::hypothesis_failed: report.hypothesis_failed = 1; break;
        case Verdict::numerical_failure: report.numerical_failure = 1; break;
    }
    report.records.push_back({c, r});
    report.min_slack_index = 0;
    return report;
}

int run_verify(const std::string& theorem, const std::string& function,
               const std::string& interval, std::optional<double> x, double s,
               std::optional<double> q, const CommonOpts& opts) {
    sweep::InequalityCase c{sweep::parse_theorem_id(theorem), function,
                            parse_interval(interval), x, s, q};
    c.validate();
    sweep::EvaluationContext ctx(opts.tolerance, opts.samples, opts.seed);
    const EvaluationResult r = ctx.evaluate(c);

    if (opts.format == "text") {
        std::ostringstream line;
        line << "theorem=" << theorem << " function=" << function
             << " interval=" << interval;
        if (x) line << " x=" << io::format_double(*x);
        line << " s=" << io::format_double(s);
        if (q) line << " q=" << io::format_double(*q);
        line << "\nlhs=" << io::format_double(r.lhs) << " rhs=" << io::format_double(r.rhs)
             << " slack=" << io::format_double(r.slack)
             << " tightness=" << io::format_double(r.tightness)
             << " quad_error=" << io::format_double(r.quad_error)
             << " hypothesis_certified=" << (r.hypothesis_certified ? "true" : "false")
             << " verdict=" << to_string(r.verdict) << "\n";
        emit(line.str(), opts.out_path);
    } else {
        emit(io::render(single_case_report(c, r), io::parse_format(opts.format)),
             opts.out_path);
    }
    if (r.verdict == Verdict::violated) return kExitViolation;
    if (r.verdict == Verdict::numerical_failure) return kExitNumerical;
    return kExitOk;
}

int run_sweep_cmd(const std::string& config_path, std::optional<int> jobs,
                  std::optional<std::uint64_t> seed, std::optional<double> tol,
                  const CommonOpts& opts) {
    std::ifstream in(config_path);
    if (!in.good()) throw InvalidParameter("cannot read config '" + config_path + "'");
    auto configs = io::parse_sweep_configs(in);

    sweep::SweepReport merged;
    for (auto& cfg : configs) {
        if (jobs) cfg.jobs = *jobs;
        if (seed) cfg.seed = *seed;
        if (tol) cfg.tolerance = *tol;
        const auto report = sweep::run_sweep(cfg);
        const std::size_t offset = merged.records.size();
        merged.total += report.total;
        merged.holds += report.holds;
        merged.violated += report.violated;
        merged.hypothesis_failed += report.hypothesis_failed;
        merged.numerical_failure += report.numerical_failure;
        merged.records.insert(merged.records.end(), report.records.begin(),
                              report.records.end());
        if (report.min_slack_index) {
            const std::size_t idx = offset + *report.min_slack_index;
            if (!merged.min_slack_index ||
                merged.records[idx].r.slack <
                    merged.records[*merged.min_slack_index].r.slack)
                merged.min_slack_index = idx;
        }
    }
    emit(io::render(merged, io::parse_format(opts.format)), opts.out_path);
    return exit_code_for(merged);
}

int run_identity(const std::string& function, const std::string& interval,
                 std::optional<double> x_opt, int x_count, const std::string& which,
                 const CommonOpts& opts) {
    const auto fs = funcat::lookup(function);
    const Interval iv = parse_interval(interval);
    if (which != "companion" && which != "midpoint" && which != "both")
        throw InvalidParameter("--which takes companion, midpoint or both");
    if (x_count < 2) throw InvalidParameter("--x-count needs at least 2 points");

    std::ostringstream out;
    bool all_ok = true;
    auto check_companion = [&](double x) {
        const auto dev = companions::companion_deviation(fs, iv, {x, iv});
        const auto rep = companions::liu_identity_rhs(fs, iv, {x, iv});
        const double residual = std::abs(dev.value - rep.value);
        const double budget = 5 * (dev.quad_error + rep.quad_error) + 1e-13;
        const bool ok = residual <= budget;
        all_ok = all_ok && ok;
        out << "companion x=" << io::format_double(x)
            << " deviation=" << io::format_double(dev.value)
            << " representation=" << io::format_double(rep.value)
            << " residual=" << io::format_double(residual)
            << " budget=" << io::format_double(budget) << (ok ? " ok" : " VIOLATED")
            << "\n";
    };
    auto check_midpoint = [&](double x) {
        const auto [lhs, rhs] = companions::set_identity_pair(fs, iv, x);
        const double residual = std::abs(lhs.value - rhs.value);
        const double budget = 5 * (lhs.quad_error + rhs.quad_error) + 1e-13;
        const bool ok = residual <= budget;
        all_ok = all_ok && ok;
        out << "midpoint x=" << io::format_double(x)
            << " lhs=" << io::format_double(lhs.value)
            << " rhs=" << io::format_double(rhs.value)
            << " residual=" << io::format_double(residual)
            << " budget=" << io::format_double(budget) << (ok ? " ok" : " VIOLATED")
            << "\n";
    };

    if (which == "companion" || which == "both") {
        if (x_opt) check_companion(*x_opt);
        else
            for (int i = 0; i < x_count; ++i)
                check_companion(iv.a + (iv.midpoint() - iv.a) * i / (x_count - 1));
    }
    if (which == "midpoint" || which == "both") {
        if (x_opt) check_midpoint(*x_opt);
        else
            for (int i = 0; i < x_count; ++i)
                check_midpoint(iv.a + iv.width() * i / (x_count - 1));
    }
    emit(out.str(), opts.out_path);
    return all_ok ? kExitOk : kExitViolation;
}

int run_convexity(const std::string& function, const std::string& interval,
                  const std::string& cls, std::optional<double> s, bool estimate,
                  const CommonOpts& opts) {
    const auto fs = funcat::lookup(function);
    const Interval iv = parse_interval(interval);
    if (cls != "convex" && cls != "concave")
        throw InvalidParameter("--class takes convex or concave");

    std::ostringstream out;
    if (estimate || !s) {
        if (cls != "convex")
            throw InvalidParameter("max-s estimation is defined for the convex class");
        const double max_s =
            funcat::estimate_max_s(fs, iv, funcat::SamplingPlan{opts.samples, opts.seed});
        out << "function=" << function << " interval=" << interval
            << " max_s=" << io::format_double(max_s) << "\n";
        emit(out.str(), opts.out_path);
        return kExitOk;
    }

    const auto report = cls == "convex"
                            ? funcat::check_s_convexity(fs, iv, *s, opts.samples, opts.seed)
                            : funcat::check_s_concavity(fs, iv, *s, opts.samples, opts.seed);
    out << "function=" << function << " interval=" << interval << " class=s-" << cls
        << " s=" << io::format_double(*s) << " samples=" << report.samples
        << " max_violation=" << io::format_double(report.max_violation)
        << " tolerance=" << io::format_double(report.tolerance())
        << " verdict=" << (report.pass ? "pass" : "fail") << "\n";
    if (report.witness)
        out << "witness x=" << io::format_double(report.witness->x)
            << " y=" << io::format_double(report.witness->y)
            << " alpha=" << io::format_double(report.witness->alpha) << "\n";
    emit(out.str(), opts.out_path);
    return report.pass ? kExitOk : kExitViolation;
}

int run_means(const std::string& prop, double a, double b, double s,
              std::optional<double> q, const CommonOpts& opts) {
    const auto id = means::parse_proposition_id(prop);
    const auto r = means::verify_proposition(id, a, b, s, q);
    if (opts.format == "text") {
        std::ostringstream out;
        out << "prop=" << prop << " a=" << io::format_double(a)
            << " b=" << io::format_double(b) << " s=" << io::format_double(s);
        if (q) out << " q=" << io::format_double(*q);
        out << "\nlhs=" << io::format_double(r.lhs) << " rhs=" << io::format_double(r.rhs)
            << " slack=" << io::format_double(r.slack)
            << " verdict=" << to_string(r.verdict) << "\n";
        emit(out.str(), opts.out_path);
    } else {
        sweep::TheoremId tid = sweep::TheoremId::prop3_1a;
        if (id == means::PropositionId::p3_1b) tid = sweep::TheoremId::prop3_1b;
        if (id == means::PropositionId::p3_2) tid = sweep::TheoremId::prop3_2;
        if (id == means::PropositionId::p3_3) tid = sweep::TheoremId::prop3_3;
        std::ostringstream fname;
        fname << "pow:" << s;
        sweep::InequalityCase c{tid, fname.str(), Interval(a, b), std::nullopt, s, q};
        emit(io::render(single_case_report(c, r), io::parse_format(opts.format)),
             opts.out_path);
    }
    if (r.verdict == Verdict::violated) return kExitViolation;
    if (r.verdict == Verdict::numerical_failure) return kExitNumerical;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification of Ostrowski-companion bounds for s-convex classes"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Evaluate a single inequality case");
    std::string v_theorem, v_function, v_interval;
    std::optional<double> v_x, v_q;
    double v_s = 1.0;
    CommonOpts v_opts;
    verify->add_option("--theorem", v_theorem, "Result id, e.g. thm2.1")->required();
    verify->add_option("--function", v_function, "Catalog entry, e.g. pow:2");
    verify->add_option("--interval", v_interval, "Interval 'a,b'")->required();
    verify->add_option("--x", v_x, "Evaluation point");
    verify->add_option("--s", v_s, "Class parameter in (0,1]")->required();
    verify->add_option("--q", v_q, "Hoelder exponent q > 1");
    verify->add_option("--format", v_opts.format, "Output format: csv, json or text");
    verify->add_option("--out", v_opts.out_path, "Write the report to this path");
    verify->add_option("--tol", v_opts.tolerance, "Violation tolerance scale");
    verify->add_option("--samples", v_opts.samples, "Random certification triples");
    verify->add_option("--seed", v_opts.seed, "Certification sampling seed");

    auto* sweep_cmd = app.add_subcommand("sweep", "Run the grid from a config file");
    std::string s_config;
    std::optional<int> s_jobs;
    std::optional<std::uint64_t> s_seed;
    std::optional<double> s_tol;
    CommonOpts s_opts;
    sweep_cmd->add_option("--config", s_config, "Sweep config path")->required();
    sweep_cmd->add_option("--jobs", s_jobs, "Worker threads (overrides config)");
    sweep_cmd->add_option("--seed", s_seed, "Seed override");
    sweep_cmd->add_option("--tol", s_tol, "Tolerance override");
    sweep_cmd->add_option("--format", s_opts.format, "Output format: csv, json or text");
    sweep_cmd->add_option("--out", s_opts.out_path, "Write the report to this path");

    auto* identity = app.add_subcommand("identity", "Residuals of the two identities");
    std::string i_function, i_interval, i_which = "both";
    std::optional<double> i_x;
    int i_x_count = 9;
    CommonOpts i_opts;
    identity->add_option("--function", i_function, "Catalog entry")->required();
    identity->add_option("--interval", i_interval, "Interval 'a,b'")->required();
    identity->add_option("--x", i_x, "Single evaluation point");
    identity->add_option("--x-count", i_x_count, "Grid size when --x is absent");
    identity->add_option("--which", i_which, "companion, midpoint or both");
    identity->add_option("--out", i_opts.out_path, "Write the report to this path");

    auto* convexity = app.add_subcommand("convexity", "Certify a class or estimate max s");
    std::string c_function, c_interval, c_class = "convex";
    std::optional<double> c_s;
    bool c_estimate = false;
    CommonOpts c_opts;
    convexity->add_option("--function", c_function, "Catalog entry")->required();
    convexity->add_option("--interval", c_interval, "Interval 'a,b'")->required();
    convexity->add_option("--class", c_class, "convex or concave");
    convexity->add_option("--s", c_s, "Class parameter; omit to estimate max s");
    convexity->add_flag("--estimate-max-s", c_estimate, "Bisect for the largest passing s");
    convexity->add_option("--samples", c_opts.samples, "Random certification triples");
    convexity->add_option("--seed", c_opts.seed, "Certification sampling seed");
    convexity->add_option("--out", c_opts.out_path, "Write the report to this path");

    auto* means_cmd = app.add_subcommand("means", "Check a special-means proposition");
    std::string m_prop;
    double m_a = 0, m_b = 0, m_s = 0;
    std::optional<double> m_q;
    CommonOpts m_opts;
    means_cmd->add_option("--prop", m_prop, "3.1a, 3.1b, 3.2 or 3.3")->required();
    means_cmd->add_option("--a", m_a, "Left endpoint")->required();
    means_cmd->add_option("--b", m_b, "Right endpoint")->required();
    means_cmd->add_option("--s", m_s, "Exponent in (0,1)")->required();
    means_cmd->add_option("--q", m_q, "Hoelder exponent for 3.2/3.3");
    means_cmd->add_option("--format", m_opts.format, "Output format: csv, json or text");
    means_cmd->add_option("--out", m_opts.out_path, "Write the report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(v_theorem, v_function, v_interval, v_x, v_s, v_q, v_opts);
        if (sweep_cmd->parsed())
            return run_sweep_cmd(s_config, s_jobs, s_seed, s_tol, s_opts);
        if (identity->parsed())
            return run_identity(i_function, i_interval, i_x, i_x_count, i_which, i_opts);
        if (convexity->parsed())
            return run_convexity(c_function, c_interval, c_class, c_s, c_estimate, c_opts);
        if (means_cmd->parsed()) return run_means(m_prop, m_a, m_b, m_s, m_q, m_opts);
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const HypothesisViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
