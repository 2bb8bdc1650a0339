#ifndef SCONV_SWEEP_HPP
#define SCONV_SWEEP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sconv/case_result.hpp"
#include "sconv/function_catalog.hpp"
#include "sconv/interval.hpp"

namespace sconv::sweep {

enum class TheoremId {
    thm2_1,
    thm2_2,
    thm2_3,
    thm1_2,
    cor2_3_1,
    cor2_3_2,
    cor2_7_1,
    cor2_7_2,
    cor2_8,
    cor2_11,
    cor1_1,
    hadamard,
    ostrowski_classical,
    prop3_1a,
    prop3_1b,
    prop3_2,
    prop3_3,
};

std::string to_string(TheoremId id);
TheoremId parse_theorem_id(const std::string& text);

/// Hoelder-type results take q; fixed-point corollaries, the Hadamard
/// chain, and the propositions carry no free x.
bool needs_q(TheoremId id);
bool needs_x(TheoremId id);
/// thm1.2 and the classical Ostrowski bound roam over all of [a, b];
/// companion results over [a, (a+b)/2].
bool x_spans_full_interval(TheoremId id);

struct InequalityCase {
    TheoremId theorem_id;
    std::string function_name;
    Interval interval;
    std::optional<double> x;
    double s;
    std::optional<double> q;

    /// Throws InvalidParameter unless parameter presence and ranges
    /// match what theorem_id requires.
    void validate() const;
};

struct SweepConfig {
    std::vector<TheoremId> theorems;
    std::vector<std::string> functions;
    std::vector<Interval> intervals;
    int x_count = 9;
    std::vector<double> s_values;
    std::vector<double> q_values;
    double tolerance = 1e-9;  // violation tolerance scale
    int n_samples = 512;      // random triples per certification
    std::uint64_t seed = 0;
    int jobs = 1;

    void validate() const;
};

struct CaseRecord {
    InequalityCase c;
    EvaluationResult r;
};

struct SweepReport {
    long total = 0;
    long holds = 0;
    long violated = 0;
    long hypothesis_failed = 0;
    long numerical_failure = 0;
    std::optional<std::size_t> min_slack_index;  // into records
    std::vector<CaseRecord> records;

    const CaseRecord* min_slack_case() const {
        return min_slack_index ? &records[*min_slack_index] : nullptr;
    }
};

// Shared state for a batch of case evaluations: the hypothesis
// certification cache (keyed by function, interval, class, s, q) and the
// tolerance / sampling knobs. Thread-safe.
class EvaluationContext {
public:
    explicit EvaluationContext(double tolerance = 1e-9, int n_samples = 512,
                               std::uint64_t seed = 0);

    /// Certifies the hypothesis class demanded by the theorem, evaluates
    /// the deviation and the bound, and scores the verdict. Numerical
    /// failures become verdicts, never exceptions.
    EvaluationResult evaluate(const InequalityCase& c);

    double tolerance() const { return tolerance_; }

private:
    bool certify(const std::string& kind, const funcat::FunctionSpec& fs,
                 const Interval& iv, double s, std::optional<double> q,
                 const std::function<double(double)>& g, bool concave);

    double tolerance_;
    int n_samples_;
    std::uint64_t seed_;
    std::mutex mutex_;
    std::unordered_map<std::string, bool> cert_cache_;
};

/// One-shot evaluation with a fresh default context.
EvaluationResult evaluate_case(const InequalityCase& c);

/// Expands the Cartesian grid in a fixed order (theorem, function,
/// interval, s, q, x) and evaluates every case; identical configs give
/// identical reports, independent of cfg.jobs.
SweepReport run_sweep(const SweepConfig& cfg);

} // namespace sconv::sweep

#endif
