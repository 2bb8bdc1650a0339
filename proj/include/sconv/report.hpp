#ifndef SCONV_REPORT_HPP
#define SCONV_REPORT_HPP

#include <string>

#include "sconv/sweep.hpp"

namespace sconv::io {

enum class ReportFormat { text, csv, json };

ReportFormat parse_format(const std::string& text);

// Fixed column set, fixed order; numbers carry 17 significant digits so
// doubles survive a round trip.
inline constexpr const char* kCsvHeader =
    "theorem_id,function,a,b,x,s,q,lhs,rhs,slack,tightness,quad_error,verdict";

std::string to_csv(const sweep::SweepReport& report);
std::string to_json(const sweep::SweepReport& report);
std::string to_text(const sweep::SweepReport& report);
std::string render(const sweep::SweepReport& report, ReportFormat format);

struct VerdictCounts {
    long total = 0;
    long holds = 0;
    long violated = 0;
    long hypothesis_failed = 0;
    long numerical_failure = 0;

    bool operator==(const VerdictCounts&) const = default;
};

VerdictCounts counts_of(const sweep::SweepReport& report);

/// Re-reads an emitted JSON report and recounts verdicts from its case
/// array (round-trip check surface).
VerdictCounts read_json_counts(const std::string& json_text);

/// Formats a double with 17 significant digits.
std::string format_double(double v);

} // namespace sconv::io

#endif
