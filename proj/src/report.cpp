#include "sconv/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace sconv::io {
namespace {

using nlohmann::json;

json case_to_json(const sweep::CaseRecord& rec) {
    json j;
    j["theorem_id"] = sweep::to_string(rec.c.theorem_id);
    j["function"] = rec.c.function_name;
    j["a"] = rec.c.interval.a;
    j["b"] = rec.c.interval.b;
    if (rec.c.x) j["x"] = *rec.c.x; else j["x"] = nullptr;
    j["s"] = rec.c.s;
    if (rec.c.q) j["q"] = *rec.c.q; else j["q"] = nullptr;
    j["lhs"] = rec.r.lhs;
    j["rhs"] = rec.r.rhs;
    j["slack"] = rec.r.slack;
    if (std::isfinite(rec.r.tightness)) j["tightness"] = rec.r.tightness;
    else j["tightness"] = nullptr;
    j["quad_error"] = rec.r.quad_error;
    j["hypothesis_certified"] = rec.r.hypothesis_certified;
    j["verdict"] = to_string(rec.r.verdict);
    return j;
}

} // namespace

ReportFormat parse_format(const std::string& text) {
    if (text == "text") return ReportFormat::text;
    if (text == "csv") return ReportFormat::csv;
    if (text == "json") return ReportFormat::json;
    throw InvalidParameter("unknown format '" + text + "' (want csv, json or text)");
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const sweep::SweepReport& report) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const auto& rec : report.records) {
        out << sweep::to_string(rec.c.theorem_id) << ',' << rec.c.function_name << ','
            << format_double(rec.c.interval.a) << ',' << format_double(rec.c.interval.b)
            << ',' << (rec.c.x ? format_double(*rec.c.x) : "") << ','
            << format_double(rec.c.s) << ',' << (rec.c.q ? format_double(*rec.c.q) : "")
            << ',' << format_double(rec.r.lhs) << ',' << format_double(rec.r.rhs) << ','
            << format_double(rec.r.slack) << ',' << format_double(rec.r.tightness) << ','
            << format_double(rec.r.quad_error) << ',' << to_string(rec.r.verdict) << "\n";
    }
    return out.str();
}

std::string to_json(const sweep::SweepReport& report) {
    json j;
    j["summary"] = {
        {"total", report.total},
        {"holds", report.holds},
        {"violated", report.violated},
        {"hypothesis_failed", report.hypothesis_failed},
        {"numerical_failure", report.numerical_failure},
    };
    if (const auto* min_case = report.min_slack_case())
        j["min_slack_case"] = case_to_json(*min_case);
    else
        j["min_slack_case"] = nullptr;
    json cases = json::array();
    for (const auto& rec : report.records) cases.push_back(case_to_json(rec));
    j["cases"] = std::move(cases);
    return j.dump(2) + "\n";
}

std::string to_text(const sweep::SweepReport& report) {
    std::ostringstream out;
    out << "cases:              " << report.total << "\n"
        << "holds:              " << report.holds << "\n"
        << "violated:           " << report.violated << "\n"
        << "hypothesis_failed:  " << report.hypothesis_failed << "\n"
        << "numerical_failure:  " << report.numerical_failure << "\n";
    if (const auto* min_case = report.min_slack_case()) {
        const auto& c = min_case->c;
        const auto& r = min_case->r;
        out << "min slack case:     " << sweep::to_string(c.theorem_id) << " "
            << c.function_name << " [" << format_double(c.interval.a) << ", "
            << format_double(c.interval.b) << "]";
        if (c.x) out << " x=" << format_double(*c.x);
        out << " s=" << format_double(c.s);
        if (c.q) out << " q=" << format_double(*c.q);
        out << "\n  lhs=" << format_double(r.lhs) << " rhs=" << format_double(r.rhs)
            << " slack=" << format_double(r.slack)
            << " tightness=" << format_double(r.tightness) << " verdict="
            << to_string(r.verdict) << "\n";
    }
    return out.str();
}

std::string render(const sweep::SweepReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::text: return to_text(report);
        case ReportFormat::csv: return to_csv(report);
        case ReportFormat::json: return to_json(report);
    }
    throw InvalidParameter("unknown report format");
}

VerdictCounts counts_of(const sweep::SweepReport& report) {
    return VerdictCounts{report.total, report.holds, report.violated,
                         report.hypothesis_failed, report.numerical_failure};
}

VerdictCounts read_json_counts(const std::string& json_text) {
    const json j = json::parse(json_text);
    VerdictCounts counts;
    for (const auto& item : j.at("cases")) {
        const std::string verdict = item.at("verdict").get<std::string>();
        ++counts.total;
        if (verdict == "holds") ++counts.holds;
        else if (verdict == "violated") ++counts.violated;
        else if (verdict == "hypothesis_failed") ++counts.hypothesis_failed;
        else if (verdict == "numerical_failure") ++counts.numerical_failure;
        else throw InvalidParameter("unknown verdict '" + verdict + "' in JSON report");
    }
    return counts;
}

} // namespace sconv::io
