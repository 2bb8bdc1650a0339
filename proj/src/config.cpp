#include "sconv/config.hpp"

#include <cmath>
#include <sstream>

namespace sconv::io {
namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> items;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            if (!trim(cur).empty()) items.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) items.push_back(trim(cur));
    return items;
}

double parse_double(const std::string& text, int line_no) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw InvalidParameter("config line " + std::to_string(line_no) +
                               ": bad number '" + text + "'");
    }
    if (pos != text.size() || !std::isfinite(v))
        throw InvalidParameter("config line " + std::to_string(line_no) +
                               ": bad number '" + text + "'");
    return v;
}

long parse_long(const std::string& text, int line_no) {
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(text, &pos);
    } catch (const std::exception&) {
        throw InvalidParameter("config line " + std::to_string(line_no) +
                               ": bad integer '" + text + "'");
    }
    if (pos != text.size())
        throw InvalidParameter("config line " + std::to_string(line_no) +
                               ": bad integer '" + text + "'");
    return v;
}

} // namespace

std::vector<sweep::SweepConfig> parse_sweep_configs(std::istream& in) {
    std::vector<sweep::SweepConfig> configs;
    bool in_section = false;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line != "[sweep]")
                throw InvalidParameter("config line " + std::to_string(line_no) +
                                       ": unknown section " + line);
            configs.emplace_back();
            in_section = true;
            continue;
        }

        if (!in_section)
            throw InvalidParameter("config line " + std::to_string(line_no) +
                                   ": key outside a [sweep] section");

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidParameter("config line " + std::to_string(line_no) +
                                   ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        sweep::SweepConfig& cfg = configs.back();

        if (key == "theorems") {
            for (const auto& item : split_list(value, ','))
                cfg.theorems.push_back(sweep::parse_theorem_id(item));
        } else if (key == "functions") {
            for (const auto& item : split_list(value, ';')) cfg.functions.push_back(item);
        } else if (key == "intervals") {
            for (const auto& pair : split_list(value, ';')) {
                const auto ends = split_list(pair, ',');
                if (ends.size() != 2)
                    throw InvalidParameter("config line " + std::to_string(line_no) +
                                           ": interval needs 'a,b'");
                cfg.intervals.emplace_back(parse_double(ends[0], line_no),
                                           parse_double(ends[1], line_no));
            }
        } else if (key == "x_count") {
            cfg.x_count = static_cast<int>(parse_long(value, line_no));
        } else if (key == "s_values") {
            for (const auto& item : split_list(value, ','))
                cfg.s_values.push_back(parse_double(item, line_no));
        } else if (key == "q_values") {
            for (const auto& item : split_list(value, ','))
                cfg.q_values.push_back(parse_double(item, line_no));
        } else if (key == "tolerance") {
            cfg.tolerance = parse_double(value, line_no);
        } else if (key == "samples") {
            cfg.n_samples = static_cast<int>(parse_long(value, line_no));
        } else if (key == "seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_long(value, line_no));
        } else if (key == "jobs") {
            cfg.jobs = static_cast<int>(parse_long(value, line_no));
        } else {
            throw InvalidParameter("config line " + std::to_string(line_no) +
                                   ": unknown key '" + key + "'");
        }
    }

    if (configs.empty()) throw InvalidParameter("config has no [sweep] section");
    for (const auto& cfg : configs) cfg.validate();
    return configs;
}

std::vector<sweep::SweepConfig> parse_sweep_configs(const std::string& text) {
    std::istringstream in(text);
    return parse_sweep_configs(in);
}

sweep::SweepConfig default_sweep_config() {
    sweep::SweepConfig cfg;
    cfg.theorems = {sweep::TheoremId::thm2_1, sweep::TheoremId::thm2_2,
                    sweep::TheoremId::thm2_3, sweep::TheoremId::thm1_2};
    cfg.functions = funcat::default_catalog_names();
    cfg.intervals = {Interval(0.5, 1.5), Interval(1, 2), Interval(0.25, 1.25)};
    cfg.x_count = 9;
    cfg.s_values = {0.25, 0.5, 0.75, 1.0};
    cfg.q_values = {1.5, 2.0, 3.0};
    cfg.tolerance = 1e-9;
    cfg.n_samples = 512;
    cfg.seed = 20240701;
    cfg.jobs = 1;
    return cfg;
}

} // namespace sconv::io
