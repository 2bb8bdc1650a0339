#ifndef SCONV_CONFIG_HPP
#define SCONV_CONFIG_HPP

#include <istream>
#include <string>
#include <vector>

#include "sconv/sweep.hpp"

namespace sconv::io {

/// Parses the flat key-value sweep config format: one or more [sweep]
/// sections, 'key = value' lines, '#' comments. Numeric lists are
/// comma-separated; functions and 'a,b' interval pairs are separated
/// by ';'. Unknown sections or keys are errors. See
/// configs/default_sweep.cfg for the full schema.
std::vector<sweep::SweepConfig> parse_sweep_configs(std::istream& in);
std::vector<sweep::SweepConfig> parse_sweep_configs(const std::string& text);

/// Grid the shipped default config file encodes; kept in sync by test.
sweep::SweepConfig default_sweep_config();

} // namespace sconv::io

#endif
