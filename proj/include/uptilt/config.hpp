#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "uptilt/scenario.hpp"

namespace uptilt {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the plain `key = value` scenario format. Keys are the scenario
/// field names, nested ones dotted (channel.eps_r, eicic.beta, ga.iterations).
/// '#' starts a comment. Unknown keys and malformed values throw ConfigError.
Scenario parse_scenario_file(const std::string& path);
Scenario parse_scenario_text(const std::string& text, const std::string& origin = "<text>");

/// Applies one `key=value` pair; command-line overrides reuse this, so they
/// accept exactly the file keys.
void apply_override(Scenario& s, const std::string& key, const std::string& value);
void apply_override_arg(Scenario& s, const std::string& key_eq_value);

}  // namespace uptilt
