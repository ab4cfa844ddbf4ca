#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apeuler/config.hpp"
#include "apeuler/integrator.hpp"

namespace apeuler::cli {

enum ExitCode : int { kOk = 0, kNonPhysical = 2, kNoConvergence = 3, kBadConfig = 4 };

int exit_code_for(RunStatus s);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Flat "key = value" lines; '#' starts a comment. Throws ConfigError.
KeyValues parse_config_text(std::string_view text);
KeyValues read_config_file(const std::string& path);

/// ["--key", "value", ...] with '_' in keys mapped to '-'. Booleans given as
/// true/false are emitted as bare flags or dropped.
std::vector<std::string> config_to_args(const KeyValues& kv);

/// "N:VALUE", e.g. "10:1e-4". Throws ConfigError.
DtOverride parse_dt_override(std::string_view text);

/// Comma-separated lists. Throws ConfigError.
std::vector<double> parse_double_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

}  // namespace apeuler::cli
