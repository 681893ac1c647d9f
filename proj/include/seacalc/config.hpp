#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>

#include "seacalc/render.hpp"

namespace seacalc {

inline constexpr const char* kConfigEnvVar = "SEACALC_CONFIG";

struct CliConfig {
    int default_order_pk = 6;
    int default_order_b = 3;
    OutputFormat format = OutputFormat::Text;
    std::filesystem::path golden_path;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses `key = value` lines. Blank lines and lines starting with '#' are skipped.
/// Keys: order_pk, order_b, format, golden_path. Unknown keys are an error.
CliConfig parse_config(std::istream& in, const std::string& source, CliConfig base = {});

/// Reads the file named by SEACALC_CONFIG, if set. Falls back to defaults.
CliConfig load_config_from_env();

}  // namespace seacalc
