#include "seacalc/config.hpp"

#include <cstdlib>
#include <fstream>

namespace seacalc {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_order(const std::string& value, const std::string& where) {
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || n < 0) throw ConfigError(where + ": expected a non-negative integer, got '" + value + "'");
    return n;
}

}  // namespace

CliConfig parse_config(std::istream& in, const std::string& source, CliConfig base) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const std::string where = source + ":" + std::to_string(lineno);
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key == "order_pk") {
            base.default_order_pk = parse_order(value, where);
        } else if (key == "order_b") {
            base.default_order_b = parse_order(value, where);
        } else if (key == "format") {
            const auto format = parse_format(value);
            if (!format) throw ConfigError(where + ": unknown format '" + value + "'");
            base.format = *format;
        } else if (key == "golden_path") {
            base.golden_path = value;
        } else {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }
    return base;
}

CliConfig load_config_from_env() {
    CliConfig config;
#ifdef SEACALC_DEFAULT_GOLDEN
    config.golden_path = SEACALC_DEFAULT_GOLDEN;
#endif
    const char* path = std::getenv(kConfigEnvVar);
    if (path == nullptr || *path == '\0') return config;
    std::ifstream in(path);
    if (!in) throw ConfigError(std::string("cannot open config file ") + path);
    return parse_config(in, path, config);
}

}  // namespace seacalc
