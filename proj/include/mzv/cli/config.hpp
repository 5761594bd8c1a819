#ifndef MZV_CLI_CONFIG_HPP
#define MZV_CLI_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>

namespace mzv::cli
{

enum class OutputMode { text, json };

class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct Config {
    std::int64_t prec_bits = 128;
    unsigned max_weight = 12;
    int max_coeff_bits = 32;
    std::filesystem::path cache_path; // empty: no cache
    OutputMode output_mode = OutputMode::text;

    // Throws ConfigError.
    void validate() const;
};

inline constexpr const char *env_prefix = "MZV_";

// Overrides from MZV_PREC, MZV_MAX_WEIGHT, MZV_MAX_COEFF_BITS, MZV_CACHE and
// MZV_OUTPUT (text|json). lookup defaults to std::getenv. Throws ConfigError
// on malformed values.
using EnvLookup = std::function<const char *(const char *)>;
Config apply_env(Config cfg, const EnvLookup &lookup = {});

OutputMode parse_output_mode(const std::string &s);

} // namespace mzv::cli

#endif
