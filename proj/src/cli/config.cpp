#include <mzv/cli/config.hpp>

#include <charconv>
#include <cstdlib>

namespace mzv::cli
{

namespace
{

template <class T> T parse_number(const char *name, const std::string &s)
{
    T v{};
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        throw ConfigError(std::string(env_prefix) + name + ": expected an integer, got '" + s + "'");
    }
    return v;
}

} // namespace

void Config::validate() const
{
    if (prec_bits < 16) {
        throw ConfigError("precision must be at least 16 bits (got " + std::to_string(prec_bits) + ")");
    }
    if (max_weight < 2) {
        throw ConfigError("max weight must be at least 2");
    }
    if (max_coeff_bits < 1) {
        throw ConfigError("max coefficient bits must be positive");
    }
}

OutputMode parse_output_mode(const std::string &s)
{
    if (s == "text") {
        return OutputMode::text;
    }
    if (s == "json") {
        return OutputMode::json;
    }
    throw ConfigError("output mode must be 'text' or 'json', got '" + s + "'");
}

Config apply_env(Config cfg, const EnvLookup &lookup)
{
    auto get = [&](const char *name) -> const char * {
        const std::string full = std::string(env_prefix) + name;
        return lookup ? lookup(full.c_str()) : std::getenv(full.c_str());
    };
    if (const char *v = get("PREC")) {
        cfg.prec_bits = parse_number<std::int64_t>("PREC", v);
    }
    if (const char *v = get("MAX_WEIGHT")) {
        cfg.max_weight = parse_number<unsigned>("MAX_WEIGHT", v);
    }
    if (const char *v = get("MAX_COEFF_BITS")) {
        cfg.max_coeff_bits = parse_number<int>("MAX_COEFF_BITS", v);
    }
    if (const char *v = get("CACHE")) {
        cfg.cache_path = v;
    }
    if (const char *v = get("OUTPUT")) {
        cfg.output_mode = parse_output_mode(v);
    }
    cfg.validate();
    return cfg;
}

} // namespace mzv::cli
