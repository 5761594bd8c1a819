#ifndef MZV_CLI_CACHE_HPP
#define MZV_CLI_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <mzv/numeval/ball.hpp>

namespace mzv::cli
{

// One line of the cache file:
//   {"key":"3,2","prec_bits":128,"midpoint":"0x...p-130","radius_man":"0x1","radius_exp":-128}
struct CacheEntry {
    std::string key;
    std::int64_t prec_bits = 0;
    Ball value;

    nlohmann::json to_json() const;
    // nullopt for anything malformed.
    static std::optional<CacheEntry> from_json(const nlohmann::json &j);
};

// JSONL store of evaluated balls keyed by (key, prec_bits). Every put
// rewrites the file atomically (temporary file + rename) while holding an
// exclusive advisory lock on "<path>.lock"; reads take a shared lock.
// Unparseable lines are skipped and reported through warnings().
class Cache
{
public:
    explicit Cache(std::filesystem::path path);

    // Stored ball with the smallest prec_bits >= prec, if any.
    std::optional<Ball> get(const std::string &key, std::int64_t prec) const;
    // Replaces any entry with the same key and prec_bits.
    void put(const CacheEntry &entry);

    std::size_t size() const { return entries_.size(); }
    const std::vector<std::string> &warnings() const { return warnings_; }
    const std::filesystem::path &path() const { return path_; }

private:
    void load();

    std::filesystem::path path_;
    std::vector<CacheEntry> entries_;
    std::vector<std::string> warnings_;
};

} // namespace mzv::cli

#endif
