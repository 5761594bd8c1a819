#include <mzv/cli/cache.hpp>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

namespace mzv::cli
{

namespace
{

class FileLock
{
public:
    FileLock(const std::filesystem::path &p, bool exclusive)
    {
        fd_ = ::open(p.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
        if (fd_ < 0) {
            throw std::runtime_error("cache: cannot open lock file " + p.string() + ": " + std::strerror(errno));
        }
        while (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
            if (errno != EINTR) {
                ::close(fd_);
                throw std::runtime_error("cache: cannot lock " + p.string() + ": " + std::strerror(errno));
            }
        }
    }
    ~FileLock()
    {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    FileLock(const FileLock &) = delete;
    FileLock &operator=(const FileLock &) = delete;

private:
    int fd_ = -1;
};

std::filesystem::path lock_path(const std::filesystem::path &p) { return p.string() + ".lock"; }

std::string hex_u64(std::uint64_t v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

nlohmann::json CacheEntry::to_json() const
{
    return nlohmann::json{{"key", key},
                          {"prec_bits", prec_bits},
                          {"midpoint", value.mid().to_hex()},
                          {"radius_man", hex_u64(value.rad().mantissa())},
                          {"radius_exp", value.rad().exponent()}};
}

std::optional<CacheEntry> CacheEntry::from_json(const nlohmann::json &j)
{
    try {
        if (!j.is_object()) {
            return std::nullopt;
        }
        CacheEntry e;
        e.key = j.at("key").get<std::string>();
        e.prec_bits = j.at("prec_bits").get<std::int64_t>();
        const Dyadic mid = Dyadic::from_hex(j.at("midpoint").get<std::string>());
        const auto man_text = j.at("radius_man").get<std::string>();
        if (man_text.rfind("0x", 0) != 0) {
            return std::nullopt;
        }
        std::size_t used = 0;
        const auto man = std::stoull(man_text.substr(2), &used, 16);
        if (used != man_text.size() - 2 || man >> Mag::mantissa_limit_bits != 0) {
            return std::nullopt;
        }
        const Mag rad = Mag::from_parts(man, j.at("radius_exp").get<std::int64_t>());
        if (rad.mantissa() != man && man != 0) {
            return std::nullopt;
        }
        e.value = Ball(mid, rad);
        if (e.key.empty() || e.prec_bits < 1) {
            return std::nullopt;
        }
        return e;
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

Cache::Cache(std::filesystem::path path) : path_(std::move(path))
{
    if (path_.empty()) {
        throw std::invalid_argument("cache: empty path");
    }
    if (std::filesystem::exists(path_)) {
        FileLock lock(lock_path(path_), false);
        load();
    }
}

void Cache::load()
{
    entries_.clear();
    std::ifstream in(path_);
    if (!in) {
        return;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        const auto j = nlohmann::json::parse(line, nullptr, false);
        auto e = j.is_discarded() ? std::nullopt : CacheEntry::from_json(j);
        if (!e) {
            warnings_.push_back("cache " + path_.string() + ":" + std::to_string(lineno) + ": ignoring malformed entry");
            continue;
        }
        entries_.push_back(std::move(*e));
    }
}

std::optional<Ball> Cache::get(const std::string &key, std::int64_t prec) const
{
    const CacheEntry *best = nullptr;
    for (const auto &e : entries_) {
        if (e.key == key && e.prec_bits >= prec && (best == nullptr || e.prec_bits < best->prec_bits)) {
            best = &e;
        }
    }
    if (best == nullptr) {
        return std::nullopt;
    }
    return best->value;
}

void Cache::put(const CacheEntry &entry)
{
    if (!path_.parent_path().empty()) {
        std::filesystem::create_directories(path_.parent_path());
    }
    FileLock lock(lock_path(path_), true);
    // Pick up entries written by other processes since we loaded.
    load();
    std::erase_if(entries_, [&](const CacheEntry &e) { return e.key == entry.key && e.prec_bits == entry.prec_bits; });
    entries_.push_back(entry);

    const auto tmp = std::filesystem::path(path_.string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::trunc);
        for (const auto &e : entries_) {
            out << e.to_json().dump() << '\n';
        }
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("cache: failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path_);
}

} // namespace mzv::cli
