#include <mzv/core/index.hpp>

#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

namespace mzv
{

MzvIndex::MzvIndex(std::initializer_list<Part> parts) : parts_(parts) { validate(); }

MzvIndex::MzvIndex(std::vector<Part> parts) : parts_(std::move(parts)) { validate(); }

void MzvIndex::validate() const
{
    if (parts_.empty()) {
        throw IndexError("MzvIndex: an index needs at least one part");
    }
    for (const auto p : parts_) {
        if (p == 0) {
            throw IndexError("MzvIndex: parts must be positive integers");
        }
    }
}

MzvIndex MzvIndex::parse(std::string_view text)
{
    std::string s;
    for (const char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) {
        throw IndexError("empty index; expected comma-separated positive integers such as 3,2,2");
    }
    std::vector<Part> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        const auto token = std::string_view(s).substr(start, comma == std::string::npos ? s.npos : comma - start);
        if (token.empty()) {
            throw IndexError("malformed index '" + std::string(text) + "': empty part");
        }
        if (token.front() == '-') {
            throw IndexError("malformed index '" + std::string(text) + "': parts must be positive");
        }
        Part value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw IndexError("malformed index '" + std::string(text) + "': '" + std::string(token) + "' is not a positive integer");
        }
        if (value == 0) {
            throw IndexError("malformed index '" + std::string(text) + "': parts must be positive");
        }
        parts.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return MzvIndex(std::move(parts));
}

std::uint64_t MzvIndex::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::string MzvIndex::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string MzvIndex::to_display() const { return "(" + to_string() + ")"; }

std::strong_ordering operator<=>(const MzvIndex &a, const MzvIndex &b)
{
    if (auto c = a.weight() <=> b.weight(); c != 0) {
        return c;
    }
    // Equal weight: compare words x0^(s1-1) x1 x0^(s2-1) x1 ... lexicographically.
    // The first differing part decides: a smaller part puts its x1 earlier.
    const auto n = std::min(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.parts_[i] != b.parts_[i]) {
            return a.parts_[i] > b.parts_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return a.parts_.size() <=> b.parts_.size();
}

std::ostream &operator<<(std::ostream &os, const MzvIndex &index) { return os << index.to_display(); }

void require_admissible(const MzvIndex &index, std::string_view context)
{
    if (!index.admissible()) {
        throw IndexError(std::string(context) + ": index " + index.to_display() +
                         " is not admissible (first part must be >= 2)");
    }
}

std::uint64_t weight(const MzvIndex &index) { return index.weight(); }

} // namespace mzv

std::size_t std::hash<mzv::MzvIndex>::operator()(const mzv::MzvIndex &index) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto p : index.parts()) {
        h = (h ^ p) * 0x100000001b3ULL;
    }
    return h;
}
