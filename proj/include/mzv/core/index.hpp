#ifndef MZV_CORE_INDEX_HPP
#define MZV_CORE_INDEX_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv
{

class IndexError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A composition (s_1, ..., s_l) of positive integers, the argument of zeta.
// s_1 belongs to the outermost (largest) summation variable.
class MzvIndex
{
public:
    using Part = std::uint32_t;

    // Throws IndexError on an empty list or a zero part.
    MzvIndex(std::initializer_list<Part> parts);
    explicit MzvIndex(std::vector<Part> parts);

    // Parses "3,2,2" (optionally wrapped in parentheses, whitespace allowed).
    static MzvIndex parse(std::string_view text);

    std::span<const Part> parts() const { return parts_; }
    std::size_t depth() const { return parts_.size(); }
    std::uint64_t weight() const;
    bool admissible() const { return parts_.front() >= 2; }
    Part operator[](std::size_t i) const { return parts_[i]; }

    // "3,2,2"
    std::string to_string() const;
    // "(3,2,2)"
    std::string to_display() const;

    // Canonical order: weight first, then the binary word read as bits
    // (x0 = 0, x1 = 1). For admissible indices of one weight this is the
    // enumeration order of enumerate_admissible.
    friend std::strong_ordering operator<=>(const MzvIndex &a, const MzvIndex &b);
    friend bool operator==(const MzvIndex &a, const MzvIndex &b) { return a.parts_ == b.parts_; }

private:
    void validate() const;

    std::vector<Part> parts_;
};

std::ostream &operator<<(std::ostream &os, const MzvIndex &index);

// Throws IndexError when the index is not admissible.
void require_admissible(const MzvIndex &index, std::string_view context);

std::uint64_t weight(const MzvIndex &index);

} // namespace mzv

template <>
struct std::hash<mzv::MzvIndex> {
    std::size_t operator()(const mzv::MzvIndex &index) const noexcept;
};

#endif
