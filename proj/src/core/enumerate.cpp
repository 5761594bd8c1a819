#include <mzv/core/enumerate.hpp>

#include <string>

#include <mzv/core/word.hpp>

namespace mzv
{

std::vector<MzvIndex> enumerate_admissible(unsigned w, unsigned cap)
{
    if (w < 2 || w > cap || w > 62) {
        throw WeightRangeError("enumerate_admissible: weight " + std::to_string(w) + " outside [2, " +
                               std::to_string(cap) + "]");
    }
    const unsigned free_bits = w - 2;
    const std::uint64_t count = std::uint64_t{1} << free_bits;
    std::vector<MzvIndex> out;
    out.reserve(count);
    std::vector<MzvIndex::Part> parts;
    for (std::uint64_t k = 0; k < count; ++k) {
        parts.clear();
        MzvIndex::Part run = 2; // leading x0 already read
        for (unsigned b = free_bits; b-- > 0;) {
            if ((k >> b) & 1U) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(parts);
    }
    return out;
}

std::uint64_t admissible_position(const MzvIndex &index)
{
    require_admissible(index, "admissible_position");
    const BinaryWord word = index_to_word(index);
    std::uint64_t k = 0;
    for (std::size_t i = 1; i + 1 < word.size(); ++i) {
        k = (k << 1) | static_cast<std::uint64_t>(word[i]);
    }
    return k;
}

namespace
{

void hoffman_rec(unsigned remaining, std::vector<MzvIndex::Part> &prefix, std::vector<MzvIndex> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (const MzvIndex::Part p : {2U, 3U}) {
        if (p <= remaining) {
            prefix.push_back(p);
            hoffman_rec(remaining - p, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace

std::vector<MzvIndex> enumerate_hoffman(unsigned w)
{
    if (w < 2) {
        throw WeightRangeError("enumerate_hoffman: weight must be >= 2");
    }
    std::vector<MzvIndex> out;
    std::vector<MzvIndex::Part> prefix;
    hoffman_rec(w, prefix, out);
    return out;
}

bool is_hoffman(const MzvIndex &index)
{
    for (const auto p : index.parts()) {
        if (p != 2 && p != 3) {
            return false;
        }
    }
    return true;
}

} // namespace mzv
