#ifndef MZV_CORE_ENUMERATE_HPP
#define MZV_CORE_ENUMERATE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <mzv/core/index.hpp>

namespace mzv
{

class WeightRangeError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

inline constexpr unsigned default_enumeration_cap = 20;

// All admissible indices of weight w (2^(w-2) of them), ascending by the
// integer value of their binary word. The k-th entry has word
// x0 <bits of k, w-2 wide> x1. Throws WeightRangeError unless 2 <= w <= cap.
std::vector<MzvIndex> enumerate_admissible(unsigned w, unsigned cap = default_enumeration_cap);

// Position of an admissible index inside enumerate_admissible(weight(index)).
std::uint64_t admissible_position(const MzvIndex &index);

// All compositions of w into parts 2 and 3, lexicographic in the parts.
// Throws WeightRangeError for w < 2.
std::vector<MzvIndex> enumerate_hoffman(unsigned w);

bool is_hoffman(const MzvIndex &index);

} // namespace mzv

#endif
