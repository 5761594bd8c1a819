#ifndef MZV_RELATIONS_RELATIONS_HPP
#define MZV_RELATIONS_RELATIONS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <mzv/core/formal_sum.hpp>
#include <mzv/core/index.hpp>
#include <mzv/exactla/qmatrix.hpp>

namespace mzv
{

enum class Family : std::uint8_t { fds = 1, hoffman = 2, duality = 4 };

class FamilySet
{
public:
    constexpr FamilySet() = default;
    constexpr FamilySet(std::initializer_list<Family> fs)
    {
        for (const auto f : fs) {
            bits_ |= static_cast<std::uint8_t>(f);
        }
    }
    static constexpr FamilySet all() { return {Family::fds, Family::hoffman, Family::duality}; }
    // "fds,hoffman,duality" (any subset, any order). Throws std::invalid_argument.
    static FamilySet parse(std::string_view text);

    constexpr bool contains(Family f) const { return (bits_ & static_cast<std::uint8_t>(f)) != 0; }
    std::string to_string() const;

private:
    std::uint8_t bits_ = 0;
};

std::string_view family_name(Family f);

inline constexpr unsigned default_relation_cap = 12;

// A weight-homogeneous relation combo = 0 among admissible MZVs.
struct Relation {
    IndexSum combo;
    Family family;
    std::string provenance; // e.g. "FDS[(2),(3)]"
};

// u - dual(u); the zero sum for a self-dual index.
Relation duality_rel(const MzvIndex &u);

// stuffle((1), v) - shuffle(x1, word(v)): terms with a leading 1 cancel and
// the result has weight w(v) + 1. Throws std::logic_error if they do not.
Relation hoffman_rel(const MzvIndex &v);

// stuffle(u, v) - shuffle(word(u), word(v)) for admissible u, v.
Relation fds_rel(const MzvIndex &u, const MzvIndex &v);

// Every relation of the requested families at weight w, in generation
// order: DUALITY over enumerate_admissible(w), HOFFMAN over
// enumerate_admissible(w-1), FDS over unordered pairs (weights >= 2 summing
// to w). Zero relations are included.
std::vector<Relation> generate_relations(unsigned w, FamilySet families, unsigned cap = default_relation_cap);

// Relation matrix at weight w: columns labeled by enumerate_admissible(w),
// zero rows and rows equal to an earlier row up to a nonzero scalar dropped.
// Throws WeightRangeError unless 2 <= w <= cap.
QMatrix build_relations(unsigned w, FamilySet families, unsigned cap = default_relation_cap);

struct DimensionReport {
    unsigned weight = 0;
    std::uint64_t num_unknowns = 0;
    std::uint64_t num_relations = 0;
    std::uint64_t rank = 0;
    std::uint64_t upper_bound = 0;
    std::uint64_t conjectured = 0;
    bool matches_conjecture = false;
};

// Upper bound 2^(w-2) - rank for the dimension of weight-w MZVs, compared
// against d_w.
DimensionReport dimension_bound(unsigned w, unsigned cap = default_relation_cap);

} // namespace mzv

#endif
