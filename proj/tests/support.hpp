#ifndef MZV_TESTS_SUPPORT_HPP
#define MZV_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <mzv/core/index.hpp>
#include <mzv/exactla/rational.hpp>
#include <mzv/numeval/ball.hpp>

namespace mzv::test
{

// Base seed for property tests; set with --seed=N on any test binary.
std::uint64_t base_seed();

// Per-test generator: base seed mixed with a test-local salt.
class Gen
{
public:
    explicit Gen(std::uint64_t salt) : rng_(base_seed() ^ (salt * 0x9e3779b97f4a7c15ULL)) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(long num_range, long den_max)
    {
        Rational q(integer(-num_range, num_range), integer(1, den_max));
        q.canonicalize();
        return q;
    }

    // Random composition of w (first part >= 2 when admissible).
    MzvIndex composition(unsigned w, bool admissible)
    {
        std::vector<MzvIndex::Part> parts;
        unsigned left = w;
        while (left > 0) {
            const unsigned lo = (parts.empty() && admissible) ? 2 : 1;
            const unsigned p = (left <= lo) ? left : static_cast<unsigned>(integer(lo, left));
            parts.push_back(p);
            left -= p;
        }
        return MzvIndex(parts);
    }

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Enclosure of a decimal literal with about 60 correct digits.
Ball oracle(const char *digits);

// |q - mid| <= rad, decided exactly.
bool contains_rational(const Ball &b, const Rational &q);

} // namespace mzv::test

#endif
