#ifndef MZV_NUMEVAL_MAG_HPP
#define MZV_NUMEVAL_MAG_HPP

#include <cstdint>
#include <string>

#include <mzv/numeval/dyadic.hpp>

namespace mzv
{

// Nonnegative upper bound man * 2^exp with a short (<= 30 bit) mantissa.
// Every operation rounds upward, so a Mag is always a valid bound for the
// quantity it was derived from. Used for ball radii.
class Mag
{
public:
    static constexpr int mantissa_limit_bits = 30;

    Mag() = default;
    static Mag from_uint(std::uint64_t v);
    static Mag pow2(std::int64_t e);
    // Upper bound of |x|.
    static Mag upper(const Dyadic &x);
    // Lower bound of |x| (may be zero only if x is zero).
    static Mag lower(const Dyadic &x);
    // Reassemble from stored parts; mantissa is reduced (rounding up) if too long.
    static Mag from_parts(std::uint64_t mantissa, std::int64_t exponent);

    bool is_zero() const { return man_ == 0; }
    std::uint64_t mantissa() const { return man_; }
    std::int64_t exponent() const { return exp_; }

    // Smallest e with value <= 2^e; meaningless for zero (returns INT64_MIN).
    std::int64_t log2_ceil() const;

    Dyadic to_dyadic() const;
    double to_double() const;

    friend Mag operator+(const Mag &a, const Mag &b);
    friend Mag operator*(const Mag &a, const Mag &b);
    Mag &operator+=(const Mag &o) { return *this = *this + o; }
    Mag &operator*=(const Mag &o) { return *this = *this * o; }
    Mag mul_2exp(std::int64_t e) const;
    // Upper bound of a / b where b is a lower bound of the true divisor.
    static Mag div(const Mag &a, const Mag &b_lower);

    friend int compare(const Mag &a, const Mag &b);
    friend bool operator==(const Mag &a, const Mag &b) { return a.man_ == b.man_ && a.exp_ == b.exp_; }
    friend bool operator<(const Mag &a, const Mag &b) { return compare(a, b) < 0; }
    friend bool operator<=(const Mag &a, const Mag &b) { return compare(a, b) <= 0; }

    // Is value <= 2^e?
    bool le_pow2(std::int64_t e) const { return is_zero() || log2_ceil() <= e; }

private:
    void normalize_up();

    std::uint64_t man_ = 0;
    std::int64_t exp_ = 0;
};

} // namespace mzv

#endif
