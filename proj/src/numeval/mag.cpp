#include <mzv/numeval/mag.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mzv
{

namespace
{

int bit_length(std::uint64_t v) { return 64 - std::countl_zero(v); }

} // namespace

void Mag::normalize_up()
{
    if (man_ == 0) {
        exp_ = 0;
        return;
    }
    const int bits = bit_length(man_);
    if (bits > mantissa_limit_bits) {
        const int drop = bits - mantissa_limit_bits;
        const bool inexact = (man_ & ((std::uint64_t{1} << drop) - 1)) != 0;
        man_ >>= drop;
        exp_ += drop;
        if (inexact) {
            ++man_;
            if (bit_length(man_) > mantissa_limit_bits) {
                man_ >>= 1;
                ++exp_;
            }
        }
    }
    while ((man_ & 1) == 0) {
        man_ >>= 1;
        ++exp_;
    }
}

Mag Mag::from_uint(std::uint64_t v) { return from_parts(v, 0); }

Mag Mag::pow2(std::int64_t e) { return from_parts(1, e); }

Mag Mag::from_parts(std::uint64_t mantissa, std::int64_t exponent)
{
    Mag m;
    m.man_ = mantissa;
    m.exp_ = exponent;
    m.normalize_up();
    return m;
}

Mag Mag::upper(const Dyadic &x)
{
    if (x.is_zero()) {
        return Mag{};
    }
    const auto bits = x.mantissa_bits();
    const mpz_class a = abs(x.mantissa());
    if (bits <= mantissa_limit_bits) {
        return from_parts(a.get_ui(), x.exponent());
    }
    const auto drop = bits - mantissa_limit_bits;
    mpz_class top;
    mpz_tdiv_q_2exp(top.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    // x is normalized to an odd mantissa, so dropping bits is always inexact.
    return from_parts(top.get_ui() + 1, x.exponent() + drop);
}

Mag Mag::lower(const Dyadic &x)
{
    if (x.is_zero()) {
        return Mag{};
    }
    const auto bits = x.mantissa_bits();
    const mpz_class a = abs(x.mantissa());
    if (bits <= mantissa_limit_bits) {
        return from_parts(a.get_ui(), x.exponent());
    }
    const auto drop = bits - mantissa_limit_bits;
    mpz_class top;
    mpz_tdiv_q_2exp(top.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    Mag m;
    m.man_ = top.get_ui();
    m.exp_ = x.exponent() + drop;
    while ((m.man_ & 1) == 0) {
        m.man_ >>= 1;
        ++m.exp_;
    }
    return m;
}

std::int64_t Mag::log2_ceil() const
{
    if (man_ == 0) {
        return std::numeric_limits<std::int64_t>::min();
    }
    const int bits = bit_length(man_);
    const bool power = (man_ & (man_ - 1)) == 0;
    return exp_ + (power ? bits - 1 : bits);
}

Dyadic Mag::to_dyadic() const { return Dyadic(mpz_class(static_cast<unsigned long>(man_)), exp_); }

double Mag::to_double() const { return std::ldexp(static_cast<double>(man_), static_cast<int>(exp_)); }

Mag operator+(const Mag &a, const Mag &b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const bool a_hi = a.log2_ceil() >= b.log2_ceil();
    const Mag &hi = a_hi ? a : b;
    const Mag &lo = a_hi ? b : a;
    const auto unit = hi.log2_ceil() - 33;
    if (lo.log2_ceil() <= unit) {
        // lo <= 2^unit; hi.exp_ >= unit + 3 since hi has at most 30 mantissa bits.
        return Mag::from_parts((hi.man_ << (hi.exp_ - unit)) + 1, unit);
    }
    // Both exponents lie within 63 of each other; sum exactly in 128 bits.
    const auto e = std::min(hi.exp_, lo.exp_);
    const unsigned __int128 sum = (static_cast<unsigned __int128>(hi.man_) << (hi.exp_ - e)) +
                                  (static_cast<unsigned __int128>(lo.man_) << (lo.exp_ - e));
    std::int64_t shift = 0;
    unsigned __int128 m = sum;
    bool inexact = false;
    while (m >> 62) {
        inexact |= (m & 1) != 0;
        m >>= 1;
        ++shift;
    }
    return Mag::from_parts(static_cast<std::uint64_t>(m) + (inexact ? 1 : 0), e + shift);
}

Mag operator*(const Mag &a, const Mag &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Mag{};
    }
    return Mag::from_parts(a.man_ * b.man_, a.exp_ + b.exp_);
}

Mag Mag::mul_2exp(std::int64_t e) const
{
    Mag r = *this;
    if (!r.is_zero()) {
        r.exp_ += e;
    }
    return r;
}

Mag Mag::div(const Mag &a, const Mag &b_lower)
{
    if (b_lower.is_zero()) {
        throw std::domain_error("Mag::div: divisor lower bound is zero");
    }
    if (a.is_zero()) {
        return Mag{};
    }
    // ceil((a.man << 32) / b.man) * 2^(a.exp - 32 - b.exp)
    const unsigned __int128 num = static_cast<unsigned __int128>(a.man_) << 32;
    const unsigned __int128 q = num / b_lower.man_ + ((num % b_lower.man_) != 0 ? 1 : 0);
    return from_parts(static_cast<std::uint64_t>(q), a.exp_ - 32 - b_lower.exp_);
}

int compare(const Mag &a, const Mag &b) { return compare(a.to_dyadic(), b.to_dyadic()); }

} // namespace mzv
