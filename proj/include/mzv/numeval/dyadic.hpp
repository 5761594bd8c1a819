#ifndef MZV_NUMEVAL_DYADIC_HPP
#define MZV_NUMEVAL_DYADIC_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace mzv
{

// Arbitrary-precision dyadic number mantissa * 2^exponent.
//
// Construction and +, -, * are exact. Division, square roots and the
// round() family take an explicit precision (in mantissa bits) and truncate
// toward zero; the caller is responsible for accounting for the truncation
// error (Ball does this, PSLQ deliberately does not).
//
// Values are kept normalized: the mantissa is odd, or zero with exponent 0.
class Dyadic
{
public:
    Dyadic() = default;
    Dyadic(long v);
    explicit Dyadic(mpz_class mantissa, std::int64_t exponent = 0);

    static Dyadic pow2(std::int64_t e);

    const mpz_class &mantissa() const { return man_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return sgn(man_) == 0; }
    int sign() const { return sgn(man_); }

    // Bit length of |mantissa|; 0 for zero.
    std::int64_t mantissa_bits() const;
    // floor(log2|x|) + 1, i.e. |x| < 2^magnitude_exponent(); undefined for 0.
    std::int64_t magnitude_exponent() const { return exp_ + mantissa_bits(); }

    Dyadic abs() const;
    Dyadic operator-() const;

    friend Dyadic operator+(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator-(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator*(const Dyadic &a, const Dyadic &b);
    Dyadic &operator+=(const Dyadic &o) { return *this = *this + o; }
    Dyadic &operator-=(const Dyadic &o) { return *this = *this - o; }
    Dyadic &operator*=(const Dyadic &o) { return *this = *this * o; }

    Dyadic mul_2exp(std::int64_t e) const;

    // Truncate to at most prec mantissa bits; the discarded part is < 2^(exponent of result).
    Dyadic round(std::int64_t prec) const;
    // Truncate so that the result is a multiple of 2^e (absolute truncation).
    Dyadic truncate_at(std::int64_t e) const;

    // Quotients truncated toward zero to prec significant bits; error < one unit
    // in the last place, i.e. < 2^(result.magnitude_exponent() - prec).
    static Dyadic div(const Dyadic &a, const Dyadic &b, std::int64_t prec);
    static Dyadic div(const Dyadic &a, const mpz_class &n, std::int64_t prec);
    static Dyadic sqrt(const Dyadic &a, std::int64_t prec);

    // Nearest integer (ties away from zero).
    mpz_class nearest_integer() const;
    // floor(x * 2^shift) as an integer.
    mpz_class floor_scaled(std::int64_t shift) const;

    double to_double() const;

    friend int compare(const Dyadic &a, const Dyadic &b);
    friend bool operator==(const Dyadic &a, const Dyadic &b)
    {
        return a.exp_ == b.exp_ && a.man_ == b.man_;
    }
    friend bool operator<(const Dyadic &a, const Dyadic &b) { return compare(a, b) < 0; }
    friend bool operator>(const Dyadic &a, const Dyadic &b) { return compare(a, b) > 0; }
    friend bool operator<=(const Dyadic &a, const Dyadic &b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Dyadic &a, const Dyadic &b) { return compare(a, b) >= 0; }

    // "0x1fp-3" style: signed hex mantissa and binary exponent.
    std::string to_hex() const;
    static Dyadic from_hex(const std::string &s);

private:
    void normalize();

    mpz_class man_{0};
    std::int64_t exp_ = 0;
};

} // namespace mzv

#endif
