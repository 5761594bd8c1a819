#ifndef MZV_NUMEVAL_BALL_HPP
#define MZV_NUMEVAL_BALL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include <mzv/numeval/dyadic.hpp>
#include <mzv/numeval/mag.hpp>

namespace mzv
{

// Midpoint-radius enclosure [mid - rad, mid + rad] of a real number.
//
// Arithmetic lives in Arith below: every result is rounded to the requested
// number of mantissa bits and the rounding error is folded into the radius,
// so the exact result of the operation on any points of the operand balls
// lies in the returned ball.
class Ball
{
public:
    Ball() = default;
    Ball(long v) : mid_(v) {}
    explicit Ball(Dyadic mid, Mag rad = Mag{}) : mid_(std::move(mid)), rad_(rad) {}

    static Ball from_integer(const mpz_class &n) { return Ball(Dyadic(n)); }
    // Enclosure of the decimal literal "[-]ddd.ddd" (exact decimal value).
    static Ball from_decimal(const std::string &text, std::int64_t prec);

    const Dyadic &mid() const { return mid_; }
    const Mag &rad() const { return rad_; }

    bool is_exact() const { return rad_.is_zero(); }
    bool contains_zero() const;
    bool contains(const Dyadic &x) const;
    // Does this ball contain the whole of other?
    bool contains(const Ball &other) const;
    bool overlaps(const Ball &other) const;
    bool radius_le_pow2(std::int64_t e) const { return rad_.le_pow2(e); }

    // Bounds on |x| over the ball.
    Mag abs_upper() const;
    Mag abs_lower() const;

    Ball operator-() const { return Ball(-mid_, rad_); }
    Ball mul_2exp(std::int64_t e) const { return Ball(mid_.mul_2exp(e), rad_.mul_2exp(e)); }
    Ball add_error(const Mag &e) const { return Ball(mid_, rad_ + e); }

    // Decimal rendering showing only digits guaranteed by the radius, followed
    // by "…" when the value is not exactly represented. max_digits caps the
    // fractional digits printed.
    std::string to_decimal(int max_digits = 60) const;
    // Exact midpoint/radius as hex dyadics: "0x..p-12 +/- 0x..p-140".
    std::string to_exact_string() const;

    friend bool operator==(const Ball &a, const Ball &b) { return a.mid_ == b.mid_ && a.rad_ == b.rad_; }

private:
    Dyadic mid_;
    Mag rad_;
};

// Ball arithmetic at a fixed working precision (mantissa bits).
class Arith
{
public:
    explicit Arith(std::int64_t prec) : prec_(prec) {}
    std::int64_t prec() const { return prec_; }

    Ball add(const Ball &a, const Ball &b) const;
    Ball sub(const Ball &a, const Ball &b) const;
    Ball mul(const Ball &a, const Ball &b) const;
    Ball div(const Ball &a, const Ball &b) const;
    Ball mul(const Ball &a, const mpz_class &n) const;
    Ball div(const Ball &a, const mpz_class &n) const;
    Ball mul(const Ball &a, const mpq_class &q) const;
    Ball sqr(const Ball &a) const { return mul(a, a); }
    Ball pow(const Ball &a, unsigned n) const;

private:
    Ball rounded(Dyadic exact, Mag rad) const;

    std::int64_t prec_;
};

} // namespace mzv

#endif
