#include <mzv/numeval/dyadic.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mzv
{

namespace
{

mpz_class shifted(const mpz_class &m, std::int64_t s)
{
    mpz_class r;
    if (s >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    } else {
        mpz_tdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(-s));
    }
    return r;
}

} // namespace

Dyadic::Dyadic(long v) : man_(v), exp_(0) { normalize(); }

Dyadic::Dyadic(mpz_class mantissa, std::int64_t exponent) : man_(std::move(mantissa)), exp_(exponent)
{
    normalize();
}

Dyadic Dyadic::pow2(std::int64_t e) { return Dyadic(mpz_class(1), e); }

void Dyadic::normalize()
{
    if (sgn(man_) == 0) {
        exp_ = 0;
        return;
    }
    const auto tz = mpz_scan1(man_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_tdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), tz);
        exp_ += static_cast<std::int64_t>(tz);
    }
}

std::int64_t Dyadic::mantissa_bits() const
{
    if (is_zero()) {
        return 0;
    }
    return static_cast<std::int64_t>(mpz_sizeinbase(man_.get_mpz_t(), 2));
}

Dyadic Dyadic::abs() const
{
    Dyadic r = *this;
    mpz_abs(r.man_.get_mpz_t(), r.man_.get_mpz_t());
    return r;
}

Dyadic Dyadic::operator-() const
{
    Dyadic r = *this;
    r.man_ = -r.man_;
    return r;
}

Dyadic operator+(const Dyadic &a, const Dyadic &b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const auto e = std::min(a.exp_, b.exp_);
    return Dyadic(shifted(a.man_, a.exp_ - e) + shifted(b.man_, b.exp_ - e), e);
}

Dyadic operator-(const Dyadic &a, const Dyadic &b) { return a + (-b); }

Dyadic operator*(const Dyadic &a, const Dyadic &b)
{
    Dyadic r;
    r.man_ = a.man_ * b.man_;
    r.exp_ = a.exp_ + b.exp_;
    r.normalize();
    return r;
}

Dyadic Dyadic::mul_2exp(std::int64_t e) const
{
    Dyadic r = *this;
    if (!r.is_zero()) {
        r.exp_ += e;
    }
    return r;
}

Dyadic Dyadic::round(std::int64_t prec) const
{
    const auto bits = mantissa_bits();
    if (bits <= prec) {
        return *this;
    }
    const auto drop = bits - prec;
    return Dyadic(shifted(man_, -drop), exp_ + drop);
}

Dyadic Dyadic::truncate_at(std::int64_t e) const
{
    if (is_zero() || exp_ >= e) {
        return *this;
    }
    return Dyadic(shifted(man_, exp_ - e), e);
}

Dyadic Dyadic::div(const Dyadic &a, const Dyadic &b, std::int64_t prec)
{
    if (b.is_zero()) {
        throw std::domain_error("Dyadic: division by zero");
    }
    if (a.is_zero()) {
        return Dyadic{};
    }
    // Scale the numerator so the integer quotient carries prec + 1 bits.
    const auto shift = prec + 1 + b.mantissa_bits() - a.mantissa_bits();
    mpz_class q = shifted(a.man_, std::max<std::int64_t>(shift, 0));
    mpz_tdiv_q(q.get_mpz_t(), q.get_mpz_t(), b.man_.get_mpz_t());
    return Dyadic(std::move(q), a.exp_ - b.exp_ - std::max<std::int64_t>(shift, 0)).round(prec);
}

Dyadic Dyadic::div(const Dyadic &a, const mpz_class &n, std::int64_t prec)
{
    return div(a, Dyadic(n), prec);
}

Dyadic Dyadic::sqrt(const Dyadic &a, std::int64_t prec)
{
    if (a.sign() < 0) {
        throw std::domain_error("Dyadic: square root of a negative number");
    }
    if (a.is_zero()) {
        return Dyadic{};
    }
    // sqrt(m 2^e) = sqrt(m 2^(e - s)) 2^(s/2) with s even and m 2^(e - s)
    // carrying at least 2 (prec + 2) bits.
    std::int64_t s = std::min<std::int64_t>(a.exp_, a.exp_ + a.mantissa_bits() - 2 * (prec + 2));
    if (s % 2 != 0) {
        --s;
    }
    mpz_class m = shifted(a.man_, a.exp_ - s);
    mpz_sqrt(m.get_mpz_t(), m.get_mpz_t());
    return Dyadic(std::move(m), s / 2).round(prec);
}

mpz_class Dyadic::nearest_integer() const
{
    if (exp_ >= 0) {
        return shifted(man_, exp_);
    }
    // |x| + 1/2, truncated, with the sign restored.
    mpz_class a = ::abs(man_);
    a += shifted(mpz_class(1), -exp_ - 1);
    a = shifted(a, exp_);
    return sign() < 0 ? mpz_class(-a) : a;
}

mpz_class Dyadic::floor_scaled(std::int64_t shift) const
{
    const auto e = exp_ + shift;
    mpz_class r;
    if (e >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_fdiv_q_2exp(r.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

double Dyadic::to_double() const
{
    if (is_zero()) {
        return 0.0;
    }
    long e = 0;
    const double d = mpz_get_d_2exp(&e, man_.get_mpz_t());
    return std::ldexp(d, static_cast<int>(e + exp_));
}

int compare(const Dyadic &a, const Dyadic &b)
{
    if (a.sign() != b.sign()) {
        return a.sign() < b.sign() ? -1 : 1;
    }
    if (a.is_zero()) {
        return 0;
    }
    const auto e = std::min(a.exp_, b.exp_);
    return cmp(shifted(a.man_, a.exp_ - e), shifted(b.man_, b.exp_ - e));
}

std::string Dyadic::to_hex() const
{
    std::string s = sign() < 0 ? "-0x" : "0x";
    s += mpz_class(::abs(man_)).get_str(16);
    s += "p" + std::to_string(exp_);
    return s;
}

Dyadic Dyadic::from_hex(const std::string &s)
{
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
        neg = true;
        ++pos;
    }
    if (s.compare(pos, 2, "0x") != 0) {
        throw std::invalid_argument("Dyadic::from_hex: missing 0x prefix in '" + s + "'");
    }
    pos += 2;
    const auto p = s.find('p', pos);
    if (p == std::string::npos || p == pos) {
        throw std::invalid_argument("Dyadic::from_hex: malformed '" + s + "'");
    }
    mpz_class m;
    if (m.set_str(s.substr(pos, p - pos), 16) != 0) {
        throw std::invalid_argument("Dyadic::from_hex: bad mantissa in '" + s + "'");
    }
    std::size_t used = 0;
    const auto e = std::stoll(s.substr(p + 1), &used);
    if (used != s.size() - p - 1) {
        throw std::invalid_argument("Dyadic::from_hex: bad exponent in '" + s + "'");
    }
    return Dyadic(neg ? mpz_class(-m) : m, e);
}

} // namespace mzv
