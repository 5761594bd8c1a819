#include <mzv/numeval/ball.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mzv
{

namespace
{

mpz_class pow10(unsigned d)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, d);
    return p;
}

std::string format_scaled(const mpz_class &scaled, int digits)
{
    std::string s = mpz_class(abs(scaled)).get_str();
    if (static_cast<int>(s.size()) <= digits) {
        s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    }
    if (digits > 0) {
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return (sgn(scaled) < 0 ? "-" : "") + s;
}

} // namespace

Ball Ball::from_decimal(const std::string &text, std::int64_t prec)
{
    std::string digits;
    int frac = -1;
    bool neg = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (i == 0 && (c == '-' || c == '+')) {
            neg = c == '-';
        } else if (c == '.' && frac < 0) {
            frac = 0;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (frac >= 0) {
                ++frac;
            }
        } else {
            throw std::invalid_argument("Ball::from_decimal: bad literal '" + text + "'");
        }
    }
    if (digits.empty()) {
        throw std::invalid_argument("Ball::from_decimal: empty literal");
    }
    mpz_class n(digits, 10);
    if (neg) {
        n = -n;
    }
    const Arith ar(prec);
    return ar.div(Ball::from_integer(n), pow10(static_cast<unsigned>(std::max(frac, 0))));
}

bool Ball::contains_zero() const { return compare(mid_.abs(), rad_.to_dyadic()) <= 0; }

bool Ball::contains(const Dyadic &x) const { return compare((x - mid_).abs(), rad_.to_dyadic()) <= 0; }

bool Ball::contains(const Ball &other) const
{
    return compare((other.mid_ - mid_).abs() + other.rad_.to_dyadic(), rad_.to_dyadic()) <= 0;
}

bool Ball::overlaps(const Ball &other) const
{
    return compare((other.mid_ - mid_).abs(), rad_.to_dyadic() + other.rad_.to_dyadic()) <= 0;
}

Mag Ball::abs_upper() const { return Mag::upper(mid_) + rad_; }

Mag Ball::abs_lower() const
{
    const Dyadic d = mid_.abs() - rad_.to_dyadic();
    return d.sign() <= 0 ? Mag{} : Mag::lower(d);
}

std::string Ball::to_decimal(int max_digits) const
{
    if (rad_.is_zero()) {
        const int needed = mid_.exponent() < 0 ? static_cast<int>(-mid_.exponent()) : 0;
        const int d = std::min(needed, max_digits);
        const Dyadic scaled = mid_ * Dyadic(pow10(static_cast<unsigned>(d)));
        return format_scaled(scaled.nearest_integer(), d) + (d < needed ? "…" : "");
    }
    // Largest d with rad <= 10^-d / 2; the printed rounding adds at most 10^-d / 2.
    const double r = static_cast<double>(rad_.log2_ceil());
    const int d = static_cast<int>(std::floor((-r - 1.0) * std::log10(2.0)));
    if (d < 1) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g +/- %.2g", mid_.to_double(), rad_.to_double());
        return buf;
    }
    const int shown = std::min(d, max_digits);
    const Dyadic scaled = mid_ * Dyadic(pow10(static_cast<unsigned>(shown)));
    return format_scaled(scaled.nearest_integer(), shown) + "…";
}

std::string Ball::to_exact_string() const
{
    return mid_.to_hex() + " +/- " + rad_.to_dyadic().to_hex();
}

Ball Arith::rounded(Dyadic exact, Mag rad) const
{
    Dyadic r = exact.round(prec_);
    if (!(r == exact)) {
        rad += Mag::upper(exact - r);
    }
    return Ball(std::move(r), rad);
}

Ball Arith::add(const Ball &a, const Ball &b) const { return rounded(a.mid() + b.mid(), a.rad() + b.rad()); }

Ball Arith::sub(const Ball &a, const Ball &b) const { return rounded(a.mid() - b.mid(), a.rad() + b.rad()); }

Ball Arith::mul(const Ball &a, const Ball &b) const
{
    Mag rad;
    if (!a.rad().is_zero() || !b.rad().is_zero()) {
        rad = Mag::upper(a.mid()) * b.rad() + Mag::upper(b.mid()) * a.rad() + a.rad() * b.rad();
    }
    return rounded(a.mid() * b.mid(), rad);
}

Ball Arith::div(const Ball &a, const Ball &b) const
{
    if (b.contains_zero()) {
        throw std::domain_error("Arith::div: divisor ball contains zero");
    }
    const Dyadic q = Dyadic::div(a.mid(), b.mid(), prec_);
    Mag rad;
    if (!q.is_zero()) {
        rad = Mag::pow2(q.magnitude_exponent() - prec_ + 1);
    }
    if (!a.rad().is_zero() || !b.rad().is_zero()) {
        const Mag num = Mag::upper(a.mid()) * b.rad() + Mag::upper(b.mid()) * a.rad();
        const Dyadic mb = b.mid().abs();
        const Mag den = Mag::lower(mb * (mb - b.rad().to_dyadic()));
        rad += Mag::div(num, den);
    }
    return Ball(q, rad);
}

Ball Arith::mul(const Ball &a, const mpz_class &n) const
{
    return rounded(a.mid() * Dyadic(n), a.rad() * Mag::upper(Dyadic(n)));
}

Ball Arith::div(const Ball &a, const mpz_class &n) const
{
    if (sgn(n) == 0) {
        throw std::domain_error("Arith::div: division by zero");
    }
    const Dyadic q = Dyadic::div(a.mid(), n, prec_);
    Mag rad;
    if (!q.is_zero()) {
        rad = Mag::pow2(q.magnitude_exponent() - prec_ + 1);
    }
    if (!a.rad().is_zero()) {
        rad += Mag::div(a.rad(), Mag::lower(Dyadic(n)));
    }
    return Ball(q, rad);
}

Ball Arith::mul(const Ball &a, const mpq_class &q) const
{
    if (q.get_den() == 1) {
        return mul(a, q.get_num());
    }
    return div(mul(a, q.get_num()), q.get_den());
}

Ball Arith::pow(const Ball &a, unsigned n) const
{
    Ball result(1);
    Ball base = a;
    while (n > 0) {
        if (n & 1U) {
            result = mul(result, base);
        }
        n >>= 1U;
        if (n > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

} // namespace mzv
