#include <mzv/core/dims.hpp>

#include <stdexcept>

namespace mzv
{

DimsTable d_sequence(unsigned wmax)
{
    DimsTable t;
    t.values.reserve(wmax + 1);
    for (unsigned w = 0; w <= wmax; ++w) {
        if (w < 3) {
            t.values.emplace_back(w == 1 ? 0 : 1);
        } else {
            t.values.push_back(t.values[w - 3] + t.values[w - 2]);
        }
    }
    return t;
}

namespace
{

Dyadic cubic(const Dyadic &x) { return x * x * x - x - Dyadic(1); }

} // namespace

Ball alpha(std::int64_t prec_bits)
{
    if (prec_bits < 8) {
        throw std::invalid_argument("alpha: precision must be at least 8 bits");
    }
    // Newton iteration x <- x - (x^3 - x - 1) / (3x^2 - 1), doubling the
    // working precision each step.
    Dyadic x = Dyadic(mpz_class(1357), -10); // 1.3252
    std::int64_t p = 16;
    while (true) {
        const Dyadic fx = cubic(x);
        const Dyadic dfx = Dyadic(3) * x * x - Dyadic(1);
        x = (x - Dyadic::div(fx, dfx, p + 8)).round(p + 8);
        if (p > prec_bits + 8) {
            break;
        }
        p *= 2;
    }
    // The cubic is increasing on [1, 2]; a sign change across [x - r, x + r]
    // certifies the enclosure.
    const Mag rad = Mag::pow2(-prec_bits - 1);
    const Dyadic r = rad.to_dyadic();
    x = x.round(prec_bits + 8);
    if (cubic(x - r).sign() < 0 && cubic(x + r).sign() > 0) {
        return Ball(x, rad);
    }
    // Not reached for a converged Newton iterate; bisect to stay rigorous.
    Dyadic lo(1), hi(2);
    while (compare(hi - lo, r) > 0) {
        const Dyadic mid = (lo + hi).mul_2exp(-1);
        (cubic(mid).sign() < 0 ? lo : hi) = mid;
    }
    return Ball((lo + hi).mul_2exp(-1), rad);
}

} // namespace mzv
