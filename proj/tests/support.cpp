#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "support.hpp"

#include <cstring>
#include <string>

namespace mzv::test
{

namespace
{
std::uint64_t g_seed = 0x5eed2024;
}

std::uint64_t base_seed() { return g_seed; }

Ball oracle(const char *digits)
{
    // 60 decimal places: truncation error below 10^-59 < 2^-195.
    return Ball::from_decimal(digits, 256).add_error(Mag::pow2(-195));
}

bool contains_rational(const Ball &b, const Rational &q)
{
    const auto to_q = [](const Dyadic &d) {
        Rational r(d.mantissa());
        if (d.exponent() >= 0) {
            mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(d.exponent()));
        } else {
            mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-d.exponent()));
        }
        return r;
    };
    return abs(q - to_q(b.mid())) <= to_q(b.rad().to_dyadic());
}

} // namespace mzv::test

int main(int argc, char **argv)
{
    std::vector<char *> rest;
    for (int i = 0; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            mzv::test::g_seed = std::stoull(argv[i] + 7);
        } else {
            rest.push_back(argv[i]);
        }
    }
    doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
    return ctx.run();
}
