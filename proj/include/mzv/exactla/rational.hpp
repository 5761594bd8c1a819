#ifndef MZV_EXACTLA_RATIONAL_HPP
#define MZV_EXACTLA_RATIONAL_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mzv
{

// Exact rational in lowest terms with positive denominator (GMP keeps mpq_t
// canonical as long as every value passes through canonicalize()).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "4/3", "-2", "+7/10"; the result is canonical. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

// "4/3", "-2"
std::string to_string(const Rational &q);

bool is_integer(const Rational &q);

} // namespace mzv

#endif
