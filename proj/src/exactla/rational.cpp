#include <mzv/exactla/rational.hpp>

#include <stdexcept>

namespace mzv
{

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (!s.empty() && s.front() == '+') {
        s.erase(0, 1);
    }
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q) { return q.get_str(10); }

bool is_integer(const Rational &q) { return q.get_den() == 1; }

} // namespace mzv
