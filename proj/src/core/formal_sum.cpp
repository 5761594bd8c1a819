#include <mzv/core/formal_sum.hpp>

#include <cctype>

namespace mzv
{

IndexSum parse_index_sum(std::string_view text)
{
    IndexSum sum;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    skip_ws();
    if (text.substr(i) == "0") {
        return sum;
    }
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            break;
        }
        bool neg = false;
        if (text[i] == '+' || text[i] == '-') {
            neg = text[i] == '-';
            ++i;
            skip_ws();
        }
        Rational coeff = 1;
        if (i < text.size() && text[i] != '(') {
            const auto star = text.find('*', i);
            if (star == std::string_view::npos) {
                throw IndexError("malformed term in '" + std::string(text) + "'");
            }
            coeff = parse_rational(text.substr(i, star - i));
            i = star + 1;
            skip_ws();
        }
        if (i >= text.size() || text[i] != '(') {
            throw IndexError("expected '(' in '" + std::string(text) + "'");
        }
        const auto close = text.find(')', i);
        if (close == std::string_view::npos) {
            throw IndexError("unbalanced parenthesis in '" + std::string(text) + "'");
        }
        sum.add(MzvIndex::parse(text.substr(i + 1, close - i - 1)), neg ? Rational(-coeff) : coeff);
        i = close + 1;
    }
    return sum;
}

} // namespace mzv
