#include <mzv/lindep/lemma.hpp>

#include <string>

namespace mzv
{

Rational LinearForm::coeff(int i) const
{
    const auto it = c.find(i);
    return it == c.end() ? Rational(0) : it->second;
}

void LinearForm::validate() const
{
    for (const auto &[i, v] : c) {
        if (i < 1 || i > k) {
            throw std::invalid_argument("LinearForm: y index " + std::to_string(i) + " outside [1, " +
                                        std::to_string(k) + "]");
        }
        if (sgn(v) == 0) {
            throw std::invalid_argument("LinearForm: stored zero coefficient for y" + std::to_string(i));
        }
    }
}

std::map<int, Rational> lemma1_eliminate(const LinearForm &f1, const LinearForm &f2, int p)
{
    f1.validate();
    f2.validate();
    if (f1.k != f2.k) {
        throw std::invalid_argument("lemma1_eliminate: forms over different y counts");
    }
    if (p < 1 || p > f1.k) {
        throw std::invalid_argument("lemma1_eliminate: p out of range");
    }
    if (sgn(f1.coeff(p)) == 0) {
        throw std::invalid_argument("lemma1_eliminate: first form has no y_p term");
    }
    if (sgn(f2.coeff(p)) != 0) {
        throw std::invalid_argument("lemma1_eliminate: second form must not contain y_p");
    }
    if (sgn(f1.a) == 0 || sgn(f2.a) == 0) {
        throw std::invalid_argument("lemma1_eliminate: constant terms must be nonzero");
    }
    std::map<int, Rational> out;
    const Rational c0 = f1.b * f2.a - f2.b * f1.a;
    if (sgn(c0) != 0) {
        out.emplace(0, c0);
    }
    for (int i = 1; i <= f1.k; ++i) {
        const Rational v = f1.coeff(i) * f2.a - f2.coeff(i) * f1.a;
        if (sgn(v) != 0) {
            out.emplace(i, v);
        }
    }
    return out;
}

} // namespace mzv
