#ifndef MZV_LINDEP_LEMMA_HPP
#define MZV_LINDEP_LEMMA_HPP

#include <map>
#include <stdexcept>

#include <mzv/exactla/rational.hpp>

namespace mzv
{

// a + b x + sum_i c_i x y_i, for y_1..y_k. Zero coefficients are not stored in c.
struct LinearForm {
    Rational a;
    Rational b;
    std::map<int, Rational> c;
    int k = 0;

    Rational coeff(int i) const;
    // Throws std::invalid_argument on keys outside [1, k] or stored zeros.
    void validate() const;
};

// Multiply f1 by f2.a, subtract f2 times f1.a, and divide by x. The result
// maps 0 to the constant term b1 a2 - b2 a1 and i to c1_i a2 - c2_i a1;
// zero entries are omitted.
//
// Requires f1.c[p] != 0, f2.c[p] == 0, f1.a != 0, f2.a != 0 and equal k,
// so the y_p entry is c1_p a2 and never vanishes. Throws
// std::invalid_argument otherwise.
std::map<int, Rational> lemma1_eliminate(const LinearForm &f1, const LinearForm &f2, int p);

} // namespace mzv

#endif
