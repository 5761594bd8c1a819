#ifndef MZV_CORE_DIMS_HPP
#define MZV_CORE_DIMS_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include <mzv/numeval/ball.hpp>

namespace mzv
{

// d_0 .. d_wmax of the conjectural dimension sequence
// d_0 = 1, d_1 = 0, d_2 = 1, d_w = d_{w-3} + d_{w-2}.
struct DimsTable {
    std::vector<mpz_class> values;

    unsigned wmax() const { return static_cast<unsigned>(values.size()) - 1; }
    const mpz_class &operator[](unsigned w) const { return values.at(w); }
};

DimsTable d_sequence(unsigned wmax);

// Enclosure of the real root of x^3 - x - 1 (about 1.3247) with radius <= 2^-prec.
Ball alpha(std::int64_t prec_bits);

} // namespace mzv

#endif
