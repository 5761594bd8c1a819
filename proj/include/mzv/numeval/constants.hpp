#ifndef MZV_NUMEVAL_CONSTANTS_HPP
#define MZV_NUMEVAL_CONSTANTS_HPP

#include <cstdint>

#include <mzv/numeval/ball.hpp>

namespace mzv
{

// Enclosure of pi with radius <= 2^-prec (Machin's formula, alternating
// series tails bounded by the first omitted term). Cached per precision;
// safe to call concurrently.
Ball pi_ball(std::int64_t prec);

// Enclosure of ln 2 via 2*atanh(1/3); radius <= 2^-prec.
Ball ln2_ball(std::int64_t prec);

// (1 + sqrt 5) / 2 with radius <= 2^-prec.
Ball golden_ratio_ball(std::int64_t prec);

} // namespace mzv

#endif
