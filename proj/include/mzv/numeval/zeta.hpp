#ifndef MZV_NUMEVAL_ZETA_HPP
#define MZV_NUMEVAL_ZETA_HPP

#include <cstdint>

#include <mzv/core/formal_sum.hpp>
#include <mzv/core/index.hpp>
#include <mzv/numeval/ball.hpp>
#include <mzv/numeval/eval_config.hpp>

namespace mzv
{

// zeta(index) for an admissible index, via the Hoelder convolution of
// multiple polylogarithms at 1/2.
//
// The returned ball always has radius exactly 2^-cfg.prec_bits and a midpoint
// within 2^-(prec_bits+1) of the true value, so the ball at 2p bits lies
// inside the ball at p bits. Results are memoized per (index, prec_bits) in a
// process-wide, mutex-protected table.
// Throws IndexError for a non-admissible index.
Ball eval_mzv(const MzvIndex &index, const EvalConfig &cfg);

// zeta((2)_k) = pi^(2k) / (2k+1)!, radius <= 2^-cfg.prec_bits. k >= 1.
Ball zeta_two_pow(unsigned k, const EvalConfig &cfg);

// Direct truncation of the defining series at n_1 <= n_terms, with the tail
//   depth * N^(1-s_1) * (1 + ln N)^(depth-1)
// folded into the radius. That bound needs 1 + ln N >= depth - 1; smaller N
// is raised to the least value satisfying it. Sums run at prec mantissa bits.
Ball eval_naive(const MzvIndex &index, std::int64_t n_terms, std::int64_t prec = 96);

// Tail bound used by eval_naive.
Mag naive_tail_bound(const MzvIndex &index, std::int64_t n_terms);

// Least N accepted by eval_naive for the given depth.
std::int64_t naive_min_terms(std::size_t depth);

// sum_k c_k zeta(k); every key must be admissible. Radius is bounded by
// sum |c_k| 2^-prec_bits plus rounding.
Ball eval_formal(const IndexSum &sum, const EvalConfig &cfg);

// Drop all memoized zeta values (tests use this to time cold evaluations).
void clear_mzv_cache();

} // namespace mzv

#endif
