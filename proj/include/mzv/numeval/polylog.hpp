#ifndef MZV_NUMEVAL_POLYLOG_HPP
#define MZV_NUMEVAL_POLYLOG_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <mzv/core/word.hpp>
#include <mzv/numeval/ball.hpp>
#include <mzv/numeval/eval_config.hpp>

namespace mzv
{

// Multiple polylogarithm at z = 1/2 of the index encoded by word:
//   sum_{n_1 > ... > n_l >= 1} 2^-n_1 / (n_1^a_1 ... n_l^a_l).
// Leading parts equal to 1 are allowed. The empty word gives exactly 1.
// Radius <= 2^-cfg.prec_bits. Throws IndexError for a word ending in x0 and
// EvalError when more than cfg.max_terms terms would be needed.
Ball eval_li_half(const BinaryWord &word, const EvalConfig &cfg);

// Truncation point used by eval_li_half: the least N >= 4*depth with
// 2^(1-N) (N+1)^(depth-1) <= 2^-target_bits.
std::int64_t li_half_terms(std::size_t depth, std::int64_t target_bits);

// Upper bound 2^(1-N) (N+1)^(depth-1) on the tail beyond N (valid for N >= 4*depth).
Mag li_half_tail_bound(std::size_t depth, std::int64_t n_terms);

// Hoelder convolution at p = q = 2: for an admissible word a_1...a_n, the
// n+1 pairs (reverse_swap(a_1..a_j), a_{j+1}..a_n), j = 0..n, so that
// zeta(word) = sum_j Li_half(left_j) * Li_half(right_j).
// Throws IndexError for a non-admissible word.
std::vector<std::pair<BinaryWord, BinaryWord>> holder_split(const BinaryWord &word);

// Partial nested sum sum_{N >= n_1 > ... > n_l >= 1} z^n_1 / prod n_i^a_i with
// z = 1/2 (halving = true) or z = 1, at working precision prec. No tail term.
Ball nested_partial_sum(std::span<const MzvIndex::Part> parts, std::int64_t n_terms, bool halving,
                        std::int64_t prec);

} // namespace mzv

#endif
