#ifndef MZV_LINDEP_PSLQ_HPP
#define MZV_LINDEP_PSLQ_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <mzv/exactla/rational.hpp>
#include <mzv/numeval/ball.hpp>

namespace mzv
{

class PslqError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Inputs too coarse for the requested coefficient bound, or precision ran
// out before the bound was reached.
class InsufficientPrecision : public PslqError
{
public:
    using PslqError::PslqError;
};

// Some input ball contains zero.
class DegenerateInput : public PslqError
{
public:
    using PslqError::PslqError;
};

// Integer vector c with sum c_i x_i = 0 within the precision of the inputs.
struct RelationCandidate {
    std::vector<Integer> coefficients; // first nonzero entry positive
    Integer norm;                      // max |c_i|
    Ball residual;                     // enclosure of sum c_i x_i; contains 0
};

// No integer relation with Euclidean norm below 2^bound_bits exists (under
// exact arithmetic on the midpoints; see the PSLQ norm bound 1/max|H_jj|).
struct NoRelationBelow {
    int bound_bits = 0;
    double achieved_log2 = 0; // log2 of the bound actually reached
    std::size_t iterations = 0;
};

using PslqResult = std::variant<RelationCandidate, NoRelationBelow>;

// PSLQ (gamma = sqrt(4/3) + 1/100) on the ball midpoints.
//
// Requires n >= 2 values, each with radius <= 2^-(n * max_coeff_bits + 64),
// none containing zero. Stops with a candidate once some |y_i| drops below
// 2^-(P - max_coeff_bits - 32), P being the input precision, or with
// NoRelationBelow(max_coeff_bits) once 1/max|H_jj| >= 2^max_coeff_bits.
// Throws InsufficientPrecision or DegenerateInput.
PslqResult pslq(std::span<const Ball> values, int max_coeff_bits);

// The combination sum c_i x_i over higher-precision enclosures of the same
// constants still contains zero.
bool verify_candidate(const RelationCandidate &cand, std::span<const Ball> values_hi);

// Enclosure of sum c_i x_i.
Ball combination(std::span<const Integer> coefficients, std::span<const Ball> values, std::int64_t prec);

enum class ProbeStatus { relation, no_relation, rejected };

struct ProbeResult {
    ProbeStatus status = ProbeStatus::rejected;
    std::optional<RelationCandidate> relation; // set when status == relation
    std::optional<NoRelationBelow> bound;      // set when status == no_relation
    std::int64_t prec = 0;
    std::string note;
};

// Evaluates the constants at prec, runs pslq, and re-checks any candidate at
// 2*prec before reporting it. A candidate failing that check is reported as
// rejected, never as a relation.
ProbeResult probe(const std::function<std::vector<Ball>(std::int64_t)> &values_at, std::int64_t prec,
                  int max_coeff_bits);

std::string render_coefficients(std::span<const Integer> c);

} // namespace mzv

#endif
