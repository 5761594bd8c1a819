#ifndef MZV_RELATIONS_REDUCE_HPP
#define MZV_RELATIONS_REDUCE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <variant>
#include <vector>

#include <mzv/core/index.hpp>
#include <mzv/exactla/echelon.hpp>
#include <mzv/numeval/ball.hpp>
#include <mzv/relations/relations.hpp>

namespace mzv
{

inline constexpr std::int64_t default_residual_prec = 100;

// zeta(target) = sum over coefficients c_b zeta(b), b in the Hoffman set of
// the target's weight. residual_check encloses
// zeta(target) - sum c_b zeta(b) and contains 0.
struct Reduction {
    MzvIndex target;
    std::map<MzvIndex, Rational> coefficients;
    Ball residual_check;

    IndexSum as_sum() const;
};

// Echelon form of the weight-w relation system with the Hoffman columns
// eliminated last, reusable across targets of that weight.
class HoffmanReducer
{
public:
    explicit HoffmanReducer(unsigned w, unsigned cap = default_relation_cap);

    unsigned weight() const { return weight_; }
    const QMatrix &relations() const { return relations_; }

    // Throws IndexError for a non-admissible target or a weight mismatch;
    // std::logic_error if the numeric residual excludes 0.
    std::variant<Reduction, NotExpressible> reduce(const MzvIndex &target,
                                                   std::int64_t residual_prec = default_residual_prec) const;

private:
    unsigned weight_;
    QMatrix relations_;
    std::set<std::size_t> basis_cols_;
    EchelonResult echelon_;
};

// Process-wide reducer per (weight, cap), built on first use (thread-safe).
const HoffmanReducer &hoffman_reducer(unsigned w, unsigned cap = default_relation_cap);

std::variant<Reduction, NotExpressible> hoffman_reduce(const MzvIndex &target, unsigned cap = default_relation_cap,
                                                       std::int64_t residual_prec = default_residual_prec);

} // namespace mzv

#endif
