#ifndef MZV_LINDEP_CERTIFICATE_HPP
#define MZV_LINDEP_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <mzv/core/formal_sum.hpp>
#include <mzv/lindep/pslq.hpp>

namespace mzv
{

// zeta(3) zeta(2k) = zeta(2k+3) + zeta(3,2k) + zeta(2k,3).
struct ProductIdentity {
    unsigned k = 0;
    IndexSum rhs;
    bool matches_stuffle = false;
    Ball product;  // zeta(3) * zeta(2k)
    Ball expanded; // eval_formal(rhs)
    bool numeric_ok = false;
};

// rhs for k = 1..l+1; matches_stuffle is filled in, the balls are not.
// Throws std::invalid_argument for l == 0.
std::vector<ProductIdentity> corollary_products(unsigned l);

struct TupleOutcome {
    std::vector<unsigned> ks; // products zeta(3) zeta(2k) in the tuple, besides 1 and zeta(3)
    ProbeStatus status = ProbeStatus::rejected;
    std::optional<NoRelationBelow> bound;
    std::optional<RelationCandidate> relation;
};

struct IndependenceCertificate {
    unsigned l = 0;
    std::int64_t precision = 0;
    int coeff_bound_bits = 0;
    bool found = false;
    std::vector<unsigned> subset_I;  // odd weights 2k+3
    std::vector<MzvIndex> vectors;   // t_i, one per weight in subset_I
    std::vector<std::string> vector_notes;
    std::vector<MzvIndex> candidate_set; // Hoffman indices of the odd weights 5..2l+5
    std::vector<ProductIdentity> products_used;
    std::vector<TupleOutcome> outcomes; // every tuple tried, in order
    std::optional<TupleOutcome> vector_check; // pslq on (1, zeta(3), zeta(t_i)...)

    std::string render_text() const;
};

inline constexpr const char *certificate_disclaimer = "experimental evidence, not proof";

// Weights up to this use the exact Hoffman reduction to pick t_i.
inline constexpr unsigned certificate_reduction_cap = 11;

// Searches the l-subsets of {zeta(3) zeta(2k) : k = 1..l+1} in lexicographic
// order for one where pslq on {1, zeta(3)} plus the subset reports no relation
// with coefficients below 2^coeff_bound_bits, at prec bits.
//
// t_i for weight i is the Hoffman index with the largest coefficient (in
// absolute value) in the reduction of the product, or the first Hoffman index
// of that weight when i exceeds certificate_reduction_cap.
// Throws InsufficientPrecision when prec is too low for the tuple size,
// std::invalid_argument for l == 0, std::logic_error if a product identity
// fails to verify.
IndependenceCertificate certify_corollary(unsigned l, std::int64_t prec, int coeff_bound_bits = 32,
                                          bool check_vectors = true);

} // namespace mzv

#endif
