#ifndef MZV_NUMEVAL_EVAL_CONFIG_HPP
#define MZV_NUMEVAL_EVAL_CONFIG_HPP

#include <cstdint>
#include <stdexcept>

namespace mzv
{

class EvalError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// prec_bits is an absolute target: results have radius <= 2^-prec_bits.
// Internal arithmetic runs at prec_bits + guard_bits mantissa bits.
struct EvalConfig {
    std::int64_t prec_bits = 128;
    std::int64_t guard_bits = 64;
    std::int64_t max_terms = 1 << 20;

    static EvalConfig with_prec(std::int64_t prec)
    {
        EvalConfig c;
        c.prec_bits = prec;
        return c;
    }

    // Throws std::invalid_argument.
    void validate() const
    {
        if (prec_bits < 16) {
            throw std::invalid_argument("EvalConfig: prec_bits must be >= 16");
        }
        if (guard_bits < 16) {
            throw std::invalid_argument("EvalConfig: guard_bits must be >= 16");
        }
        if (max_terms < 1) {
            throw std::invalid_argument("EvalConfig: max_terms must be positive");
        }
    }

    std::int64_t working_prec() const { return prec_bits + guard_bits; }
};

} // namespace mzv

#endif
