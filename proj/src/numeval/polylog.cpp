#include <mzv/numeval/polylog.hpp>

#include <bit>
#include <map>

namespace mzv
{

namespace
{

std::int64_t ceil_log2(std::uint64_t v) { return v <= 1 ? 0 : 64 - std::countl_zero(v - 1); }

} // namespace

Ball nested_partial_sum(std::span<const MzvIndex::Part> parts, std::int64_t n_terms, bool halving,
                        std::int64_t prec)
{
    const Arith ar(prec);
    const std::size_t depth = parts.size();
    // inner[j] = sum over n_j > ... > n_l >= 1 with n_j <= n of prod_{i >= j} n_i^-a_i.
    std::vector<Ball> inner(depth);
    std::vector<Ball> term(depth);
    Ball outer;
    std::map<MzvIndex::Part, mpz_class> powers;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        powers.clear();
        for (const auto a : parts) {
            if (!powers.contains(a)) {
                mpz_class p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), a);
                powers.emplace(a, std::move(p));
            }
        }
        // New terms use the sums over strictly smaller n.
        for (std::size_t j = 0; j < depth; ++j) {
            const bool innermost = j + 1 == depth;
            if (!innermost && inner[j + 1].mid().is_zero() && inner[j + 1].is_exact()) {
                term[j] = Ball();
                continue;
            }
            term[j] = ar.div(innermost ? Ball(1) : inner[j + 1], powers.at(parts[j]));
        }
        outer = ar.add(outer, halving ? term[0].mul_2exp(-n) : term[0]);
        for (std::size_t j = 1; j < depth; ++j) {
            inner[j] = ar.add(inner[j], term[j]);
        }
    }
    return outer;
}

Mag li_half_tail_bound(std::size_t depth, std::int64_t n_terms)
{
    Mag t = Mag::pow2(1 - n_terms);
    const Mag base = Mag::from_uint(static_cast<std::uint64_t>(n_terms) + 1);
    for (std::size_t i = 1; i < depth; ++i) {
        t *= base;
    }
    return t;
}

std::int64_t li_half_terms(std::size_t depth, std::int64_t target_bits)
{
    std::int64_t n = std::max<std::int64_t>(4 * static_cast<std::int64_t>(depth), 1);
    while (1 - n + static_cast<std::int64_t>(depth - 1) * ceil_log2(static_cast<std::uint64_t>(n) + 1) > -target_bits) {
        ++n;
    }
    return n;
}

Ball eval_li_half(const BinaryWord &word, const EvalConfig &cfg)
{
    cfg.validate();
    if (word.empty()) {
        return Ball(1);
    }
    if (word.back() != Letter::x1) {
        throw IndexError("eval_li_half: word " + word.to_string() + " ends in x0 (divergent)");
    }
    const MzvIndex index = word_to_index(word);
    const std::size_t depth = index.depth();
    const std::int64_t target = cfg.prec_bits + 2;
    const std::int64_t n = li_half_terms(depth, target);
    if (n > cfg.max_terms) {
        throw EvalError("eval_li_half: " + std::to_string(n) + " terms needed, limit is " +
                        std::to_string(cfg.max_terms));
    }
    const Mag tail = li_half_tail_bound(depth, n);
    for (std::int64_t guard = cfg.guard_bits;; guard *= 2) {
        Ball r = nested_partial_sum(index.parts(), n, true, cfg.prec_bits + guard).add_error(tail);
        if (r.radius_le_pow2(-cfg.prec_bits) || guard > 8 * cfg.guard_bits) {
            if (!r.radius_le_pow2(-cfg.prec_bits)) {
                throw EvalError("eval_li_half: rounding error exceeds the requested precision");
            }
            return r;
        }
    }
}

std::vector<std::pair<BinaryWord, BinaryWord>> holder_split(const BinaryWord &word)
{
    if (!word.admissible()) {
        throw IndexError("holder_split: word " + word.to_string() + " is not admissible");
    }
    std::vector<std::pair<BinaryWord, BinaryWord>> out;
    out.reserve(word.size() + 1);
    for (std::size_t j = 0; j <= word.size(); ++j) {
        out.emplace_back(reverse_swap(word.prefix(j)), word.suffix_from(j));
    }
    return out;
}

} // namespace mzv
