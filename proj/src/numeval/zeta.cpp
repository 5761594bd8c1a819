#include <mzv/numeval/zeta.hpp>

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include <mzv/core/word.hpp>
#include <mzv/numeval/constants.hpp>
#include <mzv/numeval/polylog.hpp>

namespace mzv
{

namespace
{

struct MzvCache {
    std::mutex mu;
    std::map<std::pair<MzvIndex, std::int64_t>, Ball> values;
};

MzvCache &mzv_cache()
{
    static MzvCache cache;
    return cache;
}

Ball compute_mzv(const MzvIndex &index, const EvalConfig &cfg)
{
    const BinaryWord word = index_to_word(index);
    const auto splits = holder_split(word);
    // Each product contributes at most |L| rR + |R| rL + rL rR; with both
    // factors below 4 this stays under 9 * 2^-p for p-bit factors.
    const std::int64_t extra = 6 + std::bit_width(splits.size());
    EvalConfig inner = cfg;
    inner.prec_bits = cfg.prec_bits + 2 + extra;
    const Arith ar(inner.working_prec());
    std::unordered_map<BinaryWord, Ball> li;
    const auto li_of = [&](const BinaryWord &w) -> const Ball & {
        auto it = li.find(w);
        if (it == li.end()) {
            it = li.emplace(w, eval_li_half(w, inner)).first;
        }
        return it->second;
    };
    Ball sum;
    for (const auto &[left, right] : splits) {
        sum = ar.add(sum, ar.mul(li_of(left), li_of(right)));
    }
    return sum;
}

} // namespace

Ball eval_mzv(const MzvIndex &index, const EvalConfig &cfg)
{
    cfg.validate();
    require_admissible(index, "eval_mzv");
    auto &cache = mzv_cache();
    const auto key = std::make_pair(index, cfg.prec_bits);
    {
        const std::lock_guard lock(cache.mu);
        if (const auto it = cache.values.find(key); it != cache.values.end()) {
            return it->second;
        }
    }
    // Accurate to 2^-(p+2); truncating the midpoint costs < 2^-(p+2) more,
    // leaving the true value within 2^-(p+1) of the midpoint.
    const Ball raw = compute_mzv(index, cfg);
    if (!raw.radius_le_pow2(-cfg.prec_bits - 2)) {
        throw EvalError("eval_mzv: failed to reach the requested precision for " + index.to_display());
    }
    const Ball result(raw.mid().truncate_at(-cfg.prec_bits - 2), Mag::pow2(-cfg.prec_bits));
    const std::lock_guard lock(cache.mu);
    return cache.values.emplace(key, result).first->second;
}

void clear_mzv_cache()
{
    auto &cache = mzv_cache();
    const std::lock_guard lock(cache.mu);
    cache.values.clear();
}

Ball zeta_two_pow(unsigned k, const EvalConfig &cfg)
{
    cfg.validate();
    if (k == 0) {
        throw std::invalid_argument("zeta_two_pow: k must be >= 1");
    }
    const std::int64_t wp = cfg.working_prec();
    const Arith ar(wp);
    const Ball pi = pi_ball(wp + 4 * k);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), 2 * k + 1);
    return ar.div(ar.pow(pi, 2 * k), fact);
}

std::int64_t naive_min_terms(std::size_t depth)
{
    if (depth <= 2) {
        return 1;
    }
    // 1 + ln N >= depth - 1  <=>  N >= e^(depth - 2)
    return static_cast<std::int64_t>(std::ceil(std::exp(static_cast<double>(depth) - 2.0))) + 1;
}

Mag naive_tail_bound(const MzvIndex &index, std::int64_t n_terms)
{
    const std::size_t depth = index.depth();
    const auto n = static_cast<std::uint64_t>(n_terms);
    // ln N <= ln 2 * ceil(log2 N) <= 0.69315 * ceil(log2 N)
    const auto lg = static_cast<std::uint64_t>(n <= 1 ? 0 : 64 - std::countl_zero(n - 1));
    const Mag ln_n = Mag::div(Mag::from_uint(69315 * lg), Mag::from_uint(100000));
    const Mag one_plus = Mag::from_uint(1) + ln_n;
    Mag t = Mag::from_uint(depth);
    for (std::size_t i = 1; i < depth; ++i) {
        t *= one_plus;
    }
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), n, index[0] - 1);
    return Mag::div(t, Mag::lower(Dyadic(denom)));
}

Ball eval_naive(const MzvIndex &index, std::int64_t n_terms, std::int64_t prec)
{
    require_admissible(index, "eval_naive");
    if (n_terms < static_cast<std::int64_t>(index.depth())) {
        throw std::invalid_argument("eval_naive: N must be at least the depth");
    }
    const std::int64_t n = std::max(n_terms, naive_min_terms(index.depth()));
    return nested_partial_sum(index.parts(), n, false, prec).add_error(naive_tail_bound(index, n));
}

Ball eval_formal(const IndexSum &sum, const EvalConfig &cfg)
{
    const Arith ar(cfg.working_prec());
    Ball total;
    for (const auto &[k, c] : sum.terms()) {
        total = ar.add(total, ar.mul(eval_mzv(k, cfg), c));
    }
    return total;
}

} // namespace mzv
