#include <mzv/numeval/constants.hpp>

#include <map>
#include <mutex>

namespace mzv
{

namespace
{

// sum_{j >= 0} sign^j / ((2j+1) k^(2j+1)) with tail bounded by the next term.
Ball arctan_series(unsigned long k, bool alternating, std::int64_t prec)
{
    const Arith ar(prec + 16);
    const mpz_class k2 = mpz_class(k) * k;
    Ball power = ar.div(Ball(1), mpz_class(k)); // 1/k^(2j+1)
    Ball sum;
    const Mag target = Mag::pow2(-prec - 8);
    for (unsigned long j = 0;; ++j) {
        const Ball term = ar.div(power, mpz_class(2 * j + 1));
        if (term.abs_upper() <= target) {
            // Alternating: |tail| <= |next term|. Otherwise the ratio is
            // <= 1/k^2 <= 1/4, so the tail is <= (4/3)|next term|.
            const Mag tail = alternating ? term.abs_upper() : term.abs_upper() * Mag::from_parts(3, -1);
            return sum.add_error(tail);
        }
        sum = (alternating && (j & 1U)) ? ar.sub(sum, term) : ar.add(sum, term);
        power = ar.div(power, k2);
    }
}

struct ConstantCache {
    std::mutex mu;
    std::map<std::int64_t, Ball> values;
};

} // namespace

Ball pi_ball(std::int64_t prec)
{
    static ConstantCache cache;
    {
        const std::lock_guard lock(cache.mu);
        if (const auto it = cache.values.find(prec); it != cache.values.end()) {
            return it->second;
        }
    }
    const Arith ar(prec + 16);
    const Ball a5 = arctan_series(5, true, prec + 8);
    const Ball a239 = arctan_series(239, true, prec + 8);
    const Ball pi = ar.sub(ar.mul(a5, mpz_class(16)), ar.mul(a239, mpz_class(4)));
    const std::lock_guard lock(cache.mu);
    return cache.values.emplace(prec, pi).first->second;
}

Ball ln2_ball(std::int64_t prec)
{
    const Arith ar(prec + 16);
    return ar.mul(arctan_series(3, false, prec + 4), mpz_class(2));
}

Ball golden_ratio_ball(std::int64_t prec)
{
    // sqrt(5) truncated to prec + 8 bits is off by less than 2^(3 - prec - 8).
    const Dyadic r = Dyadic::sqrt(Dyadic(5), prec + 8);
    return Ball((r + Dyadic(1)).mul_2exp(-1), Mag::pow2(2 - prec - 8));
}

} // namespace mzv
