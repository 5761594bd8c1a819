#include <mzv/relations/reduce.hpp>

#include <mutex>
#include <stdexcept>

#include <mzv/core/enumerate.hpp>
#include <mzv/numeval/zeta.hpp>

namespace mzv
{

IndexSum Reduction::as_sum() const
{
    IndexSum s;
    for (const auto &[k, c] : coefficients) {
        s.add(k, c);
    }
    return s;
}

HoffmanReducer::HoffmanReducer(unsigned w, unsigned cap)
    : weight_(w), relations_(build_relations(w, FamilySet::all(), cap))
{
    for (const auto &b : enumerate_hoffman(w)) {
        basis_cols_.insert(relations_.column_of(b));
    }
    echelon_ = rref(relations_, basis_last_order(relations_.ncols(), basis_cols_));
}

std::variant<Reduction, NotExpressible> HoffmanReducer::reduce(const MzvIndex &target, std::int64_t residual_prec) const
{
    require_admissible(target, "hoffman_reduce");
    if (target.weight() != weight_) {
        throw IndexError("hoffman_reduce: " + target.to_display() + " does not have weight " + std::to_string(weight_));
    }
    Reduction r{target, {}, Ball()};
    if (is_hoffman(target)) {
        r.coefficients.emplace(target, 1);
        return r;
    }
    const auto res = express_in_span(echelon_, relations_.column_of(target), basis_cols_);
    if (const auto *ne = std::get_if<NotExpressible>(&res)) {
        return *ne;
    }
    for (const auto &[col, c] : std::get<SpanCoefficients>(res)) {
        r.coefficients.emplace(relations_.column_labels()[col], c);
    }
    IndexSum residual(target);
    residual -= r.as_sum();
    r.residual_check = eval_formal(residual, EvalConfig::with_prec(residual_prec));
    if (!r.residual_check.contains_zero()) {
        throw std::logic_error("hoffman_reduce: numeric residual for " + target.to_display() + " excludes zero");
    }
    return r;
}

const HoffmanReducer &hoffman_reducer(unsigned w, unsigned cap)
{
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<HoffmanReducer>> reducers;
    const std::lock_guard lock(mu);
    auto &slot = reducers[{w, cap}];
    if (!slot) {
        slot = std::make_unique<HoffmanReducer>(w, cap);
    }
    return *slot;
}

std::variant<Reduction, NotExpressible> hoffman_reduce(const MzvIndex &target, unsigned cap, std::int64_t residual_prec)
{
    require_admissible(target, "hoffman_reduce");
    if (target.weight() > cap) {
        throw WeightRangeError("hoffman_reduce: weight " + std::to_string(target.weight()) + " exceeds cap " +
                               std::to_string(cap));
    }
    return hoffman_reducer(static_cast<unsigned>(target.weight()), cap).reduce(target, residual_prec);
}

} // namespace mzv
