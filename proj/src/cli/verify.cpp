#include <mzv/cli/verify.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <mzv/core/dims.hpp>
#include <mzv/core/enumerate.hpp>
#include <mzv/lindep/certificate.hpp>
#include <mzv/lindep/lemma.hpp>
#include <mzv/lindep/pslq.hpp>
#include <mzv/numeval/constants.hpp>
#include <mzv/numeval/zeta.hpp>
#include <mzv/relations/reduce.hpp>
#include <mzv/relations/relations.hpp>

namespace mzv::cli
{

namespace
{

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void check(bool cond, const std::string &what)
    {
        if (!cond) {
            if (ok) {
                detail << "failed: ";
            } else {
                detail << "; ";
            }
            detail << what;
            ok = false;
        }
    }
};

EvalConfig at(std::int64_t p) { return EvalConfig::with_prec(p); }

MzvIndex twos(unsigned k) { return MzvIndex(std::vector<MzvIndex::Part>(k, 2)); }

void closed_form(Outcome &o)
{
    for (unsigned k = 1; k <= 5; ++k) {
        const Ball z = eval_mzv(twos(k), at(128));
        const Ball c = zeta_two_pow(k, at(128));
        const std::string tag = "k=" + std::to_string(k);
        o.check(z.overlaps(c), tag + " balls disjoint");
        o.check(z.radius_le_pow2(-120) && c.radius_le_pow2(-120), tag + " radius above 2^-120");
    }
    if (o.ok) {
        o.detail << "zeta((2)_k) meets pi^(2k)/(2k+1)! for k=1..5 at 128 bits";
    }
}

void stuffle_identity(Outcome &o)
{
    const Arith ar(160);
    for (const auto &p : corollary_products(4)) {
        const Ball lhs = ar.mul(eval_mzv(MzvIndex{3}, at(128)), eval_mzv(MzvIndex{2 * p.k}, at(128)));
        const Ball diff = ar.sub(lhs, eval_formal(p.rhs, at(128)));
        const std::string tag = "k=" + std::to_string(p.k);
        o.check(p.matches_stuffle, tag + " expansion differs from stuffle((3),(2k))");
        o.check(diff.contains_zero(), tag + " difference excludes 0");
        o.check(diff.radius_le_pow2(-100), tag + " radius above 2^-100");
    }
    if (o.ok) {
        o.detail << "zeta(3)zeta(2k) - [(2k+3)+(3,2k)+(2k,3)] contains 0 for k=1..5";
    }
}

void euler(Outcome &o)
{
    const Ball a = eval_mzv(MzvIndex{2, 1}, at(200));
    const Ball b = eval_mzv(MzvIndex{3}, at(200));
    o.check(a.overlaps(b), "zeta(2,1) and zeta(3) disjoint at 200 bits");
    o.check((a.rad() + b.rad()).le_pow2(-190), "combined radius above 2^-190");
    const Ball naive = eval_naive(MzvIndex{2, 1}, 20000);
    o.check(naive.overlaps(a), "naive summation of zeta(2,1) disagrees");
    if (o.ok) {
        o.detail << "zeta(2,1) meets zeta(3) at 200 bits; naive sum (N=20000) agrees";
    }
}

void dimension_bounds(Outcome &o)
{
    const auto d = d_sequence(8);
    std::ostringstream got;
    std::size_t checked = 0;
    for (unsigned w = 2; w <= 8; ++w) {
        const auto rep = dimension_bound(w);
        got << (w > 2 ? " " : "") << rep.upper_bound;
        o.check(rep.upper_bound == d[w].get_ui(), "w=" + std::to_string(w) + " bound " +
                                                      std::to_string(rep.upper_bound) + " != d_w");
        for (const auto &r : generate_relations(w, FamilySet::all())) {
            if (r.combo.empty()) {
                continue;
            }
            ++checked;
            if (!eval_formal(r.combo, at(100)).contains_zero()) {
                o.check(false, r.provenance + " fails the numeric check");
            }
        }
    }
    if (o.ok) {
        o.detail << "upper bounds " << got.str() << " for w=2..8; " << checked << " relations vanish at 100 bits";
    }
}

void counting(Outcome &o)
{
    for (unsigned w = 2; w <= 16; ++w) {
        o.check(enumerate_admissible(w).size() == (std::size_t{1} << (w - 2)),
                "|admissible(" + std::to_string(w) + ")| != 2^(w-2)");
    }
    const auto d = d_sequence(40);
    for (unsigned w = 2; w <= 40; ++w) {
        o.check(mpz_class(static_cast<unsigned long>(enumerate_hoffman(w).size())) == d[w],
                "|hoffman(" + std::to_string(w) + ")| != d_w");
    }
    if (o.ok) {
        o.detail << "2^(w-2) admissible indices for w=2..16; d_w Hoffman indices for w=2..40";
    }
}

std::optional<std::vector<Integer>> pslq_relation(const std::vector<MzvIndex> &ids, std::int64_t prec, int bits)
{
    const auto r = probe(
        [&](std::int64_t p) {
            std::vector<Ball> v;
            for (const auto &i : ids) {
                v.push_back(eval_mzv(i, at(p)));
            }
            return v;
        },
        prec, bits);
    if (r.status != ProbeStatus::relation) {
        return std::nullopt;
    }
    return r.relation->coefficients;
}

void hoffman_reduction(Outcome &o)
{
    std::size_t n = 0;
    for (unsigned w = 2; w <= 8; ++w) {
        for (const auto &idx : enumerate_admissible(w)) {
            const auto r = hoffman_reduce(idx);
            if (const auto *ne = std::get_if<NotExpressible>(&r)) {
                o.check(false, idx.to_display() + " not expressible: " + ne->reason);
                continue;
            }
            o.check(std::get<Reduction>(r).residual_check.contains_zero(), idx.to_display() + " residual excludes 0");
            ++n;
        }
    }
    auto golden = [&](const MzvIndex &target, const IndexSum &expect, const std::vector<Integer> &pslq_expect) {
        const auto r = hoffman_reduce(target);
        o.check(std::holds_alternative<Reduction>(r) && std::get<Reduction>(r).as_sum() == expect,
                target.to_display() + " reduction differs from " + expect.to_string());
        std::vector<MzvIndex> ids{target};
        for (const auto &[k, c] : expect.terms()) {
            ids.push_back(k);
        }
        const auto rel = pslq_relation(ids, 128, 16);
        o.check(rel && *rel == pslq_expect, target.to_display() + " golden not confirmed by PSLQ");
    };
    IndexSum four;
    four.add(MzvIndex{2, 2}, Rational(4, 3));
    golden(MzvIndex{4}, four, {3, -4});
    IndexSum five;
    five.add(MzvIndex{2, 3}, Rational(6, 5));
    five.add(MzvIndex{3, 2}, Rational(4, 5));
    // terms are ordered (3,2) before (2,3)
    golden(MzvIndex{5}, five, {5, -4, -6});
    if (o.ok) {
        o.detail << n << " indices of weight <= 8 reduced; (4) -> " << four.to_string() << ", (5) -> "
                 << five.to_string() << " confirmed by PSLQ";
    }
}

void pslq_checks(Outcome &o)
{
    const auto phi = probe(
        [](std::int64_t p) {
            const Ball g = golden_ratio_ball(p + 8);
            return std::vector<Ball>{Ball(1), g, Arith(p + 8).sqr(g)};
        },
        128, 16);
    o.check(phi.status == ProbeStatus::relation && phi.relation->coefficients == std::vector<Integer>{1, 1, -1},
            "(1, phi, phi^2) did not give (1, 1, -1)");
    const auto e = pslq_relation({MzvIndex{2, 1}, MzvIndex{3}}, 128, 16);
    o.check(e && *e == std::vector<Integer>{1, -1}, "Euler relation not recovered");
    const auto z3 = probe(
        [](std::int64_t p) { return std::vector<Ball>{Ball(1), eval_mzv(MzvIndex{3}, at(p))}; }, 256, 20);
    o.check(z3.status == ProbeStatus::no_relation && z3.bound->bound_bits == 20,
            "(1, zeta(3)) did not give NoRelationBelow(2^20)");
    if (o.ok) {
        o.detail << "(1,phi,phi^2) -> (1, 1, -1); (zeta(2,1), zeta(3)) -> (1, -1); (1, zeta(3)) at 256 bits: "
                    "no relation below 2^20";
    }
}

void certificates(Outcome &o)
{
    const auto c1 = certify_corollary(1, 512);
    o.check(c1.found && c1.subset_I.size() == 1 && (c1.subset_I[0] == 5 || c1.subset_I[0] == 7),
            "l=1 subset I not a singleton of {5,7}");
    const std::vector<MzvIndex> expect{{2, 3}, {3, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}};
    o.check(c1.candidate_set == expect, "l=1 candidate set differs");
    o.check(!c1.outcomes.empty() && c1.outcomes.back().status == ProbeStatus::no_relation &&
                c1.outcomes.back().bound->bound_bits == 32,
            "l=1 outcome is not NoRelationBelow(2^32)");
    const auto c5 = certify_corollary(5, 512);
    o.check(c5.found && c5.subset_I.size() == 5, "l=5 certificate not found");
    if (o.ok) {
        std::ostringstream i5;
        for (const auto w : c5.subset_I) {
            i5 << (i5.tellp() > 0 ? "," : "") << w;
        }
        o.detail << "l=1: I={" << c1.subset_I[0] << "}, 5 candidate vectors; l=5: I={" << i5.str()
                 << "}; no relation below 2^32";
    }
}

void growth(Outcome &o)
{
    const auto d = d_sequence(60);
    const double ratio = mpq_class(d[60], d[59]).get_d();
    const double a = alpha(64).mid().to_double();
    o.check(std::abs(ratio - a) < 1e-3, "d_60/d_59 too far from alpha");
    if (o.ok) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "d_60/d_59 = %.9f, alpha = %.9f", ratio, a);
        o.detail << buf;
    }
}

Rational random_rational(std::mt19937_64 &rng, bool nonzero)
{
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    for (;;) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (!nonzero || sgn(q) != 0) {
            return q;
        }
    }
}

void lemma_step(Outcome &o, const BatteryOptions &opts)
{
    std::mt19937_64 rng(opts.seed);
    int agree = 0;
    for (int t = 0; t < opts.lemma_trials; ++t) {
        const int k = std::uniform_int_distribution<int>(1, 6)(rng);
        const int p = std::uniform_int_distribution<int>(1, k)(rng);
        LinearForm f1, f2;
        f1.k = f2.k = k;
        f1.a = random_rational(rng, true);
        f2.a = random_rational(rng, true);
        f1.b = random_rational(rng, false);
        f2.b = random_rational(rng, false);
        for (int i = 1; i <= k; ++i) {
            const Rational c1 = random_rational(rng, i == p);
            if (sgn(c1) != 0) {
                f1.c[i] = c1;
            }
            const Rational c2 = random_rational(rng, false);
            if (i != p && sgn(c2) != 0) {
                f2.c[i] = c2;
            }
        }
        const auto out = lemma1_eliminate(f1, f2, p);
        const auto it = out.find(p);
        if (it != out.end() && it->second == f1.c.at(p) * f2.a) {
            ++agree;
        }
    }
    o.check(agree == opts.lemma_trials, std::to_string(opts.lemma_trials - agree) + " forms disagree");
    if (o.ok) {
        o.detail << agree << " seeded form pairs: y_p coefficient equals C_1p A_2";
    }
}

struct Criterion {
    const char *title;
    double limit;
};

constexpr Criterion criteria[criterion_count] = {
    {"closed form zeta((2)_k)", 30},  {"stuffle identity", 0},   {"Euler/duality", 0},
    {"dimension bounds", 60},         {"counting", 0},           {"Hoffman reduction", 120},
    {"PSLQ", 30},                     {"certificates", 600},     {"growth", 0},
    {"Lemma 1 step", 0},
};

} // namespace

CriterionResult run_criterion(int id, const BatteryOptions &opts)
{
    if (id < 1 || id > criterion_count) {
        throw std::out_of_range("run_criterion: no criterion " + std::to_string(id));
    }
    CriterionResult res;
    res.id = id;
    res.title = criteria[id - 1].title;
    res.time_limit = criteria[id - 1].limit;
    clear_mzv_cache();
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        switch (id) {
        case 1: closed_form(o); break;
        case 2: stuffle_identity(o); break;
        case 3: euler(o); break;
        case 4: dimension_bounds(o); break;
        case 5: counting(o); break;
        case 6: hoffman_reduction(o); break;
        case 7: pslq_checks(o); break;
        case 8: certificates(o); break;
        case 9: growth(o); break;
        case 10: lemma_step(o, opts); break;
        default: break;
        }
    } catch (const std::exception &e) {
        o.check(false, std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (res.time_limit > 0 && res.seconds > res.time_limit) {
        o.check(false, "exceeded the time limit of " + std::to_string(static_cast<int>(res.time_limit)) + " s");
    }
    res.passed = o.ok;
    res.detail = o.detail.str();
    return res;
}

std::vector<CriterionResult> run_battery(const BatteryOptions &opts)
{
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id) {
        out.push_back(run_criterion(id, opts));
    }
    return out;
}

std::string render_battery(const std::vector<CriterionResult> &results)
{
    std::ostringstream os;
    int passed = 0;
    for (const auto &r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << ": " << r.detail << "\n";
        passed += r.passed ? 1 : 0;
    }
    os << passed << "/" << results.size() << " passed\n";
    return os.str();
}

} // namespace mzv::cli
