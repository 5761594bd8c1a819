#include <doctest.h>

#include "support.hpp"

#include <mzv/lindep/certificate.hpp>
#include <mzv/lindep/lemma.hpp>
#include <mzv/lindep/pslq.hpp>
#include <mzv/numeval/constants.hpp>
#include <mzv/numeval/zeta.hpp>
#include <mzv/relations/products.hpp>

using namespace mzv;

namespace
{

EvalConfig at(std::int64_t p) { return EvalConfig::with_prec(p); }

std::vector<Ball> phi_tuple(std::int64_t p)
{
    const Ball g = golden_ratio_ball(p + 8);
    return {Ball(1), g, Arith(p + 8).sqr(g)};
}

std::vector<Ball> euler_tuple(std::int64_t p) { return {eval_mzv(MzvIndex{2, 1}, at(p)), eval_mzv(MzvIndex{3}, at(p))}; }

RelationCandidate as_candidate(const PslqResult &r)
{
    REQUIRE(std::holds_alternative<RelationCandidate>(r));
    return std::get<RelationCandidate>(r);
}

using Coeffs = std::vector<Integer>;

} // namespace

TEST_CASE("PSLQ recovers known relations")
{
    CHECK(as_candidate(pslq(phi_tuple(128), 16)).coefficients == Coeffs{1, 1, -1});
    CHECK(as_candidate(pslq(euler_tuple(128), 16)).coefficients == Coeffs{1, -1});

    // 2 zeta(2)^2 = 5 zeta(4)
    const Ball z2 = eval_mzv(MzvIndex{2}, at(256));
    const std::vector<Ball> v{Ball(1), z2, Arith(260).sqr(z2), eval_mzv(MzvIndex{4}, at(256))};
    const auto c = as_candidate(pslq(v, 16));
    CHECK(c.coefficients == Coeffs{0, 0, 2, -5});
    CHECK(c.norm == 5);
    CHECK(c.residual.contains_zero());
}

TEST_CASE("PSLQ reports the absence of small relations")
{
    const std::vector<Ball> v{Ball(1), eval_mzv(MzvIndex{3}, at(256))};
    const auto r = pslq(v, 20);
    REQUIRE(std::holds_alternative<NoRelationBelow>(r));
    CHECK(std::get<NoRelationBelow>(r).bound_bits == 20);
    CHECK(std::get<NoRelationBelow>(r).achieved_log2 >= 20);
}

TEST_CASE("PSLQ on (1, p/q) finds (p, -q) [property]")
{
    test::Gen g(41);
    for (int t = 0; t < 60; ++t) {
        const long qd = g.integer(1, 1000);
        long pn = g.integer(-3000, 3000);
        if (pn == 0) {
            pn = 1;
        }
        Rational r(pn, qd);
        r.canonicalize();
        const Ball x = Arith(220).div(Ball(pn), mpz_class(qd));
        const auto c = as_candidate(pslq(std::vector<Ball>{Ball(1), x}, 24));
        REQUIRE(c.coefficients.size() == 2);
        // c0 + c1 * r == 0 with c primitive.
        CHECK(Rational(c.coefficients[0]) + Rational(c.coefficients[1]) * r == 0);
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), c.coefficients[0].get_mpz_t(), c.coefficients[1].get_mpz_t());
        CHECK(gcd == 1);
        CHECK(abs(c.coefficients[1]) == r.get_den());
        CHECK(sgn(c.coefficients[0]) > 0);
    }
}

TEST_CASE("PSLQ candidates always contain zero [property]")
{
    test::Gen g(42);
    for (int t = 0; t < 30; ++t) {
        std::vector<Ball> v{Ball(1)};
        const int n = static_cast<int>(g.integer(1, 3));
        for (int i = 0; i < n; ++i) {
            const MzvIndex u = g.composition(static_cast<unsigned>(g.integer(2, 6)), true);
            v.push_back(eval_mzv(u, at(200)));
        }
        const auto r = pslq(v, 12);
        if (const auto *c = std::get_if<RelationCandidate>(&r)) {
            CHECK(c->residual.contains_zero());
            CHECK(c->norm < (Integer(1) << 12));
        }
    }
}

TEST_CASE("PSLQ preconditions")
{
    CHECK_THROWS_AS(pslq(std::vector<Ball>{Ball(1)}, 8), PslqError);
    CHECK_THROWS_AS(pslq(phi_tuple(64), 32), InsufficientPrecision);
    const std::vector<Ball> zero{Ball(1), Ball(Dyadic(0), Mag::pow2(-300))};
    CHECK_THROWS_AS(pslq(zero, 8), DegenerateInput);
}

TEST_CASE("candidate verification")
{
    const auto phi = as_candidate(pslq(phi_tuple(128), 16));
    CHECK(verify_candidate(phi, phi_tuple(256)));
    RelationCandidate bad = phi;
    bad.coefficients[2] = -2;
    CHECK_FALSE(verify_candidate(bad, phi_tuple(256)));
    const auto e = as_candidate(pslq(euler_tuple(128), 16));
    CHECK(verify_candidate(e, euler_tuple(512)));
    CHECK_FALSE(verify_candidate(e, phi_tuple(256))); // wrong length
}

TEST_CASE("probe re-checks candidates at doubled precision")
{
    const auto ok = probe(euler_tuple, 128, 16);
    CHECK(ok.status == ProbeStatus::relation);
    REQUIRE(ok.relation.has_value());
    CHECK(render_coefficients(ok.relation->coefficients) == "(1, -1)");

    // 1/3 at low precision, a slightly different number at high precision.
    auto drifting = [](std::int64_t p) {
        Ball third = Arith(p + 16).div(Ball(1), mpz_class(3));
        if (p > 200) {
            third = Ball(third.mid() + Dyadic::pow2(-180), third.rad());
        }
        return std::vector<Ball>{Ball(1), third};
    };
    const auto rej = probe(drifting, 200, 16);
    CHECK(rej.status == ProbeStatus::rejected);
    CHECK_FALSE(rej.relation.has_value());

    const auto none = probe([](std::int64_t p) { return std::vector<Ball>{Ball(1), eval_mzv(MzvIndex{3}, at(p))}; },
                            256, 20);
    CHECK(none.status == ProbeStatus::no_relation);
}

TEST_CASE("Lemma 1 elimination step")
{
    LinearForm f1{Rational(2), Rational(3), {{1, Rational(5)}}, 2};
    LinearForm f2{Rational(1), Rational(0), {{2, Rational(7)}}, 2};
    const auto out = lemma1_eliminate(f1, f2, 1);
    CHECK(out == std::map<int, Rational>{{0, Rational(3)}, {1, Rational(5)}, {2, Rational(-14)}});

    // b2 = 0: constant is b1 a2.
    LinearForm g1{Rational(4), Rational(9, 2), {{1, Rational(1)}}, 1};
    LinearForm g2{Rational(3), Rational(0), {}, 1};
    CHECK(lemma1_eliminate(g1, g2, 1).at(0) == Rational(27, 2));

    CHECK_THROWS_AS(lemma1_eliminate(f2, f1, 1), std::invalid_argument); // f1.c[p] == 0
    CHECK_THROWS_AS(lemma1_eliminate(f1, f1, 1), std::invalid_argument); // f2.c[p] != 0
    LinearForm z = f2;
    z.a = 0;
    CHECK_THROWS_AS(lemma1_eliminate(f1, z, 1), std::invalid_argument);
    LinearForm out_of_range = f1;
    out_of_range.c[3] = 1;
    CHECK_THROWS_AS(lemma1_eliminate(out_of_range, f2, 1), std::invalid_argument);
}

TEST_CASE("Lemma 1: the y_p coefficient is C_1p A_2 [property]")
{
    test::Gen g(43);
    for (int t = 0; t < 1000; ++t) {
        const int k = static_cast<int>(g.integer(1, 6));
        const int p = static_cast<int>(g.integer(1, k));
        LinearForm f1, f2;
        f1.k = f2.k = k;
        do {
            f1.a = g.rational(40, 20);
        } while (sgn(f1.a) == 0);
        do {
            f2.a = g.rational(40, 20);
        } while (sgn(f2.a) == 0);
        f1.b = g.rational(40, 20);
        f2.b = g.rational(40, 20);
        for (int i = 1; i <= k; ++i) {
            Rational c1 = g.rational(40, 20);
            while (i == p && sgn(c1) == 0) {
                c1 = g.rational(40, 20);
            }
            if (sgn(c1) != 0) {
                f1.c[i] = c1;
            }
            const Rational c2 = g.rational(40, 20);
            if (i != p && sgn(c2) != 0) {
                f2.c[i] = c2;
            }
        }
        const auto out = lemma1_eliminate(f1, f2, p);
        REQUIRE(out.contains(p));
        CHECK(out.at(p) == f1.c.at(p) * f2.a);
        CHECK(out.count(0) == (sgn(f1.b * f2.a - f2.b * f1.a) != 0 ? 1U : 0U));
    }
}

TEST_CASE("product identities")
{
    const auto p = corollary_products(1);
    REQUIRE(p.size() == 2);
    CHECK(p[0].rhs.to_string() == "(5) + (3,2) + (2,3)");
    CHECK(p[1].rhs.to_string() == "(7) + (4,3) + (3,4)");
    const Arith ar(150);
    for (const auto &pi : corollary_products(4)) {
        CHECK(pi.matches_stuffle);
        CHECK(pi.rhs == stuffle(MzvIndex{3}, MzvIndex{2 * pi.k}));
        const Ball lhs = ar.mul(eval_mzv(MzvIndex{3}, at(128)), eval_mzv(MzvIndex{2 * pi.k}, at(128)));
        CHECK(lhs.overlaps(eval_formal(pi.rhs, at(128))));
    }
    CHECK_THROWS_AS(corollary_products(0), std::invalid_argument);
}

TEST_CASE("independence certificate for l = 1")
{
    const auto c = certify_corollary(1, 512);
    CHECK(c.found);
    REQUIRE(c.subset_I.size() == 1);
    CHECK((c.subset_I[0] == 5 || c.subset_I[0] == 7));
    REQUIRE(c.vectors.size() == 1);
    CHECK(c.vectors[0].weight() == c.subset_I[0]);
    CHECK(c.candidate_set == std::vector<MzvIndex>{{2, 3}, {3, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}});
    for (const auto &p : c.products_used) {
        CHECK(p.numeric_ok);
    }
    REQUIRE_FALSE(c.outcomes.empty());
    CHECK(c.outcomes.back().status == ProbeStatus::no_relation);
    CHECK(c.outcomes.back().bound->bound_bits == 32);

    const std::string text = c.render_text();
    CHECK(text.find("experimental evidence, not proof") != std::string::npos);
    CHECK(text.find("512 bits") != std::string::npos);
    CHECK(text.find("2^32") != std::string::npos);

    CHECK_THROWS_AS(certify_corollary(1, 96), InsufficientPrecision);
}
