#include <doctest.h>

#include <thread>

#include "support.hpp"

#include <mzv/core/enumerate.hpp>
#include <mzv/core/word.hpp>
#include <mzv/numeval/ball.hpp>
#include <mzv/numeval/constants.hpp>
#include <mzv/numeval/dyadic.hpp>
#include <mzv/numeval/mag.hpp>
#include <mzv/numeval/polylog.hpp>
#include <mzv/numeval/zeta.hpp>

using namespace mzv;

namespace
{

const char *const zeta2 = "1.64493406684822643647241516664602518921894990120679843773556";
const char *const zeta3 = "1.20205690315959428539973816151144999076498629234049888179227";
const char *const zeta4 = "1.08232323371113819151600369654116790277475095191872690768298";
const char *const ln2 = "0.69314718055994530941723212145817656807550013436025525412068";
const char *const li2_half = "0.582240526465012505902656320159680108744198474806126425434347";
const char *const zeta23 = "0.711566197550572432096973806086402612092561204438339236492222";
const char *const zeta32 = "0.228810397603353759768746148941688791932509342719882160229407";
const char *const pi4_120 = "0.811742425283353643637002772405875927081063213939045180762232";
const char *const pi6_5040 = "0.190751824122084213696472111835797598981590779381160042845452";

EvalConfig at(std::int64_t p) { return EvalConfig::with_prec(p); }

Rational to_q(const Dyadic &d)
{
    Rational r(d.mantissa());
    if (d.exponent() >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(d.exponent()));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-d.exponent()));
    }
    return r;
}

Dyadic random_dyadic(test::Gen &g)
{
    mpz_class m = g.integer(-(1L << 40), 1L << 40);
    m *= g.integer(1, 1L << 30);
    return Dyadic(m, g.integer(-120, 40));
}

} // namespace

TEST_CASE("dyadic arithmetic")
{
    const Dyadic a(mpz_class(3), -2); // 0.75
    const Dyadic b(5);
    CHECK((a + b) == Dyadic(mpz_class(23), -2));
    CHECK((a * b) == Dyadic(mpz_class(15), -2));
    CHECK((b - a).to_double() == doctest::Approx(4.25));
    CHECK(Dyadic(mpz_class(12), 0).mantissa() == 3); // normalized
    CHECK(Dyadic(mpz_class(12), 0).exponent() == 2);
    CHECK(Dyadic::from_hex(a.to_hex()) == a);
    CHECK(Dyadic::from_hex((-a).to_hex()) == -a);
    CHECK_THROWS(Dyadic::from_hex("12p3"));
    CHECK_THROWS(Dyadic::div(a, Dyadic(0), 10));
    CHECK(Dyadic(mpz_class(5), -1).nearest_integer() == 3);   // 2.5
    CHECK(Dyadic(mpz_class(-5), -1).nearest_integer() == -3); // ties away from zero
    CHECK(Dyadic(mpz_class(7), -2).nearest_integer() == 2);
}

TEST_CASE("dyadic division and square roots are accurate [property]")
{
    test::Gen g(21);
    for (int t = 0; t < 300; ++t) {
        const Dyadic a = random_dyadic(g);
        Dyadic b = random_dyadic(g);
        if (b.is_zero()) {
            b = Dyadic(1);
        }
        const std::int64_t prec = g.integer(8, 300);
        const Dyadic q = Dyadic::div(a, b, prec);
        CHECK(q.mantissa_bits() <= prec);
        if (!a.is_zero()) {
            // |q - a/b| < 2^(mag(q) - prec)
            const Rational err = abs(to_q(q) - to_q(a) / to_q(b));
            CHECK(err < to_q(Dyadic::pow2(q.magnitude_exponent() - prec)));
        }
        const Dyadic s = Dyadic::sqrt(a.abs(), prec);
        if (!a.is_zero()) {
            // s <= sqrt(|a|) < s + ulp
            const Dyadic ulp = Dyadic::pow2(s.magnitude_exponent() - prec + 1);
            CHECK(s * s <= a.abs());
            CHECK((s + ulp) * (s + ulp) > a.abs());
        }
    }
}

TEST_CASE("magnitudes are upper bounds [property]")
{
    test::Gen g(22);
    for (int t = 0; t < 500; ++t) {
        const Dyadic x = random_dyadic(g);
        const Dyadic y = random_dyadic(g);
        const Mag mx = Mag::upper(x);
        const Mag my = Mag::upper(y);
        CHECK(mx.to_dyadic() >= x.abs());
        CHECK(Mag::lower(x).to_dyadic() <= x.abs());
        CHECK((mx + my).to_dyadic() >= x.abs() + y.abs());
        CHECK((mx * my).to_dyadic() >= (x * y).abs());
        CHECK(mx.mantissa() < (std::uint64_t{1} << Mag::mantissa_limit_bits));
        if (!y.is_zero()) {
            const Rational exact = to_q(x.abs()) / to_q(y.abs());
            CHECK(to_q(Mag::div(mx, Mag::lower(y)).to_dyadic()) >= exact);
        }
    }
    CHECK(Mag::pow2(-10).log2_ceil() == -10);
    CHECK(Mag::from_uint(3).log2_ceil() == 2);
    CHECK(Mag::from_parts(6, 0) == Mag::from_parts(3, 1));
}

TEST_CASE("ball arithmetic encloses exact rational results [property]")
{
    test::Gen g(23);
    for (int t = 0; t < 300; ++t) {
        const Rational p = g.rational(1000, 1000);
        Rational q = g.rational(1000, 1000);
        if (sgn(q) == 0) {
            q = 1;
        }
        const std::int64_t prec = g.integer(20, 200);
        const Arith ar(prec);
        const Ball bp = ar.div(Ball::from_integer(p.get_num()), p.get_den());
        const Ball bq = ar.div(Ball::from_integer(q.get_num()), q.get_den());
        REQUIRE(test::contains_rational(bp, p));
        CHECK(test::contains_rational(ar.add(bp, bq), p + q));
        CHECK(test::contains_rational(ar.sub(bp, bq), p - q));
        CHECK(test::contains_rational(ar.mul(bp, bq), p * q));
        CHECK(test::contains_rational(ar.div(bp, bq), p / q));
        CHECK(test::contains_rational(ar.mul(bp, q), p * q));
        CHECK(test::contains_rational(ar.pow(bq, 3), q * q * q));
    }
}

TEST_CASE("ball predicates and rendering")
{
    const Ball b(Dyadic(1), Mag::pow2(-4));
    CHECK(b.contains(Dyadic(mpz_class(17), -4)));
    CHECK_FALSE(b.contains(Dyadic(mpz_class(18), -4)));
    CHECK_FALSE(b.contains_zero());
    CHECK(Ball(Dyadic(mpz_class(1), -5), Mag::pow2(-4)).contains_zero());
    CHECK(b.overlaps(Ball(Dyadic(mpz_class(9), -3), Mag::pow2(-4))));
    CHECK(b.contains(Ball(Dyadic(1), Mag::pow2(-5))));
    CHECK(Ball(7).to_decimal() == "7");
    const Ball third = Arith(200).div(Ball(1), mpz_class(3));
    CHECK(third.to_decimal(10) == "0.3333333333…");
    const Ball wide(Dyadic(1), Mag::pow2(2));
    CHECK(wide.to_decimal().find("+/-") != std::string::npos);
}

TEST_CASE("constants against frozen digits")
{
    const Arith ar(200);
    const Ball pi = pi_ball(190);
    CHECK(pi.radius_le_pow2(-190));
    CHECK(ar.div(ar.sqr(pi), mpz_class(6)).overlaps(test::oracle(zeta2)));
    CHECK(ar.div(ar.pow(pi, 4), mpz_class(120)).overlaps(test::oracle(pi4_120)));
    CHECK(ar.div(ar.pow(pi, 6), mpz_class(5040)).overlaps(test::oracle(pi6_5040)));
    CHECK(ln2_ball(190).overlaps(test::oracle(ln2)));
    const Ball phi = golden_ratio_ball(150);
    CHECK(phi.radius_le_pow2(-150));
    CHECK(ar.sub(ar.sqr(phi), ar.add(phi, Ball(1))).contains_zero());
}

TEST_CASE("zeta values against frozen digits")
{
    CHECK(eval_mzv(MzvIndex{2}, at(64)).overlaps(test::oracle(zeta2)));
    CHECK(eval_mzv(MzvIndex{2}, at(180)).overlaps(test::oracle(zeta2)));
    CHECK(eval_mzv(MzvIndex{3}, at(180)).overlaps(test::oracle(zeta3)));
    CHECK(eval_mzv(MzvIndex{4}, at(180)).overlaps(test::oracle(zeta4)));
    CHECK(eval_mzv(MzvIndex{2, 3}, at(180)).overlaps(test::oracle(zeta23)));
    CHECK(eval_mzv(MzvIndex{3, 2}, at(180)).overlaps(test::oracle(zeta32)));
    CHECK(eval_mzv(MzvIndex{2, 1}, at(180)).overlaps(test::oracle(zeta3)));
    CHECK(eval_mzv(MzvIndex{2, 2}, at(180)).overlaps(test::oracle(pi4_120)));
    CHECK(eval_mzv(MzvIndex{2, 2, 2}, at(180)).overlaps(test::oracle(pi6_5040)));
    CHECK(eval_mzv(MzvIndex{2}, at(64)).to_decimal().rfind("1.644934066848226436", 0) == 0);
}

TEST_CASE("evaluation contract")
{
    CHECK_THROWS_AS(eval_mzv(MzvIndex{1, 2}, at(64)), IndexError);
    CHECK_THROWS(eval_mzv(MzvIndex{2}, at(8)));
    const Ball b = eval_mzv(MzvIndex{3, 1, 2}, at(100));
    CHECK(b.rad() == Mag::pow2(-100));
    CHECK(eval_mzv(MzvIndex{3, 1, 2}, at(100)).mid() == b.mid()); // memoized, identical
    clear_mzv_cache();
    CHECK(eval_mzv(MzvIndex{3, 1, 2}, at(100)).mid() == b.mid()); // deterministic
}

TEST_CASE("refinement: the 2p ball lies inside the p ball [property]")
{
    test::Gen g(24);
    for (int t = 0; t < 40; ++t) {
        const MzvIndex u = g.composition(static_cast<unsigned>(g.integer(2, 8)), true);
        const std::int64_t p = g.integer(32, 160);
        const Ball lo = eval_mzv(u, at(p));
        const Ball hi = eval_mzv(u, at(2 * p));
        CHECK_MESSAGE(lo.contains(hi), u.to_display() << " at " << p);
    }
}

TEST_CASE("naive summation agrees with the accelerated evaluation [property]")
{
    test::Gen g(25);
    for (int t = 0; t < 15; ++t) {
        const MzvIndex u = g.composition(static_cast<unsigned>(g.integer(2, 6)), true);
        if (u[0] < 2 || u.depth() > 3) {
            continue;
        }
        const Ball naive = eval_naive(u, 3000);
        CHECK_MESSAGE(naive.overlaps(eval_mzv(u, at(64))), u.to_display());
    }
    CHECK(naive_min_terms(4) > naive_min_terms(2));
    CHECK(eval_naive(MzvIndex{2}, 1000).contains(eval_mzv(MzvIndex{2}, at(64))));
}

TEST_CASE("Hoelder convolution")
{
    // zeta(2) = 2 Li_2(1/2) + ln(2)^2
    const Ball li2 = eval_li_half(BinaryWord::parse("x0x1"), at(180));
    CHECK(li2.overlaps(test::oracle(li2_half)));
    const Arith ar(200);
    const Ball l2 = ln2_ball(180);
    CHECK(ar.add(ar.mul(li2, mpz_class(2)), ar.sqr(l2)).overlaps(test::oracle(zeta2)));
    // Li_1(1/2) = ln 2; the empty word gives 1.
    CHECK(eval_li_half(BinaryWord::parse("x1"), at(150)).overlaps(l2));
    CHECK(eval_li_half(BinaryWord{}, at(64)).contains(Dyadic(1)));

    const auto split = holder_split(index_to_word(MzvIndex{2, 1}));
    CHECK(split.size() == 4);
    CHECK(split.front().first.size() == 0);
    CHECK(split.back().second.size() == 0);
    CHECK_THROWS_AS(holder_split(BinaryWord::parse("x1x0x1")), IndexError);

    CHECK(li_half_terms(1, 64) >= 65);
    CHECK(li_half_tail_bound(2, li_half_terms(2, 100)).le_pow2(-100));
}

TEST_CASE("formal sums evaluate term by term")
{
    IndexSum s;
    s.add(MzvIndex{2, 1}, 1);
    s.add(MzvIndex{3}, -1);
    const Ball z = eval_formal(s, at(120));
    CHECK(z.contains_zero());
    CHECK(z.radius_le_pow2(-110));
    CHECK(eval_formal(IndexSum{}, at(64)).contains_zero());
}

TEST_CASE("concurrent evaluations agree")
{
    clear_mzv_cache();
    std::vector<Ball> out(4);
    std::vector<std::thread> th;
    for (std::size_t i = 0; i < out.size(); ++i) {
        th.emplace_back([&out, i] { out[i] = eval_mzv(MzvIndex{3, 2, 2}, at(200)); });
    }
    for (auto &t : th) {
        t.join();
    }
    for (const auto &b : out) {
        CHECK(b.mid() == out[0].mid());
        CHECK(b.rad() == out[0].rad());
    }
}

TEST_CASE("zeta at even arguments from pi")
{
    for (unsigned k = 1; k <= 5; ++k) {
        const Ball z = zeta_two_pow(k, at(128));
        CHECK(z.radius_le_pow2(-128));
        std::vector<MzvIndex::Part> parts(k, 2);
        CHECK(z.overlaps(eval_mzv(MzvIndex(parts), at(128))));
    }
}
