#include <doctest.h>

#include <set>

#include "support.hpp"

#include <mzv/core/dims.hpp>
#include <mzv/core/enumerate.hpp>
#include <mzv/core/word.hpp>
#include <mzv/numeval/zeta.hpp>
#include <mzv/relations/products.hpp>
#include <mzv/relations/reduce.hpp>
#include <mzv/relations/relations.hpp>

using namespace mzv;

namespace
{

EvalConfig at(std::int64_t p) { return EvalConfig::with_prec(p); }

IndexSum sum_of(std::initializer_list<std::pair<MzvIndex, Rational>> terms)
{
    IndexSum s;
    for (const auto &[k, c] : terms) {
        s.add(k, c);
    }
    return s;
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

TEST_CASE("stuffle products")
{
    CHECK(stuffle(MzvIndex{3}, MzvIndex{2}).to_string() == "(5) + (3,2) + (2,3)");
    CHECK(stuffle(MzvIndex{3}, MzvIndex{4}) == sum_of({{{7}, 1}, {{3, 4}, 1}, {{4, 3}, 1}}));
    CHECK(stuffle(MzvIndex{2}, MzvIndex{2}) == sum_of({{{4}, 1}, {{2, 2}, 2}}));
    CHECK(stuffle(MzvIndex{2, 1}, MzvIndex{2}) ==
          sum_of({{{2, 2, 1}, 1}, {{2, 1, 2}, 1}, {{2, 3}, 1}, {{4, 1}, 1}, {{2, 2, 1}, 1}}));
}

TEST_CASE("shuffle products")
{
    // x1 sh x0x1 = x1x0x1 + 2 x0x1x1
    const WordSum w = shuffle(BinaryWord::parse("x1"), BinaryWord::parse("x0x1"));
    CHECK(w.coefficient(BinaryWord::parse("x1x0x1")) == 1);
    CHECK(w.coefficient(BinaryWord::parse("x0x1x1")) == 2);
    CHECK(w.size() == 2);
    CHECK(shuffle_indices(MzvIndex{2}, MzvIndex{2}) == sum_of({{{3, 1}, 4}, {{2, 2}, 2}}));
    CHECK(shuffle(BinaryWord{}, BinaryWord::parse("x0x1")).coefficient(BinaryWord::parse("x0x1")) == 1);
}

TEST_CASE("product algebra laws [property]")
{
    test::Gen g(31);
    for (int t = 0; t < 60; ++t) {
        const MzvIndex u = g.composition(static_cast<unsigned>(g.integer(2, 6)), true);
        const MzvIndex v = g.composition(static_cast<unsigned>(g.integer(2, 6)), true);
        const IndexSum st = stuffle(u, v);
        const IndexSum sh = shuffle_indices(u, v);
        CHECK(st == stuffle(v, u));
        CHECK(sh == shuffle_indices(v, u));
        CHECK(st.homogeneous_weight() == std::optional<std::uint64_t>(u.weight() + v.weight()));
        CHECK(sh.homogeneous_weight() == std::optional<std::uint64_t>(u.weight() + v.weight()));
        // Shuffle coefficients count interleavings.
        CHECK(sh.mass() == Rational(binomial(u.weight() + v.weight(), u.weight())));
        for (const auto &[k, c] : st.terms()) {
            CHECK(k.admissible());
            CHECK(sgn(c) > 0);
        }
    }
}

TEST_CASE("products hold numerically [property]")
{
    test::Gen g(32);
    const Arith ar(140);
    for (int t = 0; t < 25; ++t) {
        const MzvIndex u = g.composition(static_cast<unsigned>(g.integer(2, 5)), true);
        const MzvIndex v = g.composition(static_cast<unsigned>(g.integer(2, 5)), true);
        const Ball prod = ar.mul(eval_mzv(u, at(120)), eval_mzv(v, at(120)));
        CHECK(prod.overlaps(eval_formal(stuffle(u, v), at(120))));
        CHECK(prod.overlaps(eval_formal(shuffle_indices(u, v), at(120))));
    }
}

TEST_CASE("relation families")
{
    CHECK(duality_rel(MzvIndex{2, 1}).combo == sum_of({{{2, 1}, 1}, {{3}, -1}}));
    CHECK(duality_rel(MzvIndex{2, 2}).combo.empty());
    CHECK(hoffman_rel(MzvIndex{2}).combo == sum_of({{{3}, 1}, {{2, 1}, -1}}));
    CHECK(fds_rel(MzvIndex{2}, MzvIndex{2}).combo == sum_of({{{4}, 1}, {{3, 1}, -4}}));
    CHECK(fds_rel(MzvIndex{2}, MzvIndex{3}).provenance == "FDS[(2),(3)]");
    CHECK(fds_rel(MzvIndex{2}, MzvIndex{2}).family == Family::fds);
    CHECK_THROWS_AS(fds_rel(MzvIndex{1}, MzvIndex{2}), IndexError);

    CHECK(FamilySet::parse("hoffman,fds").contains(Family::fds));
    CHECK_FALSE(FamilySet::parse("duality").contains(Family::fds));
    CHECK(FamilySet::all().to_string() == "fds,hoffman,duality");
    CHECK_THROWS_AS(FamilySet::parse("fds,bogus"), std::invalid_argument);
}

TEST_CASE("every generated relation vanishes numerically")
{
    for (unsigned w = 2; w <= 7; ++w) {
        for (const auto &r : generate_relations(w, FamilySet::all())) {
            if (!r.combo.empty()) {
                CHECK_MESSAGE(eval_formal(r.combo, at(100)).contains_zero(), r.provenance);
                CHECK(r.combo.homogeneous_weight() == std::optional<std::uint64_t>(w));
            }
        }
    }
}

TEST_CASE("relation matrices drop zero and proportional rows")
{
    const QMatrix m = build_relations(6, FamilySet::all());
    CHECK(m.ncols() == 16);
    std::set<std::vector<std::pair<std::size_t, Rational>>> seen;
    for (const auto &row : m.rows()) {
        REQUIRE_FALSE(row.empty());
        std::vector<std::pair<std::size_t, Rational>> key;
        for (const auto &[c, v] : row) {
            key.emplace_back(c, v / row.front().second);
        }
        CHECK(seen.insert(key).second);
    }
    CHECK_THROWS_AS(build_relations(1, FamilySet::all()), WeightRangeError);
    CHECK_THROWS_AS(build_relations(13, FamilySet::all()), WeightRangeError);
}

TEST_CASE("dimension bounds meet d_w")
{
    const auto d = d_sequence(10);
    for (unsigned w = 2; w <= 10; ++w) {
        const auto r = dimension_bound(w);
        CHECK(r.num_unknowns == (std::uint64_t{1} << (w - 2)));
        CHECK(r.upper_bound == r.num_unknowns - r.rank);
        CHECK(r.upper_bound == d[w].get_ui());
        CHECK(r.matches_conjecture);
    }
    // Fewer families give weaker bounds.
    CHECK(dimension_bound(4).upper_bound <= dimension_bound(4).num_unknowns);
}

TEST_CASE("Hoffman reduction")
{
    const auto four = hoffman_reduce(MzvIndex{4});
    REQUIRE(std::holds_alternative<Reduction>(four));
    CHECK(std::get<Reduction>(four).as_sum() == sum_of({{{2, 2}, Rational(4, 3)}}));

    const auto five = hoffman_reduce(MzvIndex{5});
    REQUIRE(std::holds_alternative<Reduction>(five));
    CHECK(std::get<Reduction>(five).as_sum() == sum_of({{{2, 3}, Rational(6, 5)}, {{3, 2}, Rational(4, 5)}}));

    const auto self = hoffman_reduce(MzvIndex{2, 3});
    REQUIRE(std::holds_alternative<Reduction>(self));
    CHECK(std::get<Reduction>(self).as_sum() == sum_of({{{2, 3}, 1}}));

    CHECK_THROWS_AS(hoffman_reduce(MzvIndex{1, 3}), IndexError);
}

TEST_CASE("reductions of weight <= 7 check out numerically")
{
    for (unsigned w = 2; w <= 7; ++w) {
        for (const auto &u : enumerate_admissible(w)) {
            const auto r = hoffman_reduce(u);
            REQUIRE(std::holds_alternative<Reduction>(r));
            const auto &red = std::get<Reduction>(r);
            CHECK(red.residual_check.contains_zero());
            for (const auto &[b, c] : red.coefficients) {
                CHECK(is_hoffman(b));
            }
            // Independent check of the residual at a different precision.
            IndexSum diff(u);
            diff -= red.as_sum();
            CHECK(eval_formal(diff, at(150)).contains_zero());
        }
    }
}
