#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"

using namespace grmds;
using namespace grmds::testutil;

TEST_CASE("ring construction rejects bad parameters") {
    CHECK_THROWS_AS(GRContext::make(4, 2, ZPoly(16, {1, 1, 1})), InvalidInputError);
    CHECK_THROWS_AS(GRContext::make(2, 0, ZPoly(2, {1, 1, 1})), InvalidInputError);
    // x^2 + 1 projects to (x+1)^2 over F2
    CHECK_THROWS_AS(GRContext::make(2, 2, ZPoly(4, {1, 0, 1})), NotBasicIrreducibleError);
    CHECK_THROWS_AS(GRContext::make(2, 2, ZPoly(4, {1, 2, 1})), NotBasicIrreducibleError);
}

TEST_CASE("non-monic unit-lead modulus is normalized") {
    auto ctx = ring_9_81();  // supplied lead 5
    CHECK(ctx->modulus().is_monic());
    CHECK(ctx->m() == 2);
    CHECK(ctx->supplied_modulus().leading() == 5);
}

TEST_CASE("unit nilpotent trichotomy is exhaustive") {
    for (auto ctx : {ring_4_16(), ring_9_81()}) {
        std::uint64_t units = 0, nilpotents = 0;
        for (std::uint64_t i = 0; i < ctx->element_count(); ++i) {
            GRElement a = ctx->element_at(i);
            if (a.classify() == ElementClass::Unit) {
                ++units;
                CHECK(a * a.inv() == ctx->one());
            } else {
                ++nilpotents;
                GRElement t = a;
                for (std::uint64_t e = 1; e < ctx->s(); ++e) t = t * a;
                CHECK((t * t).is_zero());  // a^(2s) = 0 for nilpotent a
                CHECK_THROWS_AS(a.inv(), NotAUnitError);
            }
        }
        CHECK(units == ctx->unit_count());
        CHECK(nilpotents == ctx->nilpotent_count());
        CHECK(units + nilpotents == ctx->element_count());
    }
}

TEST_CASE("unit counts match the closed formula") {
    CHECK(ring_4_16()->unit_count() == 12);
    CHECK(ring_4_256()->unit_count() == 240);
    CHECK(ring_9_729()->unit_count() == 702);
    CHECK(ring_9_81()->unit_count() == 72);
}

TEST_CASE("reduction to the residue field is a ring homomorphism") {
    auto ctx = ring_9_81();
    const FFContext& f = ctx->residue_field();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        GRElement a = random_element(ctx, rng), b = random_element(ctx, rng);
        CHECK((a + b).reduce() == f.add(a.reduce(), b.reduce()));
        CHECK((a * b).reduce() == f.mul(a.reduce(), b.reduce()));
    }
    CHECK(ctx->one().reduce() == f.one());
}

TEST_CASE("reduction commutes with determinants") {
    auto ctx = ring_4_256();
    const FFContext& f = ctx->residue_field();
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        GRMatrix m = random_matrix(ctx, 3, rng);
        std::vector<FFElement> reduced;
        for (const auto& e : m.entries()) reduced.push_back(e.reduce());
        CHECK(mat_det(m).reduce() == ff_det(f, reduced, 3));
    }
}

TEST_CASE("Teichmuller generator and set") {
    auto ctx = ring_4_256();
    CHECK(ctx->xi().order() == 15);
    const auto& tau = ctx->teichmuller_set();
    REQUIRE(tau.size() == 16);
    CHECK(tau[0].is_zero());
    CHECK(tau[1] == ctx->one());
    std::set<std::uint64_t> reductions;
    for (const auto& t : tau) reductions.insert(ctx->residue_field().encode(t.reduce()));
    CHECK(reductions.size() == 16);  // tau is a transversal of the residue field
    // closure under multiplication
    for (std::size_t i = 1; i < tau.size(); ++i)
        for (std::size_t j = 1; j < tau.size(); ++j) {
            GRElement prod = tau[i] * tau[j];
            CHECK(prod == tau[ctx->tau_index(prod.reduce())]);
        }
}

TEST_CASE("differences of distinct Teichmuller members are units") {
    auto ctx = ring_4_16();
    const auto& tau = ctx->teichmuller_set();
    for (std::size_t i = 0; i < tau.size(); ++i)
        for (std::size_t j = 0; j < tau.size(); ++j)
            if (i != j) CHECK((tau[i] - tau[j]).is_unit());
}

TEST_CASE("p-adic digits round-trip exhaustively on GR(4,16)") {
    auto ctx = ring_4_16();
    const auto& tau = ctx->teichmuller_set();
    for (std::uint64_t i = 0; i < ctx->element_count(); ++i) {
        GRElement a = ctx->element_at(i);
        PAdicDigits d = ctx->padic_decompose(a);
        REQUIRE(d.digits.size() == ctx->s());
        for (const auto& digit : d.digits) {
            bool in_tau = false;
            for (const auto& t : tau) in_tau = in_tau || digit == t;
            CHECK(in_tau);
        }
        CHECK(ctx->padic_recompose(d) == a);
    }
}

TEST_CASE("digit decomposition in Z9 matches the brute-force table") {
    // GR(9, 9): tau = {0, 1, 8}, so 5 = 8 + 3*8
    auto ctx = GRContext::make(3, 2, ZPoly(9, {1, 1}));
    CHECK(ctx->xi() == ctx->constant(8));
    PAdicDigits d = ctx->padic_decompose(ctx->constant(5));
    CHECK(d.digits[0] == ctx->constant(8));
    CHECK(d.digits[1] == ctx->constant(8));
    CHECK(ctx->constant(2).order() == 6);
}

TEST_CASE("Frobenius is a ring automorphism of order m") {
    std::mt19937_64 rng(33);
    for (auto ctx : {ring_4_256(), ring_9_81()}) {
        for (int trial = 0; trial < 200; ++trial) {
            GRElement a = random_element(ctx, rng), b = random_element(ctx, rng);
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
            GRElement t = a;
            for (std::uint64_t i = 0; i < ctx->m(); ++i) t = t.frobenius();
            CHECK(t == a);
        }
        for (std::uint64_t c = 0; c < ctx->char_mod(); ++c)
            CHECK(ctx->constant(c).frobenius() == ctx->constant(c));
        CHECK(ctx->xi().frobenius() == ctx->xi().pow(ctx->p()));
    }
}

TEST_CASE("Frobenius is exhaustively an automorphism on GR(4,16)") {
    auto ctx = ring_4_16();
    std::set<std::vector<std::uint64_t>> images;
    for (std::uint64_t i = 0; i < ctx->element_count(); ++i) {
        GRElement a = ctx->element_at(i);
        images.insert(a.frobenius().coeffs());
        for (std::uint64_t j = 0; j < ctx->element_count(); ++j) {
            GRElement b = ctx->element_at(j);
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        }
    }
    CHECK(images.size() == ctx->element_count());
}

TEST_CASE("xi exists for a non-primitive basic irreducible modulus") {
    // x^4+x^3+x^2+x+1 lifts to a basic irreducible that is not basic primitive
    auto ctx = GRContext::make(2, 2, ZPoly(4, {1, 1, 1, 1, 1}));
    CHECK_FALSE(ctx->is_basic_primitive());
    CHECK(ctx->xi().order() == 15);
    CHECK(ctx->gen().order() != 15);
}

TEST_CASE("element order divides the unit group exponent") {
    auto ctx = ring_9_81();
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        GRElement u = random_unit(ctx, rng);
        CHECK(u.pow(u.order()) == ctx->one());
    }
}

TEST_CASE("cross-ring operations are rejected") {
    auto a = ring_4_16()->one();
    auto b = ring_4_256()->one();
    CHECK_THROWS_AS(a + b, ContextMismatchError);
    CHECK_THROWS_AS(a * b, ContextMismatchError);
    CHECK(a != b);
}

TEST_CASE("structurally equal rings interoperate") {
    auto c1 = GRContext::make(2, 2, ZPoly(4, {1, 1, 0, 0, 1}));
    auto c2 = GRContext::make(2, 2, ZPoly(4, {1, 1, 0, 0, 1}));
    CHECK(c1->same_ring(*c2));
    CHECK(c1->one() == c2->one());
    CHECK((c1->xi() + c2->xi()) == c1->xi() + c1->xi());
}

TEST_CASE("teichmuller exponent inverts xi powers") {
    auto ctx = ring_9_729();
    for (std::int64_t e = 0; e < 26; ++e)
        CHECK(ctx->teichmuller_exponent(ctx->xi_pow(e)) == e);
    CHECK_THROWS_AS(ctx->teichmuller_exponent(ctx->constant(3)), NotAUnitError);
}
