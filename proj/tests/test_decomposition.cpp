#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sri/decomposition.hpp"
#include "sri/gallery.hpp"
#include "sri/spectrum.hpp"

using namespace sri;

namespace {

Elem at(const SemiringPtr& S, const char* name) {
    auto idx = S->element_index(name);
    REQUIRE(idx.has_value());
    return *idx;
}

Mask named_mask(const SemiringPtr& S, std::initializer_list<const char*> names) {
    Mask m = 0;
    for (const char* n : names) m |= bit(at(S, n));
    return m;
}

} // namespace

TEST_CASE("irreducible_separating") {
    auto L3 = gallery_find("L3");
    CHECK(irreducible_separating(zero_ideal(L3), at(L3, "1")).bits() ==
          named_mask(L3, {"0", "s"}));

    auto BxB = gallery_find("BxB");
    // Both coordinate ideals qualify; the canonical tie-break picks the one
    // with the smaller encoding.
    Ideal J = irreducible_separating(zero_ideal(BxB), at(BxB, "(1,1)"));
    CHECK(J.bits() == named_mask(BxB, {"(0,0)", "(0,1)"}));

    // Avoiding 1 lands on a maximal ideal.
    for (const auto& S : gallery()) {
        if (S->size() > 6) continue;
        Ideal M = irreducible_separating(zero_ideal(S), S->one());
        CHECK(is_maximal(M));
    }

    try {
        (void)irreducible_separating(unit_ideal(L3), at(L3, "s"));
        FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
    }
}

TEST_CASE("irreducible_decomposition") {
    auto L3 = gallery_find("L3");
    auto D = irreducible_decomposition(zero_ideal(L3));
    REQUIRE(D.components.size() == 1);
    CHECK(D.components[0].is_zero());

    auto BxB = gallery_find("BxB");
    auto DB = irreducible_decomposition(zero_ideal(BxB));
    REQUIRE(DB.components.size() == 2);
    CHECK(DB.components[0].bits() == named_mask(BxB, {"(0,0)", "(0,1)"}));
    CHECK(DB.components[1].bits() == named_mask(BxB, {"(0,0)", "(1,0)"}));

    // Irreducible inputs decompose as themselves.
    const Ideal left(BxB, named_mask(BxB, {"(0,0)", "(0,1)"}));
    auto DI = irreducible_decomposition(left);
    REQUIRE(DI.components.size() == 1);
    CHECK(DI.components[0] == left);

    try {
        (void)irreducible_decomposition(unit_ideal(L3));
        FAIL("expected ImproperIdeal");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::improper_ideal);
    }
}

TEST_CASE("primary_decomposition") {
    auto BxB = gallery_find("BxB");
    auto D = primary_decomposition(zero_ideal(BxB));
    CHECK(D.kind == DecompKind::primary);
    CHECK(!D.repaired);
    REQUIRE(D.components.size() == 2);
    for (const Ideal& Q : D.components) {
        CHECK(is_primary(Q));
        CHECK(is_prime(Q));
    }

    auto L3 = gallery_find("L3");
    auto DL = primary_decomposition(zero_ideal(L3));
    REQUIRE(DL.components.size() == 1);
    CHECK(DL.components[0].is_zero());
}

TEST_CASE("Z4 packs a non-prime primary component") {
    auto Z4 = gallery_find("Z4");
    auto D = primary_decomposition(zero_ideal(Z4));
    REQUIRE(D.components.size() == 1);
    CHECK(D.components[0].is_zero());
    CHECK(is_primary(D.components[0]));
    CHECK(!is_prime(D.components[0]));
    CHECK(radical(D.components[0]).bits() == mask_of({0, 2}));
}

TEST_CASE("subtractive gallery members decompose every proper ideal") {
    for (const auto& S : gallery()) {
        if (!S->ideals().all_subtractive()) continue;
        for (Mask I : S->ideals().masks()) {
            if (I == S->all()) continue;
            auto D = primary_decomposition(Ideal(S, I));
            CHECK(!D.repaired);
            Mask inter = S->all();
            for (const Ideal& Q : D.components) {
                CHECK(is_primary(Q));
                inter &= Q.bits();
            }
            CHECK(inter == I);
        }
    }
}

TEST_CASE("minimize") {
    auto BxB = gallery_find("BxB");
    const Ideal q1(BxB, named_mask(BxB, {"(0,0)", "(0,1)"}));
    const Ideal q2(BxB, named_mask(BxB, {"(0,0)", "(1,0)"}));

    SUBCASE("an already-minimal decomposition is unchanged") {
        auto D = minimize(primary_decomposition(zero_ideal(BxB)));
        REQUIRE(D.components.size() == 2);
        CHECK(D.minimal);
        CHECK(D.components[0] == q1);
        CHECK(D.components[1] == q2);
    }
    SUBCASE("duplicate components merge") {
        Decomposition D{zero_ideal(BxB), {q1, q2, q1}, DecompKind::primary,
                        false, false};
        auto M = minimize(D);
        REQUIRE(M.components.size() == 2);
    }
    SUBCASE("redundant components are dropped") {
        // In the four-chain, {0} alone already equals {0} ∩ {0,a}.
        auto L4 = gallery_find("L4");
        const Ideal z = zero_ideal(L4);
        const Ideal a(L4, named_mask(L4, {"0", "a"}));
        Decomposition D{z, {z, a}, DecompKind::primary, false, false};
        auto M = minimize(D);
        REQUIRE(M.components.size() == 1);
        CHECK(M.components[0].is_zero());
        CHECK(M.minimal);
    }
    SUBCASE("irreducible decompositions cannot be minimized") {
        try {
            (void)minimize(irreducible_decomposition(zero_ideal(BxB)));
            FAIL("expected PreconditionViolated");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::precondition);
        }
    }
}

TEST_CASE("minimal_primes") {
    auto BxB = gallery_find("BxB");
    auto mp = minimal_primes(zero_ideal(BxB));
    REQUIRE(mp.size() == 2);
    CHECK(mp[0].bits() == named_mask(BxB, {"(0,0)", "(0,1)"}));
    CHECK(mp[1].bits() == named_mask(BxB, {"(0,0)", "(1,0)"}));

    auto L3 = gallery_find("L3");
    auto mpz = minimal_primes(zero_ideal(L3));
    REQUIRE(mpz.size() == 1);
    CHECK(mpz[0].is_zero());

    // A prime ideal is its own minimal prime.
    for (const Ideal& P : spectrum_of(gallery_find("Z6")).primes) {
        auto m = minimal_primes(P);
        REQUIRE(m.size() == 1);
        CHECK(m[0] == P);
    }
}

TEST_CASE("Z6 zero splits into its two coordinate primes") {
    auto Z6 = gallery_find("Z6");
    auto D = minimize(primary_decomposition(zero_ideal(Z6)));
    REQUIRE(D.components.size() == 2);
    CHECK(D.components[0].bits() == named_mask(Z6, {"0", "3"}));
    CHECK(D.components[1].bits() == named_mask(Z6, {"0", "2", "4"}));
    auto mp = minimal_primes(zero_ideal(Z6));
    CHECK(mp.size() == 2);
}
