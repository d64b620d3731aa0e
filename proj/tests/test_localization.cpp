#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sri/gallery.hpp"
#include "sri/localization.hpp"
#include "sri/spectrum.hpp"

#include "oracles.hpp"

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

TEST_CASE("localizing at {1} changes nothing") {
    for (const auto& S : gallery()) {
        if (S->size() > 6) continue;
        Localization L = localize(S, bit(S->one()));
        CHECK(same_tables(*L.quotient(), *S));
        CHECK(L.gamma().injective());
        for (Elem a = 0; a < S->size(); ++a) CHECK(L.gamma()(a) == a);
    }
}

TEST_CASE("chain localized away from its maximal ideal is boolean") {
    auto L3 = gallery_find("L3");
    Localization L = localize(L3, named_mask(L3, {"s", "1"}));
    CHECK(L.quotient()->size() == 2);
    CHECK(same_tables(*L.quotient(), *gallery_find("B")));
    // s/1 collapses onto 1/1 (take t = s).
    CHECK(L.class_of(at(L3, "s"), at(L3, "1")) ==
          L.class_of(at(L3, "1"), at(L3, "1")));
    CHECK(L.class_of(at(L3, "0"), at(L3, "s")) == L.quotient()->zero());
}

TEST_CASE("class structure matches the naive pairwise oracle") {
    auto check_against_oracle = [](const SemiringPtr& S, Mask W) {
        Localization L = localize(S, W);
        auto u_elems = mask_elems(W);
        auto cls = oracle::fraction_classes(*S, u_elems);
        const std::size_t un = u_elems.size();
        std::set<int> oracle_classes(cls.begin(), cls.end());
        CHECK(static_cast<int>(oracle_classes.size()) == L.quotient()->size());
        for (std::size_t p = 0; p < cls.size(); ++p)
            for (std::size_t q = 0; q < cls.size(); ++q) {
                const bool same_oracle = cls[p] == cls[q];
                const bool same_lib =
                    L.class_of(static_cast<Elem>(p / un), u_elems[p % un]) ==
                    L.class_of(static_cast<Elem>(q / un), u_elems[q % un]);
                CHECK(same_oracle == same_lib);
            }
    };
    auto L3 = gallery_find("L3");
    check_against_oracle(L3, named_mask(L3, {"s", "1"}));
    auto N2 = gallery_find("N2");
    check_against_oracle(N2, named_mask(N2, {"1", "2"}));
    auto Z6 = gallery_find("Z6");
    check_against_oracle(Z6, named_mask(Z6, {"1", "3"}));
}

TEST_CASE("invalid MC-sets are rejected") {
    auto N2 = gallery_find("N2");
    try {
        (void)localize(N2, bit(at(N2, "2"))); // missing 1
        FAIL("expected InvalidMCSet");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_mc_set);
    }
    try {
        (void)localize(N2, named_mask(N2, {"0", "1"})); // contains 0
        FAIL("expected InvalidMCSet");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_mc_set);
    }
}

TEST_CASE("localize_ideal") {
    auto L3 = gallery_find("L3");
    Localization L = localize(L3, named_mask(L3, {"s", "1"}));
    CHECK(localize_ideal(L, zero_ideal(L3)).is_zero());
    CHECK(localize_ideal(L, Ideal(L3, named_mask(L3, {"0", "s"}))).bits() ==
          L.quotient()->all()); // s becomes a unit
    CHECK(localize_ideal(L, unit_ideal(L3)).bits() == L.quotient()->all());
}

TEST_CASE("prime correspondence") {
    SUBCASE("U = {1} gives the identity correspondence") {
        for (const auto& S : gallery()) {
            if (S->size() > 6) continue;
            Localization L = localize(S, bit(S->one()));
            auto pairs = prime_correspondence(L);
            CHECK(pairs.size() == spectrum_of(S).primes.size());
            for (const auto& p : pairs)
                CHECK(p.base_prime.bits() == p.quotient_prime.bits());
        }
    }
    SUBCASE("chain away from the maximal ideal") {
        auto L3 = gallery_find("L3");
        Localization L = localize(L3, named_mask(L3, {"s", "1"}));
        auto pairs = prime_correspondence(L);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].base_prime.is_zero());
        CHECK(pairs[0].quotient_prime.is_zero());
    }
    SUBCASE("product with one coordinate inverted") {
        auto BxB = gallery_find("BxB");
        Localization L = localize(BxB, named_mask(BxB, {"(1,1)", "(1,0)"}));
        CHECK(L.quotient()->size() == 2);
        auto pairs = prime_correspondence(L);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].base_prime.bits() ==
              named_mask(BxB, {"(0,0)", "(0,1)"}));
    }
}

TEST_CASE("localize_at_prime") {
    auto L3 = gallery_find("L3");
    SUBCASE("at the maximal ideal: everything survives") {
        Localization L =
            localize_at_prime(L3, Ideal(L3, named_mask(L3, {"0", "s"})));
        CHECK(same_tables(*L.quotient(), *L3));
        auto m = is_local(L.quotient());
        REQUIRE(m.has_value());
        CHECK(m->bits() == named_mask(L3, {"0", "s"}));
    }
    SUBCASE("at the zero prime: the residue is boolean") {
        Localization L = localize_at_prime(L3, zero_ideal(L3));
        CHECK(same_tables(*L.quotient(), *gallery_find("B")));
        auto m = is_local(L.quotient());
        REQUIRE(m.has_value());
        CHECK(m->is_zero());
    }
    SUBCASE("product at a coordinate prime") {
        auto BxB = gallery_find("BxB");
        Localization L = localize_at_prime(
            BxB, Ideal(BxB, named_mask(BxB, {"(0,0)", "(0,1)"})));
        CHECK(same_tables(*L.quotient(), *gallery_find("B")));
    }
    SUBCASE("non-primes are rejected") {
        auto BxB = gallery_find("BxB");
        try {
            (void)localize_at_prime(BxB, zero_ideal(BxB));
            FAIL("expected NotPrime");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::not_prime);
        }
    }
}

TEST_CASE("every ideal of a localization is extended") {
    auto Z6 = gallery_find("Z6");
    Localization L = localize(Z6, named_mask(Z6, {"1", "3", "5"}));
    for (const Ideal& J : L.quotient()->ideals().all_ideals())
        CHECK(extend(L.gamma(), contract(L.gamma(), J)) == J);
}

TEST_CASE("quotient element names are least-representative fractions") {
    auto L3 = gallery_find("L3");
    Localization L = localize(L3, named_mask(L3, {"s", "1"}));
    CHECK(L.quotient()->element_name(0) == "0/1");
    CHECK(L.quotient()->element_name(1) == "1/1");
    auto rep = L.least_representative(0);
    CHECK(rep.first == L3->zero());
    CHECK(rep.second == L3->one());
}
