#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sri/gallery.hpp"
#include "sri/hom.hpp"
#include "sri/ideal.hpp"
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

Hom gamma_l3_to_b() {
    auto L3 = gallery_find("L3");
    auto B = gallery_find("B");
    std::vector<Elem> map(3);
    map[at(L3, "0")] = at(B, "0");
    map[at(L3, "s")] = at(B, "1");
    map[at(L3, "1")] = at(B, "1");
    return Hom::create(L3, B, std::move(map));
}

Hom projection_bxb(int component) {
    auto BxB = gallery_find("BxB");
    auto B = gallery_find("B");
    std::vector<Elem> map(4);
    map[at(BxB, "(0,0)")] = 0;
    map[at(BxB, "(1,1)")] = 1;
    map[at(BxB, "(0,1)")] = component == 0 ? 0 : 1;
    map[at(BxB, "(1,0)")] = component == 0 ? 1 : 0;
    return Hom::create(BxB, B, std::move(map));
}

} // namespace

TEST_CASE("identity maps are homomorphisms") {
    for (const auto& S : gallery()) {
        Hom id = identity_hom(S);
        CHECK(id.injective());
        CHECK(kernel(id).is_zero());
    }
}

TEST_CASE("the chain-to-boolean collapse is a valid hom") {
    Hom gamma = gamma_l3_to_b();
    CHECK(kernel(gamma).is_zero());
    CHECK(!gamma.injective());
}

TEST_CASE("both zero-one-preserving maps from the chain are homs") {
    // s can go to either 0 or 1; exhaustive checking shows both maps
    // preserve every law, so the only invalid maps break 0 or 1.
    auto L3 = gallery_find("L3");
    auto B = gallery_find("B");
    auto homs = enumerate_homs(L3, B);
    CHECK(homs.size() == 2);
}

TEST_CASE("a genuinely invalid map is rejected with a located witness") {
    auto N2 = gallery_find("N2");
    auto B = gallery_find("B");
    std::vector<Elem> map(3);
    map[at(N2, "0")] = 0;
    map[at(N2, "1")] = 1;
    map[at(N2, "2")] = 0;
    auto violations = Hom::check(*N2, *B, map);
    REQUIRE(!violations.empty());
    // 1+1 = 2 |-> 0 while 1+1 in B is 1.
    CHECK(violations.front().law == "additive");
    CHECK(violations.front().witness == std::vector<Elem>{1, 1});
    CHECK_THROWS_AS((void)Hom::create(N2, B, map), Error);
}

TEST_CASE("kernel of the projections") {
    auto BxB = gallery_find("BxB");
    Hom p1 = projection_bxb(0);
    CHECK(kernel(p1).bits() == named_mask(BxB, {"(0,0)", "(0,1)"}));
}

TEST_CASE("contraction") {
    Hom gamma = gamma_l3_to_b();
    auto L3 = gamma.src();
    auto B = gamma.dst();
    CHECK(contract(gamma, zero_ideal(B)) == kernel(gamma));
    CHECK(contract(gamma, unit_ideal(B)).bits() == L3->all());
    Hom p1 = projection_bxb(0);
    CHECK(contract(p1, zero_ideal(p1.dst())).bits() ==
          named_mask(p1.src(), {"(0,0)", "(0,1)"}));
}

TEST_CASE("extension") {
    Hom gamma = gamma_l3_to_b();
    auto L3 = gamma.src();
    auto B = gamma.dst();
    CHECK(extend(gamma, zero_ideal(L3)).is_zero());
    const Ideal P(L3, named_mask(L3, {"0", "s"}));
    CHECK(extend(gamma, P).bits() == B->all());
    // That witnesses I^ec strictly above I, and a prime extending to a
    // non-prime (the unit ideal).
    CHECK(contract(gamma, extend(gamma, P)).bits() == L3->all());
    CHECK(is_prime(P));
    CHECK(!is_prime(extend(gamma, P)));

    Hom p2 = projection_bxb(1);
    const Ideal left(p2.src(), named_mask(p2.src(), {"(0,0)", "(0,1)"}));
    CHECK(extend(p2, left).bits() == p2.dst()->all());
}

TEST_CASE("contract and extend reject foreign ideals") {
    Hom gamma = gamma_l3_to_b();
    try {
        (void)contract(gamma, zero_ideal(gamma.src()));
        FAIL("expected ParentMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parent_mismatch);
    }
    try {
        (void)extend(gamma, zero_ideal(gamma.dst()));
        FAIL("expected ParentMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parent_mismatch);
    }
}

TEST_CASE("hom enumeration stays within checked maps") {
    auto B = gallery_find("B");
    auto L3 = gallery_find("L3");
    for (const Hom& f : enumerate_homs(B, L3))
        CHECK(Hom::check(*f.src(), *f.dst(), f.map()).empty());
    CHECK(enumerate_homs(B, L3).size() == 1); // only the inclusion
}
