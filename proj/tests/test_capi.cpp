// Exercises the shared-library surface exactly as an external client would:
// through semiring_ideals.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"
#include "semiring_ideals.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    si_string_free(s);
    return out;
}

const char* kBooleanJson = R"({
  "name": "bool", "size": 2, "elements": ["0", "1"],
  "add": [[0,1],[1,1]], "mul": [[0,0],[0,1]], "zero": 0, "one": 1
})";

} // namespace

TEST_CASE("gallery access") {
    CHECK(si_gallery_count() >= 15);
    si_semiring* sr = nullptr;
    REQUIRE(si_gallery_get("L3", &sr) == SI_OK);
    CHECK(si_semiring_size(sr) == 3);
    CHECK(std::string(si_semiring_name(sr)) == "L3");
    int idx = -1;
    CHECK(si_semiring_element_index(sr, "s", &idx) == SI_OK);
    CHECK(std::string(si_semiring_element_name(sr, idx)) == "s");
    si_semiring_free(sr);

    CHECK(si_gallery_get("nope", &sr) == SI_ERR_PARSE);
    CHECK(std::strlen(si_last_error()) > 0);
}

TEST_CASE("json round trip through the C surface") {
    si_semiring* sr = nullptr;
    REQUIRE(si_semiring_from_json(kBooleanJson, 8, &sr) == SI_OK);
    char* out = nullptr;
    REQUIRE(si_semiring_to_json(sr, &out) == SI_OK);
    const std::string text = take(out);
    si_semiring* back = nullptr;
    REQUIRE(si_semiring_from_json(text.c_str(), 8, &back) == SI_OK);
    CHECK(si_semiring_size(back) == si_semiring_size(sr));
    int a1 = -1, a2 = -1;
    CHECK(si_semiring_add(sr, 1, 1, &a1) == SI_OK);
    CHECK(si_semiring_add(back, 1, 1, &a2) == SI_OK);
    CHECK(a1 == a2);
    si_semiring_free(sr);
    si_semiring_free(back);
}

TEST_CASE("validation reports") {
    char* report = nullptr;
    CHECK(si_validate_json(kBooleanJson, 8, &report) == SI_OK);
    auto j = nlohmann::json::parse(take(report));
    CHECK(j["valid"].get<bool>());

    const char* broken = R"({
      "size": 2, "add": [[0,1],[1,1]], "mul": [[0,1],[1,1]],
      "zero": 0, "one": 1
    })"; // 0*1 = 1 breaks absorption (and the identity laws)
    CHECK(si_validate_json(broken, 8, &report) == SI_ERR_AXIOM_VIOLATION);
    j = nlohmann::json::parse(take(report));
    CHECK(!j["valid"].get<bool>());
    CHECK(!j["violations"].empty());

    CHECK(si_validate_json("not json", 8, &report) == SI_ERR_PARSE);
}

TEST_CASE("ideal operations") {
    si_semiring* sr = nullptr;
    REQUIRE(si_gallery_get("BxB", &sr) == SI_OK);
    int gen = -1;
    REQUIRE(si_semiring_element_index(sr, "(1,0)", &gen) == SI_OK);
    si_ideal* I = nullptr;
    REQUIRE(si_ideal_generate(sr, &gen, 1, &I) == SI_OK);
    CHECK(si_ideal_member_count(I) == 2);
    CHECK(si_ideal_is_proper(I) == 1);

    int flag = -1;
    CHECK(si_ideal_is_prime(I, &flag) == SI_OK);
    CHECK(flag == 1);
    CHECK(si_ideal_is_maximal(I, &flag) == SI_OK);
    CHECK(flag == 1);
    CHECK(si_ideal_is_subtractive(I, &flag) == SI_OK);
    CHECK(flag == 1);

    si_ideal* zero = nullptr;
    REQUIRE(si_ideal_generate(sr, nullptr, 0, &zero) == SI_OK);
    CHECK(si_ideal_member_count(zero) == 1);
    CHECK(si_ideal_is_cancellation(zero, &flag) == SI_ERR_ZERO_IDEAL);

    si_ideal* rad = nullptr;
    REQUIRE(si_ideal_radical(zero, &rad) == SI_OK);
    CHECK(si_ideal_equal(rad, zero) == 1);

    si_ideal_free(rad);
    si_ideal_free(zero);
    si_ideal_free(I);
    si_semiring_free(sr);
}

TEST_CASE("ideal handles outlive the semiring handle") {
    si_semiring* sr = nullptr;
    REQUIRE(si_gallery_get("N2", &sr) == SI_OK);
    int gen = 2;
    si_ideal* I = nullptr;
    REQUIRE(si_ideal_generate(sr, &gen, 1, &I) == SI_OK);
    si_semiring_free(sr); // the ideal keeps the semiring alive internally
    CHECK(si_ideal_member_count(I) == 2);
    int flag = -1;
    CHECK(si_ideal_is_primary(I, &flag) == SI_OK);
    CHECK(flag == 1);
    si_ideal_free(I);
}

TEST_CASE("spectrum and decomposition through the C surface") {
    si_semiring* sr = nullptr;
    REQUIRE(si_gallery_get("BxB", &sr) == SI_OK);
    si_ideal_list* primes = nullptr;
    si_ideal_list* maximals = nullptr;
    REQUIRE(si_spectrum(sr, &primes, &maximals) == SI_OK);
    CHECK(si_ideal_list_count(primes) == 2);
    CHECK(si_ideal_list_count(maximals) == 2);
    si_ideal_list_free(primes);
    si_ideal_list_free(maximals);

    si_ideal* zero = nullptr;
    REQUIRE(si_ideal_generate(sr, nullptr, 0, &zero) == SI_OK);
    si_decomposition* d = nullptr;
    REQUIRE(si_decompose(zero, SI_DECOMP_PRIMARY, 1, &d) == SI_OK);
    CHECK(si_decomposition_count(d) == 2);
    CHECK(si_decomposition_is_minimal(d) == 1);
    si_decomposition_free(d);

    si_ideal_list* mp = nullptr;
    REQUIRE(si_minimal_primes(zero, &mp) == SI_OK);
    CHECK(si_ideal_list_count(mp) == 2);
    si_ideal_list_free(mp);
    si_ideal_free(zero);
    si_semiring_free(sr);
}

TEST_CASE("homs and localization through the C surface") {
    si_semiring* L3 = nullptr;
    si_semiring* B = nullptr;
    REQUIRE(si_gallery_get("L3", &L3) == SI_OK);
    REQUIRE(si_gallery_get("B", &B) == SI_OK);

    int s_idx = -1;
    REQUIRE(si_semiring_element_index(L3, "s", &s_idx) == SI_OK);
    std::vector<int> map(3, 1);
    map[0] = 0;
    si_hom* gamma = nullptr;
    REQUIRE(si_hom_create(L3, B, map.data(), &gamma) == SI_OK);
    CHECK(si_hom_is_injective(gamma) == 0);
    si_ideal* ker = nullptr;
    REQUIRE(si_hom_kernel(gamma, &ker) == SI_OK);
    CHECK(si_ideal_member_count(ker) == 1);
    si_ideal_free(ker);
    si_hom_free(gamma);

    // An invalid map comes back as a hom violation.
    std::vector<int> bad = {0, 0, 1}; // sends 1 to 0
    si_hom* nothom = nullptr;
    CHECK(si_hom_create(L3, B, bad.data(), &nothom) == SI_ERR_HOM_VIOLATION);

    std::vector<int> mcset = {s_idx, 1};
    si_localization* loc = nullptr;
    REQUIRE(si_localize(L3, mcset.data(), mcset.size(), &loc) == SI_OK);
    si_semiring* quot = nullptr;
    REQUIRE(si_localization_quotient(loc, &quot) == SI_OK);
    CHECK(si_semiring_size(quot) == 2);
    si_ideal_list* base = nullptr;
    si_ideal_list* lifted = nullptr;
    REQUIRE(si_prime_correspondence(loc, &base, &lifted) == SI_OK);
    CHECK(si_ideal_list_count(base) == 1);
    CHECK(si_ideal_list_count(lifted) == 1);
    si_ideal_list_free(base);
    si_ideal_list_free(lifted);
    si_semiring_free(quot);
    si_localization_free(loc);
    si_semiring_free(B);
    si_semiring_free(L3);
}

TEST_CASE("module loading and checking") {
    const std::string path = std::string(DATA_DIR) + "/boolean_regular.module.json";
    si_module* module = nullptr;
    REQUIRE(si_module_from_file(path.c_str(), 8, &module) == SI_OK);
    CHECK(si_module_size(module) == 2);
    si_ideal* ann = nullptr;
    REQUIRE(si_module_annihilator(module, 1, &ann) == SI_OK);
    CHECK(si_ideal_member_count(ann) == 1);
    si_ideal_free(ann);
    char* report = nullptr;
    REQUIRE(si_module_check(module, &report) == SI_OK);
    auto j = nlohmann::json::parse(take(report));
    CHECK(j["valid"].get<bool>());
    CHECK(!j["local_global_zero"]["module_zero"].get<bool>());
    si_module_free(module);
}

TEST_CASE("check runner is seed independent") {
    si_semiring* sr = nullptr;
    REQUIRE(si_gallery_get("N2", &sr) == SI_OK);
    char* r1 = nullptr;
    char* r2 = nullptr;
    CHECK(si_run_checks(sr, "all", 1, &r1) == SI_OK);
    CHECK(si_run_checks(sr, "all", 424242, &r2) == SI_OK);
    auto j1 = nlohmann::json::parse(take(r1));
    auto j2 = nlohmann::json::parse(take(r2));
    j1.erase("elapsed_ms");
    j2.erase("elapsed_ms");
    CHECK(j1 == j2);
    si_semiring_free(sr);
}

TEST_CASE("check runner selection and errors") {
    si_semiring* sr = nullptr;
    REQUIRE(si_gallery_get("B", &sr) == SI_OK);
    char* report = nullptr;
    CHECK(si_run_checks(sr, "krullintersectionprimes,units3", 0, &report) ==
          SI_OK);
    auto j = nlohmann::json::parse(take(report));
    CHECK(j["propositions"].size() == 2);
    for (const auto& p : j["propositions"]) {
        CHECK(p["instances"].get<long>() > 0);
        CHECK(p["failures"].empty());
    }
    CHECK(si_run_checks(sr, "no-such-prop", 0, &report) ==
          SI_ERR_UNKNOWN_PROPOSITION);
    si_semiring_free(sr);
}

TEST_CASE("proposition catalog") {
    CHECK(si_proposition_count() >= 40);
    for (size_t i = 0; i < si_proposition_count(); ++i) {
        const char* id = si_proposition_id(i);
        CHECK(std::strlen(id) > 0);
        CHECK(std::strlen(si_proposition_summary(id)) > 0);
    }
}
