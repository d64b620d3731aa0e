// Acceptance suite: one criterion per section, each printed as a single
// pass/fail line with its runtime. Returns nonzero if any criterion fails.
//
// Usage: acceptance <path-to-cli-binary>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sri/checks.hpp"
#include "sri/decomposition.hpp"
#include "sri/gallery.hpp"
#include "sri/hom.hpp"
#include "sri/ideal.hpp"
#include "sri/localization.hpp"
#include "sri/semimodule.hpp"
#include "sri/spectrum.hpp"

#include "oracles.hpp"

using namespace sri;

namespace {

std::string g_cli_path;

struct CriterionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CriterionFailure(what);
}

Elem at(const SemiringPtr& S, const char* name) {
    auto idx = S->element_index(name);
    require(idx.has_value(), std::string("missing element ") + name);
    return *idx;
}

long run_props_over_gallery(const std::vector<std::string>& ids) {
    long instances = 0;
    for (const auto& S : gallery()) {
        std::vector<std::string> applicable;
        for (const auto& id : ids)
            if (proposition_applies(id, *S)) applicable.push_back(id);
        if (applicable.empty()) continue;
        CheckReport report = run_checks(S, applicable);
        for (const auto& p : report.propositions) {
            instances += p.instances;
            for (const auto& f : p.failures)
                throw CriterionFailure(report.semiring + "/" + p.id + ": " + f);
        }
    }
    return instances;
}

/* criterion 1 ------------------------------------------------------- */

void corrupted_variant(const char* base, Law broken,
                       const std::function<void(TableData&)>& patch) {
    TableData d = gallery_find(base)->table_data();
    patch(d);
    auto violations = check_axioms(d);
    require(!violations.empty(),
            std::string(base) + " corruption was not detected");
    bool law_seen = false;
    for (const auto& v : violations) {
        require(violation_holds(d, v),
                std::string("reported witness does not violate ") +
                    law_name(v.law));
        if (v.law == broken) law_seen = true;
    }
    require(law_seen, std::string("expected a violation of ") +
                          law_name(broken) + " in corrupted " + base);
    try {
        (void)Semiring::create(d, 0);
        require(false, "corrupted tables were accepted");
    } catch (const Error& e) {
        require(e.kind() == ErrorKind::axiom_violation,
                "wrong rejection category");
    }
}

void criterion_axiom_validation() {
    const auto& g = gallery();
    require(g.size() >= 15, "gallery has fewer than 15 members");
    for (const auto& S : g)
        require(check_axioms(S->table_data()).empty(),
                S->name() + " fails revalidation");

    corrupted_variant("Z4", Law::add_assoc,
                      [](TableData& d) { d.add[1][1] = 3; });
    corrupted_variant("L3", Law::add_comm, [](TableData& d) {
        // break s+1 against 1+s (canonical indices: 1 is "1", 2 is "s")
        d.add[2][1] = 2;
    });
    corrupted_variant("B", Law::add_identity, [](TableData& d) {
        d.add[0][1] = 0;
        d.add[1][0] = 0;
    });
    corrupted_variant("Z4", Law::mul_assoc,
                      [](TableData& d) { d.mul[2][2] = 1; });
    corrupted_variant("N2", Law::distributivity,
                      [](TableData& d) { d.mul[2][2] = 1; });
    corrupted_variant("B", Law::absorption, [](TableData& d) {
        d.mul[0][1] = 1;
        d.mul[1][0] = 1;
    });
}

/* criterion 2 ------------------------------------------------------- */

void criterion_lattice_oracle() {
    int compared = 0;
    for (const auto& S : gallery()) {
        if (S->size() > 5) continue;
        require(S->ideals().masks() == oracle::all_ideals_subset_scan(*S),
                "ideal enumeration disagrees with the subset scan on " +
                    S->name());
        ++compared;
    }
    require(compared >= 8, "too few small semirings compared");
}

/* criteria 3..9 ------------------------------------------------------ */

void criterion_ideal_calculus() {
    long instances = run_props_over_gallery({"ideal-arithmetic",
                                             "ideal-lattice", "colon-laws",
                                             "can2", "radical-laws"});
    require(instances >= 10000,
            "only " + std::to_string(instances) + " instances checked");
}

void criterion_krull() {
    run_props_over_gallery({"krullintersectionprimes", "maxisprime1"});
    // Independent spot check of the radical route against the subset-scan
    // prime oracle on the small members.
    for (const auto& S : gallery()) {
        if (S->size() > 5) continue;
        for (Mask I : S->ideals().masks())
            require(radical_mask(*S, I) == oracle::radical_via_primes(*S, I),
                    "radical differs from the oracle on " + S->name());
    }
}

void criterion_structure() {
    run_props_over_gallery(
        {"units3", "localsemiring1", "comaximal", "zariskitopology",
         "maxisprime2", "propersubsetmaximal", "prime-mcset",
         "primecontainingideals", "artinianisemilocal"});
}

void criterion_hom_calculus() {
    run_props_over_gallery(
        {"hom-contraction", "hom-extension", "hom-ec-ce", "kernel-example"});
    // The bundled collapse map reproduces kernel (0) without injectivity.
    auto L3 = gallery_find("L3");
    auto B = gallery_find("B");
    std::vector<Elem> map(3);
    map[at(L3, "0")] = 0;
    map[at(L3, "s")] = 1;
    map[at(L3, "1")] = 1;
    Hom gamma = Hom::create(L3, B, std::move(map));
    require(kernel(gamma).is_zero(), "collapse kernel is not (0)");
    require(!gamma.injective(), "collapse map is injective");
}

void criterion_localization() {
    run_props_over_gallery({"fraction-equivalence", "localization-ideals",
                            "extendedideal", "primesoflocalization",
                            "primesoflocalizationatP", "localize-at-prime",
                            "gamma-kernel"});
}

void criterion_semimodules() {
    run_props_over_gallery(
        {"semimodule-localization", "local-global-zero", "annihilator-ideal"});
}

void criterion_decomposition() {
    run_props_over_gallery(
        {"irreducibleideals", "irreducible-intersection",
         "irreducible-decomposition", "subirreprimary",
         "primarydecomposition", "minimal-decomposition", "minimal-primes"});
    // The worked instance: the zero ideal of B x B splits into exactly the
    // two coordinate primes.
    auto BxB = gallery_find("BxB");
    auto D = minimize(primary_decomposition(zero_ideal(BxB)));
    require(D.components.size() == 2, "wrong component count on BxB");
    const Mask left = bit(at(BxB, "(0,0)")) | bit(at(BxB, "(0,1)"));
    const Mask right = bit(at(BxB, "(0,0)")) | bit(at(BxB, "(1,0)"));
    require(D.components[0].bits() == left && D.components[1].bits() == right,
            "components differ from the two coordinate primes");
    for (const Ideal& Q : D.components)
        require(is_prime(Q), "component is not prime");
    auto mp = minimal_primes(zero_ideal(BxB));
    require(mp.size() == 2, "wrong minimal prime count on BxB");
}

/* criterion 10 ------------------------------------------------------- */

void criterion_end_to_end() {
    require(!g_cli_path.empty(), "CLI path not supplied");
    const std::string out_path = "/tmp/semiring_ideals_acceptance_check.json";
    const std::string cmd =
        g_cli_path + " check gallery:all --json > " + out_path;
    const auto start = std::chrono::steady_clock::now();
    const int status = std::system(cmd.c_str());
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    require(status == 0, "check gallery:all exited nonzero");
    require(elapsed < 120.0, "check gallery:all took " +
                                 std::to_string(elapsed) + "s");

    std::ifstream in(out_path);
    require(static_cast<bool>(in), "missing check output");
    nlohmann::json j = nlohmann::json::parse(in);
    std::set<std::string> seen_with_instances;
    for (const auto& report : j["reports"])
        for (const auto& p : report["propositions"]) {
            require(p["failures"].empty(),
                    "failure reported in " + p["id"].get<std::string>());
            if (p["instances"].get<long>() > 0)
                seen_with_instances.insert(p["id"].get<std::string>());
        }
    for (const auto& id : proposition_ids())
        require(seen_with_instances.count(id) == 1,
                "proposition " + id + " reported no instances");
}

struct Criterion {
    int number;
    const char* label;
    double limit_seconds;
    void (*run)();
};

const Criterion criteria[] = {
    {1, "axiom-validation", 1.0, criterion_axiom_validation},
    {2, "ideal-lattice-oracle", 10.0, criterion_lattice_oracle},
    {3, "ideal-calculus", 30.0, criterion_ideal_calculus},
    {4, "krull-theorems", 5.0, criterion_krull},
    {5, "spectrum-structure", 5.0, criterion_structure},
    {6, "hom-calculus", 5.0, criterion_hom_calculus},
    {7, "localization", 60.0, criterion_localization},
    {8, "semimodules", 10.0, criterion_semimodules},
    {9, "decomposition", 10.0, criterion_decomposition},
    {10, "end-to-end-check", 120.0, criterion_end_to_end},
};

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.run();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (failure.empty() && elapsed > c.limit_seconds)
            failure = "exceeded the " + std::to_string(c.limit_seconds) +
                      "s budget (" + std::to_string(elapsed) + "s)";
        if (failure.empty()) {
            std::printf("[PASS] %2d %-22s (%.2fs)\n", c.number, c.label,
                        elapsed);
        } else {
            std::printf("[FAIL] %2d %-22s (%.2fs): %s\n", c.number, c.label,
                        elapsed, failure.c_str());
            ++failures;
        }
    }
    if (failures == 0)
        std::printf("acceptance: all %zu criteria passed\n",
                    std::size(criteria));
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
