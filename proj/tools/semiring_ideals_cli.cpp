// Command-line front end for the semiring ideal library. Everything goes
// through the public C API in semiring_ideals.h; this file only parses
// arguments, resolves element names, and formats output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semiring_ideals.h"

namespace {

using nlohmann::ordered_json;

// Exit codes: 0 success, 1 failed verification, 2 bad input or usage.
constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_input_error = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

int exit_code_for(si_result status) {
    switch (status) {
        case SI_ERR_PARSE:
        case SI_ERR_MALFORMED_TABLE:
        case SI_ERR_SIZE_CAP_EXCEEDED:
        case SI_ERR_IO:
        case SI_ERR_INVALID_ARGUMENT:
        case SI_ERR_UNKNOWN_PROPOSITION:
        case SI_ERR_PRECONDITION:
            return exit_input_error;
        default:
            return exit_check_failed;
    }
}

void require_ok(si_result status) {
    if (status == SI_OK) return;
    die(exit_code_for(status), std::string(si_result_name(status)) + ": " +
                                   si_last_error());
}

struct SemiringFree {
    void operator()(si_semiring* p) const { si_semiring_free(p); }
};
struct IdealFree {
    void operator()(si_ideal* p) const { si_ideal_free(p); }
};
struct IdealListFree {
    void operator()(si_ideal_list* p) const { si_ideal_list_free(p); }
};
struct HomFree {
    void operator()(si_hom* p) const { si_hom_free(p); }
};
struct LocalizationFree {
    void operator()(si_localization* p) const { si_localization_free(p); }
};
struct ModuleFree {
    void operator()(si_module* p) const { si_module_free(p); }
};
struct DecompositionFree {
    void operator()(si_decomposition* p) const { si_decomposition_free(p); }
};

using SemiringH = std::unique_ptr<si_semiring, SemiringFree>;
using IdealH = std::unique_ptr<si_ideal, IdealFree>;
using IdealListH = std::unique_ptr<si_ideal_list, IdealListFree>;
using HomH = std::unique_ptr<si_hom, HomFree>;
using LocalizationH = std::unique_ptr<si_localization, LocalizationFree>;
using ModuleH = std::unique_ptr<si_module, ModuleFree>;
using DecompositionH = std::unique_ptr<si_decomposition, DecompositionFree>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    si_string_free(s);
    return out;
}

struct Options {
    bool json = false;
    int size_cap = 8;
    unsigned long long seed = 0;
};

SemiringH load_target(const std::string& target, const Options& opt) {
    si_semiring* raw = nullptr;
    constexpr std::string_view prefix = "gallery:";
    if (target.rfind(prefix, 0) == 0)
        require_ok(si_gallery_get(target.substr(prefix.size()).c_str(), &raw));
    else
        require_ok(si_semiring_from_file(target.c_str(), opt.size_cap, &raw));
    return SemiringH(raw);
}

// Generator lists are comma separated element names or indices; commas
// inside parentheses belong to product element names like "(1,0)".
std::vector<std::string> split_generators(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
            continue;
        }
        cur += ch;
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int resolve_element(const si_semiring* sr, const std::string& token) {
    int idx = -1;
    if (si_semiring_element_index(sr, token.c_str(), &idx) == SI_OK) return idx;
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used == token.size() && value >= 0 &&
            value < static_cast<int>(si_semiring_size(sr)))
            return value;
    } catch (const std::exception&) {
    }
    die(exit_input_error, "unknown element \"" + token + "\" in semiring " +
                              si_semiring_name(sr));
}

std::vector<int> resolve_elements(const si_semiring* sr,
                                  const std::string& list) {
    std::vector<int> out;
    for (const auto& token : split_generators(list))
        out.push_back(resolve_element(sr, token));
    return out;
}

IdealH ideal_from_option(const si_semiring* sr, const std::string& gens) {
    auto elems = resolve_elements(sr, gens);
    si_ideal* raw = nullptr;
    require_ok(si_ideal_generate(sr, elems.data(), elems.size(), &raw));
    return IdealH(raw);
}

std::vector<int> ideal_members(const si_ideal* ideal) {
    std::vector<int> buf(si_ideal_member_count(ideal));
    size_t count = 0;
    if (!buf.empty()) require_ok(si_ideal_members(ideal, buf.data(), &count));
    buf.resize(count);
    return buf;
}

std::string ideal_str(const si_semiring* sr, const si_ideal* ideal) {
    std::string out = "{";
    bool first = true;
    for (int e : ideal_members(ideal)) {
        if (!first) out += ",";
        out += si_semiring_element_name(sr, e);
        first = false;
    }
    return out + "}";
}

ordered_json ideal_json(const si_semiring* sr, const si_ideal* ideal) {
    ordered_json names = ordered_json::array();
    for (int e : ideal_members(ideal))
        names.push_back(si_semiring_element_name(sr, e));
    return names;
}

// Maps look like "0:0,s:1,1:1": source element to target element.
HomH hom_from_option(const si_semiring* src, const si_semiring* dst,
                     const std::string& text) {
    const size_t n = si_semiring_size(src);
    std::vector<int> map(n, -1);
    for (const auto& entry : split_generators(text)) {
        const std::size_t colon = entry.rfind(':');
        if (colon == std::string::npos)
            die(exit_input_error,
                "map entries must look like <src>:<dst>, got \"" + entry + "\"");
        const int from = resolve_element(src, entry.substr(0, colon));
        const int to = resolve_element(dst, entry.substr(colon + 1));
        map[static_cast<size_t>(from)] = to;
    }
    for (size_t e = 0; e < n; ++e)
        if (map[e] < 0)
            die(exit_input_error,
                std::string("map does not cover element \"") +
                    si_semiring_element_name(src, static_cast<int>(e)) + "\"");
    si_hom* raw = nullptr;
    require_ok(si_hom_create(src, dst, map.data(), &raw));
    return HomH(raw);
}

void print_ideal_list(const si_semiring* sr, const si_ideal_list* list,
                      const Options& opt, const std::string& key) {
    if (opt.json) {
        ordered_json j;
        j["semiring"] = si_semiring_name(sr);
        j[key] = ordered_json::array();
        for (size_t i = 0; i < si_ideal_list_count(list); ++i) {
            si_ideal* raw = nullptr;
            require_ok(si_ideal_list_get(list, i, &raw));
            IdealH ideal(raw);
            j[key].push_back(ideal_json(sr, ideal.get()));
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (size_t i = 0; i < si_ideal_list_count(list); ++i) {
        si_ideal* raw = nullptr;
        require_ok(si_ideal_list_get(list, i, &raw));
        IdealH ideal(raw);
        std::cout << ideal_str(sr, ideal.get()) << "\n";
    }
}

std::string read_file_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) die(exit_input_error, "cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/* ------------------------------------------------------------------ */

int cmd_validate(const std::string& target, const Options& opt) {
    if (target.rfind("gallery:", 0) == 0) {
        SemiringH sr = load_target(target, opt);
        if (opt.json) {
            ordered_json j{{"valid", true},
                           {"violations", ordered_json::array()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "OK: " << si_semiring_name(sr.get()) << " (size "
                      << si_semiring_size(sr.get()) << ")\n";
        }
        return exit_ok;
    }
    const std::string text = read_file_text(target);
    char* report_raw = nullptr;
    si_result status = si_validate_json(text.c_str(), opt.size_cap, &report_raw);
    const std::string report = take_string(report_raw);
    // Parse failures and cap violations are input errors; only genuine law
    // violations count as a failed validation.
    if (status != SI_OK && (report.empty() || exit_code_for(status) == exit_input_error))
        require_ok(status);
    if (opt.json) {
        std::cout << report << "\n";
    } else if (status == SI_OK) {
        SemiringH sr = load_target(target, opt);
        std::cout << "OK: " << si_semiring_name(sr.get()) << " (size "
                  << si_semiring_size(sr.get()) << ")\n";
    } else {
        std::cout << "INVALID (" << si_result_name(status) << ")\n";
        ordered_json j = ordered_json::parse(report);
        for (const auto& v : j["violations"]) {
            std::cout << "  " << v["law"].get<std::string>() << " at (";
            bool first = true;
            for (const auto& w : v["witness"]) {
                if (!first) std::cout << ",";
                std::cout << w.get<int>();
                first = false;
            }
            std::cout << "): " << v["detail"].get<std::string>() << "\n";
        }
    }
    return status == SI_OK ? exit_ok : exit_check_failed;
}

int cmd_gallery(const std::string& name, const Options& opt) {
    if (!name.empty()) {
        si_semiring* raw = nullptr;
        require_ok(si_gallery_get(name.c_str(), &raw));
        SemiringH sr(raw);
        char* json_raw = nullptr;
        require_ok(si_semiring_to_json(sr.get(), &json_raw));
        std::cout << take_string(json_raw) << "\n";
        return exit_ok;
    }
    if (opt.json) {
        ordered_json j = ordered_json::array();
        for (size_t i = 0; i < si_gallery_count(); ++i) {
            si_semiring* raw = nullptr;
            require_ok(si_gallery_get(si_gallery_name(i), &raw));
            SemiringH sr(raw);
            j.push_back({{"name", si_gallery_name(i)},
                         {"size", si_semiring_size(sr.get())}});
        }
        std::cout << j.dump(2) << "\n";
        return exit_ok;
    }
    for (size_t i = 0; i < si_gallery_count(); ++i) {
        si_semiring* raw = nullptr;
        require_ok(si_gallery_get(si_gallery_name(i), &raw));
        SemiringH sr(raw);
        std::printf("%-8s size %zu\n", si_gallery_name(i),
                    si_semiring_size(sr.get()));
    }
    return exit_ok;
}

int cmd_ideals(const std::string& target, const Options& opt) {
    SemiringH sr = load_target(target, opt);
    si_ideal_list* raw = nullptr;
    require_ok(si_enumerate_ideals(sr.get(), &raw));
    IdealListH list(raw);
    print_ideal_list(sr.get(), list.get(), opt, "ideals");
    return exit_ok;
}

int cmd_spectrum(const std::string& target, bool maximals_only,
                 const Options& opt) {
    SemiringH sr = load_target(target, opt);
    si_ideal_list* primes = nullptr;
    si_ideal_list* maximals = nullptr;
    require_ok(si_spectrum(sr.get(), &primes, &maximals));
    IdealListH p(primes), m(maximals);
    print_ideal_list(sr.get(), maximals_only ? m.get() : p.get(), opt,
                     maximals_only ? "maximals" : "primes");
    return exit_ok;
}

int cmd_classify(const std::string& target, const std::string& gens,
                 const Options& opt) {
    SemiringH sr = load_target(target, opt);
    IdealH ideal = ideal_from_option(sr.get(), gens);
    int prime = 0, maximal = 0, primary = 0, irreducible = 0, subtractive = 0;
    require_ok(si_ideal_is_prime(ideal.get(), &prime));
    require_ok(si_ideal_is_maximal(ideal.get(), &maximal));
    require_ok(si_ideal_is_primary(ideal.get(), &primary));
    require_ok(si_ideal_is_irreducible(ideal.get(), &irreducible));
    require_ok(si_ideal_is_subtractive(ideal.get(), &subtractive));
    int cancellation = 0;
    bool cancellation_defined = true;
    si_result cs = si_ideal_is_cancellation(ideal.get(), &cancellation);
    if (cs == SI_ERR_ZERO_IDEAL)
        cancellation_defined = false;
    else
        require_ok(cs);
    if (opt.json) {
        ordered_json j;
        j["semiring"] = si_semiring_name(sr.get());
        j["ideal"] = ideal_json(sr.get(), ideal.get());
        j["proper"] = si_ideal_is_proper(ideal.get()) != 0;
        j["prime"] = prime != 0;
        j["maximal"] = maximal != 0;
        j["primary"] = primary != 0;
        j["irreducible"] = irreducible != 0;
        j["subtractive"] = subtractive != 0;
        if (cancellation_defined)
            j["cancellation"] = cancellation != 0;
        else
            j["cancellation"] = nullptr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ideal " << ideal_str(sr.get(), ideal.get()) << " in "
                  << si_semiring_name(sr.get()) << "\n";
        auto flag = [](const char* name, bool value) {
            std::printf("  %-12s %s\n", name, value ? "yes" : "no");
        };
        flag("proper", si_ideal_is_proper(ideal.get()) != 0);
        flag("prime", prime != 0);
        flag("maximal", maximal != 0);
        flag("primary", primary != 0);
        flag("irreducible", irreducible != 0);
        flag("subtractive", subtractive != 0);
        if (cancellation_defined)
            flag("cancellation", cancellation != 0);
        else
            std::printf("  %-12s %s\n", "cancellation",
                        "n/a (zero ideal)");
    }
    return exit_ok;
}

int cmd_vof(const std::string& target, const std::string& gens,
            const Options& opt) {
    SemiringH sr = load_target(target, opt);
    IdealH ideal = ideal_from_option(sr.get(), gens);
    si_ideal_list* raw = nullptr;
    require_ok(si_vof(ideal.get(), &raw));
    IdealListH list(raw);
    print_ideal_list(sr.get(), list.get(), opt, "primes_over");
    return exit_ok;
}

int cmd_radical(const std::string& target, const std::string& gens,
                const Options& opt) {
    SemiringH sr = load_target(target, opt);
    IdealH ideal = ideal_from_option(sr.get(), gens);
    si_ideal* raw = nullptr;
    require_ok(si_ideal_radical(ideal.get(), &raw));
    IdealH result(raw);
    if (opt.json) {
        ordered_json j;
        j["semiring"] = si_semiring_name(sr.get());
        j["ideal"] = ideal_json(sr.get(), ideal.get());
        j["radical"] = ideal_json(sr.get(), result.get());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ideal_str(sr.get(), result.get()) << "\n";
    }
    return exit_ok;
}

int cmd_colon(const std::string& target, const std::string& gens,
              const std::string& by, const Options& opt) {
    SemiringH sr = load_target(target, opt);
    IdealH I = ideal_from_option(sr.get(), gens);
    IdealH J = ideal_from_option(sr.get(), by);
    si_ideal* raw = nullptr;
    require_ok(si_ideal_colon(I.get(), J.get(), &raw));
    IdealH result(raw);
    if (opt.json) {
        ordered_json j;
        j["semiring"] = si_semiring_name(sr.get());
        j["ideal"] = ideal_json(sr.get(), I.get());
        j["by"] = ideal_json(sr.get(), J.get());
        j["colon"] = ideal_json(sr.get(), result.get());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ideal_str(sr.get(), result.get()) << "\n";
    }
    return exit_ok;
}

int cmd_hom_check(const std::string& src_t, const std::string& dst_t,
                  const std::string& map, const Options& opt) {
    SemiringH src = load_target(src_t, opt);
    SemiringH dst = load_target(dst_t, opt);
    // hom_from_option exits with the violation report when the map fails.
    try {
        HomH hom = hom_from_option(src.get(), dst.get(), map);
        si_ideal* raw = nullptr;
        require_ok(si_hom_kernel(hom.get(), &raw));
        IdealH ker(raw);
        if (opt.json) {
            ordered_json j;
            j["valid"] = true;
            j["injective"] = si_hom_is_injective(hom.get()) != 0;
            j["kernel"] = ideal_json(src.get(), ker.get());
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "valid homomorphism\n";
            std::cout << "  injective: "
                      << (si_hom_is_injective(hom.get()) ? "yes" : "no") << "\n";
            std::cout << "  kernel:    " << ideal_str(src.get(), ker.get())
                      << "\n";
        }
        return exit_ok;
    } catch (const CliError& e) {
        if (e.code == exit_input_error) throw;
        if (opt.json) {
            ordered_json j{{"valid", false}, {"error", e.message}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "not a homomorphism: " << e.message << "\n";
        }
        return exit_check_failed;
    }
}

int cmd_contract_extend(bool contraction, const std::string& src_t,
                        const std::string& dst_t, const std::string& map,
                        const std::string& gens, const Options& opt) {
    SemiringH src = load_target(src_t, opt);
    SemiringH dst = load_target(dst_t, opt);
    HomH hom = hom_from_option(src.get(), dst.get(), map);
    const si_semiring* ideal_ring = contraction ? dst.get() : src.get();
    const si_semiring* result_ring = contraction ? src.get() : dst.get();
    IdealH ideal = ideal_from_option(ideal_ring, gens);
    si_ideal* raw = nullptr;
    require_ok(contraction ? si_hom_contract(hom.get(), ideal.get(), &raw)
                           : si_hom_extend(hom.get(), ideal.get(), &raw));
    IdealH result(raw);
    if (opt.json) {
        ordered_json j;
        j["ideal"] = ideal_json(ideal_ring, ideal.get());
        j[contraction ? "contraction" : "extension"] =
            ideal_json(result_ring, result.get());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << ideal_str(result_ring, result.get()) << "\n";
    }
    return exit_ok;
}

void print_localization(const si_semiring* sr, const si_localization* loc,
                        const Options& opt, ordered_json extra) {
    si_semiring* quot_raw = nullptr;
    require_ok(si_localization_quotient(loc, &quot_raw));
    SemiringH quot(quot_raw);
    char* quot_json_raw = nullptr;
    require_ok(si_semiring_to_json(quot.get(), &quot_json_raw));
    const std::string quot_json = take_string(quot_json_raw);

    std::vector<int> mcset(si_semiring_size(sr));
    size_t mcset_len = 0;
    require_ok(si_localization_mcset(loc, mcset.data(), &mcset_len));
    mcset.resize(mcset_len);

    ordered_json classes = ordered_json::array();
    std::vector<int> row(mcset_len);
    for (size_t e = 0; e < si_semiring_size(sr); ++e) {
        require_ok(si_localization_class_of(loc, static_cast<int>(e),
                                            row.data()));
        for (size_t u = 0; u < mcset_len; ++u)
            classes.push_back(
                {{"fraction",
                  std::string(si_semiring_element_name(sr, static_cast<int>(e))) +
                      "/" + si_semiring_element_name(sr, mcset[u])},
                 {"class",
                  si_semiring_element_name(quot.get(), row[u])}});
    }

    if (opt.json) {
        ordered_json j;
        j["base"] = si_semiring_name(sr);
        ordered_json mc = ordered_json::array();
        for (int u : mcset) mc.push_back(si_semiring_element_name(sr, u));
        j["mcset"] = mc;
        j["quotient"] = ordered_json::parse(quot_json);
        j["classes"] = classes;
        for (auto& [k, v] : extra.items()) j[k] = v;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "quotient (size " << si_semiring_size(quot.get()) << "):\n"
              << quot_json << "\n";
    std::cout << "class map:\n";
    for (const auto& entry : classes)
        std::cout << "  " << entry["fraction"].get<std::string>() << " -> "
                  << entry["class"].get<std::string>() << "\n";
    for (auto& [k, v] : extra.items())
        std::cout << k << ": "
                  << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

int cmd_localize(const std::string& target, const std::string& mcset,
                 const Options& opt) {
    SemiringH sr = load_target(target, opt);
    auto elems = resolve_elements(sr.get(), mcset);
    si_localization* raw = nullptr;
    require_ok(si_localize(sr.get(), elems.data(), elems.size(), &raw));
    LocalizationH loc(raw);
    print_localization(sr.get(), loc.get(), opt, ordered_json::object());
    return exit_ok;
}

int cmd_localize_at(const std::string& target, const std::string& prime,
                    const Options& opt) {
    SemiringH sr = load_target(target, opt);
    IdealH P = ideal_from_option(sr.get(), prime);
    si_localization* raw = nullptr;
    require_ok(si_localize_at_prime(sr.get(), P.get(), &raw));
    LocalizationH loc(raw);

    si_semiring* quot_raw = nullptr;
    require_ok(si_localization_quotient(loc.get(), &quot_raw));
    SemiringH quot(quot_raw);
    int has = 0;
    si_ideal* max_raw = nullptr;
    require_ok(si_is_local(quot.get(), &has, &max_raw));
    IdealH maximal(max_raw);
    ordered_json extra;
    extra["maximal_ideal"] = has ? ideal_json(quot.get(), maximal.get())
                                 : ordered_json(nullptr);
    print_localization(sr.get(), loc.get(), opt, std::move(extra));
    return exit_ok;
}

int cmd_decompose(const std::string& target, const std::string& gens,
                  const std::string& kind, bool minimal, const Options& opt) {
    SemiringH sr = load_target(target, opt);
    IdealH ideal = ideal_from_option(sr.get(), gens);
    const int kind_flag =
        kind == "irreducible" ? SI_DECOMP_IRREDUCIBLE : SI_DECOMP_PRIMARY;
    si_decomposition* raw = nullptr;
    require_ok(si_decompose(ideal.get(), kind_flag, minimal ? 1 : 0, &raw));
    DecompositionH decomp(raw);

    ordered_json comps = ordered_json::array();
    for (size_t i = 0; i < si_decomposition_count(decomp.get()); ++i) {
        si_ideal* comp_raw = nullptr;
        require_ok(si_decomposition_component(decomp.get(), i, &comp_raw));
        IdealH comp(comp_raw);
        si_ideal* rad_raw = nullptr;
        require_ok(si_ideal_radical(comp.get(), &rad_raw));
        IdealH rad(rad_raw);
        comps.push_back({{"component", ideal_json(sr.get(), comp.get())},
                         {"radical", ideal_json(sr.get(), rad.get())}});
    }
    ordered_json minimal_primes = ordered_json::array();
    if (si_ideal_is_proper(ideal.get())) {
        si_ideal_list* mp_raw = nullptr;
        si_result mp_status = si_minimal_primes(ideal.get(), &mp_raw);
        if (mp_status == SI_OK) {
            IdealListH mp(mp_raw);
            for (size_t i = 0; i < si_ideal_list_count(mp.get()); ++i) {
                si_ideal* p_raw = nullptr;
                require_ok(si_ideal_list_get(mp.get(), i, &p_raw));
                IdealH p(p_raw);
                minimal_primes.push_back(ideal_json(sr.get(), p.get()));
            }
        } else if (mp_status != SI_ERR_NO_PRIMARY_DECOMPOSITION) {
            require_ok(mp_status);
        }
    }

    if (opt.json) {
        ordered_json j;
        j["semiring"] = si_semiring_name(sr.get());
        j["ideal"] = ideal_json(sr.get(), ideal.get());
        j["kind"] = kind;
        j["minimal"] = si_decomposition_is_minimal(decomp.get()) != 0;
        j["components"] = comps;
        j["minimal_primes"] = minimal_primes;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "decomposition of " << ideal_str(sr.get(), ideal.get())
                  << " (" << kind << (minimal ? ", minimal" : "") << "):\n";
        for (const auto& entry : comps) {
            std::string comp_text = "{";
            bool first = true;
            for (const auto& name : entry["component"]) {
                if (!first) comp_text += ",";
                comp_text += name.get<std::string>();
                first = false;
            }
            comp_text += "}";
            std::string rad_text = "{";
            first = true;
            for (const auto& name : entry["radical"]) {
                if (!first) rad_text += ",";
                rad_text += name.get<std::string>();
                first = false;
            }
            rad_text += "}";
            std::cout << "  " << comp_text << "  radical " << rad_text << "\n";
        }
        std::cout << "minimal primes:\n";
        for (const auto& p : minimal_primes) {
            std::cout << "  {";
            bool first = true;
            for (const auto& name : p) {
                if (!first) std::cout << ",";
                std::cout << name.get<std::string>();
                first = false;
            }
            std::cout << "}\n";
        }
    }
    return exit_ok;
}

int cmd_module_check(const std::string& path, const Options& opt) {
    si_module* raw = nullptr;
    require_ok(si_module_from_file(path.c_str(), opt.size_cap, &raw));
    ModuleH module(raw);
    char* report_raw = nullptr;
    require_ok(si_module_check(module.get(), &report_raw));
    const std::string report = take_string(report_raw);
    if (opt.json) {
        std::cout << report << "\n";
    } else {
        ordered_json j = ordered_json::parse(report);
        std::cout << "module of size " << j["size"].get<int>() << " over "
                  << j["ring"].get<std::string>() << ": valid\n";
        for (const auto& a : j["annihilators"])
            std::cout << "  Ann(" << a["element"].get<int>() << ") = "
                      << a["annihilator"].get<std::string>() << "\n";
        const auto& lg = j["local_global_zero"];
        std::cout << "  zero module: "
                  << (lg["module_zero"].get<bool>() ? "yes" : "no")
                  << " (agrees at all primes and maximal ideals)\n";
    }
    return exit_ok;
}

int check_one(const si_semiring* sr, const std::string& props,
              const Options& opt, ordered_json& reports) {
    char* report_raw = nullptr;
    si_result status =
        si_run_checks(sr, props.empty() ? "all" : props.c_str(), opt.seed,
                      &report_raw);
    const std::string report = take_string(report_raw);
    if (status != SI_OK && status != SI_ERR_CHECK_FAILED) require_ok(status);
    ordered_json j = ordered_json::parse(report);
    reports.push_back(j);
    if (!opt.json) {
        std::cout << j["semiring"].get<std::string>() << ":\n";
        for (const auto& p : j["propositions"]) {
            const auto failures = p["failures"].size();
            std::printf("  [%s] %-26s %6lld instances, %zu failures\n",
                        failures == 0 ? "ok" : "FAIL",
                        p["id"].get<std::string>().c_str(),
                        static_cast<long long>(p["instances"].get<long>()),
                        failures);
            for (const auto& f : p["failures"])
                std::cout << "      " << f.get<std::string>() << "\n";
        }
    }
    return status == SI_OK ? exit_ok : exit_check_failed;
}

int cmd_check(const std::string& target, const std::string& props,
              const Options& opt) {
    ordered_json reports = ordered_json::array();
    int worst = exit_ok;
    if (target == "gallery:all") {
        for (size_t i = 0; i < si_gallery_count(); ++i) {
            si_semiring* raw = nullptr;
            require_ok(si_gallery_get(si_gallery_name(i), &raw));
            SemiringH sr(raw);
            worst = std::max(worst, check_one(sr.get(), props, opt, reports));
        }
    } else {
        SemiringH sr = load_target(target, opt);
        worst = std::max(worst, check_one(sr.get(), props, opt, reports));
    }
    if (opt.json) {
        ordered_json j;
        j["reports"] = reports;
        std::cout << j.dump(2) << "\n";
    } else {
        long instances = 0, failures = 0;
        for (const auto& r : reports)
            for (const auto& p : r["propositions"]) {
                instances += p["instances"].get<long>();
                failures += static_cast<long>(p["failures"].size());
            }
        std::cout << "total: " << instances << " instances, " << failures
                  << " failures\n";
    }
    return worst;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite commutative semiring ideal calculator"};
    app.set_version_flag("--version", si_version());
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Options opt;
    app.add_flag("--json", opt.json, "machine readable output");
    app.add_option("--size-cap", opt.size_cap,
                   "largest accepted semiring size for file input")
        ->default_val(8);
    app.add_option("--seed", opt.seed,
                   "permutes check iteration order (results are identical)");

    std::string target, gens, by, map, mcset, prime, props, kind, module_path;
    std::string gallery_name;
    bool minimal = false;

    auto* validate = app.add_subcommand("validate", "validate a semiring file");
    validate->add_option("target", target)->required();

    auto* gallery_cmd =
        app.add_subcommand("gallery", "list built-in semirings or print one");
    gallery_cmd->add_option("name", gallery_name);

    auto* ideals = app.add_subcommand("ideals", "enumerate all ideals");
    ideals->add_option("target", target)->required();

    auto* spec = app.add_subcommand("spec", "prime ideals");
    spec->add_option("target", target)->required();

    auto* max = app.add_subcommand("max", "maximal ideals");
    max->add_option("target", target)->required();

    auto* classify = app.add_subcommand("classify", "classify an ideal");
    classify->add_option("target", target)->required();
    classify->add_option("--ideal", gens, "generator list")->required();

    auto* vof = app.add_subcommand("vof", "primes containing an ideal");
    vof->add_option("target", target)->required();
    vof->add_option("--ideal", gens)->required();

    auto* radical_cmd = app.add_subcommand("radical", "radical of an ideal");
    radical_cmd->add_option("target", target)->required();
    radical_cmd->add_option("--ideal", gens)->required();

    auto* colon_cmd = app.add_subcommand("colon", "colon ideal [I : J]");
    colon_cmd->add_option("target", target)->required();
    colon_cmd->add_option("--ideal", gens, "generators of I")->required();
    colon_cmd->add_option("--by", by, "generators of J")->required();

    auto* hom = app.add_subcommand("hom-check", "validate an element map");
    hom->add_option("src", target)->required();
    hom->add_option("dst", by)->required();
    hom->add_option("--map", map, "entries src:dst")->required();

    auto* contract_cmd =
        app.add_subcommand("contract", "preimage of a target ideal");
    contract_cmd->add_option("src", target)->required();
    contract_cmd->add_option("dst", by)->required();
    contract_cmd->add_option("--map", map)->required();
    contract_cmd->add_option("--ideal", gens, "ideal of the target")
        ->required();

    auto* extend_cmd =
        app.add_subcommand("extend", "ideal generated by the image");
    extend_cmd->add_option("src", target)->required();
    extend_cmd->add_option("dst", by)->required();
    extend_cmd->add_option("--map", map)->required();
    extend_cmd->add_option("--ideal", gens, "ideal of the source")
        ->required();

    auto* localize_cmd =
        app.add_subcommand("localize", "semiring of fractions at an MC-set");
    localize_cmd->add_option("target", target)->required();
    localize_cmd->add_option("--mcset", mcset, "members, e.g. s,1")
        ->required();

    auto* localize_at =
        app.add_subcommand("localize-at", "localization at a prime ideal");
    localize_at->add_option("target", target)->required();
    localize_at->add_option("--prime", prime, "generators of the prime")
        ->required();

    auto* decompose =
        app.add_subcommand("decompose", "irreducible or primary decomposition");
    decompose->add_option("target", target)->required();
    decompose->add_option("--ideal", gens)->required();
    decompose->add_option("--kind", kind)
        ->check(CLI::IsMember({"irreducible", "primary"}))
        ->default_val("primary");
    decompose->add_flag("--minimal", minimal, "minimize the decomposition");

    auto* module_check =
        app.add_subcommand("module-check", "validate a semimodule file");
    module_check->add_option("file", module_path)->required();

    auto* check = app.add_subcommand(
        "check", "verify the proposition suite (target or gallery:all)");
    check->add_option("target", target)->required();
    check->add_option("--props", props,
                      "comma separated proposition ids (default all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(target, opt);
        if (gallery_cmd->parsed()) return cmd_gallery(gallery_name, opt);
        if (ideals->parsed()) return cmd_ideals(target, opt);
        if (spec->parsed()) return cmd_spectrum(target, false, opt);
        if (max->parsed()) return cmd_spectrum(target, true, opt);
        if (classify->parsed()) return cmd_classify(target, gens, opt);
        if (vof->parsed()) return cmd_vof(target, gens, opt);
        if (radical_cmd->parsed()) return cmd_radical(target, gens, opt);
        if (colon_cmd->parsed()) return cmd_colon(target, gens, by, opt);
        if (hom->parsed()) return cmd_hom_check(target, by, map, opt);
        if (contract_cmd->parsed())
            return cmd_contract_extend(true, target, by, map, gens, opt);
        if (extend_cmd->parsed())
            return cmd_contract_extend(false, target, by, map, gens, opt);
        if (localize_cmd->parsed()) return cmd_localize(target, mcset, opt);
        if (localize_at->parsed()) return cmd_localize_at(target, prime, opt);
        if (decompose->parsed())
            return cmd_decompose(target, gens, kind, minimal, opt);
        if (module_check->parsed()) return cmd_module_check(module_path, opt);
        if (check->parsed()) return cmd_check(target, props, opt);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_check_failed;
    }
    return exit_input_error;
}
