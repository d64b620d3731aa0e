#include "semiring_ideals.h"

#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"

#include "sri/checks.hpp"
#include "sri/decomposition.hpp"
#include "sri/gallery.hpp"
#include "sri/hom.hpp"
#include "sri/ideal.hpp"
#include "sri/json_io.hpp"
#include "sri/localization.hpp"
#include "sri/semimodule.hpp"
#include "sri/spectrum.hpp"

using namespace sri;

struct si_semiring {
    SemiringPtr p;
};
struct si_ideal {
    Ideal v;
};
struct si_ideal_list {
    std::vector<Ideal> v;
};
struct si_hom {
    Hom v;
};
struct si_localization {
    Localization v;
};
struct si_module {
    SemimodulePtr p;
};
struct si_decomposition {
    Decomposition v;
};

namespace {

thread_local std::string g_last_error;

si_result status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return SI_ERR_PARSE;
        case ErrorKind::malformed_table: return SI_ERR_MALFORMED_TABLE;
        case ErrorKind::axiom_violation: return SI_ERR_AXIOM_VIOLATION;
        case ErrorKind::zero_equals_one: return SI_ERR_ZERO_EQUALS_ONE;
        case ErrorKind::size_cap_exceeded: return SI_ERR_SIZE_CAP_EXCEEDED;
        case ErrorKind::hom_violation: return SI_ERR_HOM_VIOLATION;
        case ErrorKind::parent_mismatch: return SI_ERR_PARENT_MISMATCH;
        case ErrorKind::zero_ideal: return SI_ERR_ZERO_IDEAL;
        case ErrorKind::empty_family: return SI_ERR_EMPTY_FAMILY;
        case ErrorKind::not_prime: return SI_ERR_NOT_PRIME;
        case ErrorKind::invalid_mc_set: return SI_ERR_INVALID_MC_SET;
        case ErrorKind::improper_ideal: return SI_ERR_IMPROPER_IDEAL;
        case ErrorKind::no_primary_decomposition:
            return SI_ERR_NO_PRIMARY_DECOMPOSITION;
        case ErrorKind::precondition: return SI_ERR_PRECONDITION;
        case ErrorKind::correspondence_failure:
            return SI_ERR_CORRESPONDENCE_FAILURE;
        case ErrorKind::equivalence_failure: return SI_ERR_EQUIVALENCE_FAILURE;
        case ErrorKind::unknown_proposition: return SI_ERR_UNKNOWN_PROPOSITION;
        case ErrorKind::io: return SI_ERR_IO;
        case ErrorKind::internal: return SI_ERR_INTERNAL;
    }
    return SI_ERR_INTERNAL;
}

template <typename F>
si_result guarded(F&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SI_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

si_result need(bool ok, const char* what) {
    if (ok) return SI_OK;
    g_last_error = std::string("invalid argument: ") + what;
    return SI_ERR_INVALID_ARGUMENT;
}

Mask mask_from_list(const SemiringPtr& S, const int* elems, size_t count) {
    Mask m = 0;
    for (size_t i = 0; i < count; ++i) {
        if (elems[i] < 0 || elems[i] >= S->size())
            fail(ErrorKind::precondition, "element index out of range");
        m |= bit(elems[i]);
    }
    return m;
}

si_result write_members(Mask m, int* buf, size_t* out_count) {
    size_t i = 0;
    for_each_elem(m, [&](Elem e) { buf[i++] = e; });
    if (out_count) *out_count = i;
    return SI_OK;
}

} // namespace

extern "C" {

const char* si_version(void) { return "0.1.0"; }

const char* si_result_name(si_result status) {
    switch (status) {
        case SI_OK: return "OK";
        case SI_ERR_PARSE: return "ParseError";
        case SI_ERR_MALFORMED_TABLE: return "MalformedTable";
        case SI_ERR_AXIOM_VIOLATION: return "AxiomViolation";
        case SI_ERR_ZERO_EQUALS_ONE: return "ZeroEqualsOne";
        case SI_ERR_SIZE_CAP_EXCEEDED: return "SizeCapExceeded";
        case SI_ERR_HOM_VIOLATION: return "HomViolation";
        case SI_ERR_PARENT_MISMATCH: return "ParentMismatch";
        case SI_ERR_ZERO_IDEAL: return "ZeroIdeal";
        case SI_ERR_EMPTY_FAMILY: return "EmptyFamily";
        case SI_ERR_NOT_PRIME: return "NotPrime";
        case SI_ERR_INVALID_MC_SET: return "InvalidMCSet";
        case SI_ERR_IMPROPER_IDEAL: return "ImproperIdeal";
        case SI_ERR_NO_PRIMARY_DECOMPOSITION: return "NoPrimaryDecomposition";
        case SI_ERR_PRECONDITION: return "PreconditionViolated";
        case SI_ERR_CORRESPONDENCE_FAILURE: return "CorrespondenceFailure";
        case SI_ERR_EQUIVALENCE_FAILURE: return "EquivalenceFailure";
        case SI_ERR_UNKNOWN_PROPOSITION: return "UnknownPropositionId";
        case SI_ERR_IO: return "IoError";
        case SI_ERR_CHECK_FAILED: return "CheckFailed";
        case SI_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case SI_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownStatus";
}

const char* si_last_error(void) { return g_last_error.c_str(); }

void si_string_free(char* s) { delete[] s; }

/* Semirings ---------------------------------------------------------- */

si_result si_semiring_from_json(const char* json, int size_cap,
                                si_semiring** out) {
    if (auto s = need(json && out, "json and out required")) return s;
    return guarded([&] {
        auto ring = Semiring::create(semiring_table_from_json(json),
                                     size_cap < 0 ? default_size_cap : size_cap);
        *out = new si_semiring{std::move(ring)};
        return SI_OK;
    });
}

si_result si_semiring_from_file(const char* path, int size_cap,
                                si_semiring** out) {
    if (auto s = need(path && out, "path and out required")) return s;
    return guarded([&] {
        *out = new si_semiring{load_semiring_file(
            path, size_cap < 0 ? default_size_cap : size_cap)};
        return SI_OK;
    });
}

si_result si_validate_json(const char* json, int size_cap, char** out_report) {
    if (auto s = need(json, "json required")) return s;
    return guarded([&]() -> si_result {
        TableData data = semiring_table_from_json(json);
        nlohmann::ordered_json report;
        auto violations = check_shape(data);
        si_result status = SI_OK;
        if (!violations.empty()) {
            status = violations.front().law == Law::zero_one_distinct
                         ? SI_ERR_ZERO_EQUALS_ONE
                         : SI_ERR_MALFORMED_TABLE;
        } else {
            const int cap = size_cap < 0 ? default_size_cap : size_cap;
            if (cap != 0 && data.size > cap) {
                status = SI_ERR_SIZE_CAP_EXCEEDED;
                report["violations"] = nlohmann::ordered_json::array(
                    {{{"law", "size-cap"},
                      {"witness", nlohmann::ordered_json::array()},
                      {"detail", "semiring size exceeds the cap"}}});
            } else {
                violations = check_axioms(data);
                if (!violations.empty()) status = SI_ERR_AXIOM_VIOLATION;
            }
        }
        report["valid"] = status == SI_OK;
        if (!report.contains("violations")) {
            report["violations"] = nlohmann::ordered_json::array();
            for (const auto& v : violations)
                report["violations"].push_back({{"law", law_name(v.law)},
                                                {"witness", v.witness},
                                                {"detail", v.detail}});
        }
        if (out_report) *out_report = dup_string(report.dump(2));
        if (status != SI_OK) g_last_error = "semiring validation failed";
        return status;
    });
}

void si_semiring_free(si_semiring* s) { delete s; }

size_t si_semiring_size(const si_semiring* s) {
    return s ? static_cast<size_t>(s->p->size()) : 0;
}

const char* si_semiring_name(const si_semiring* s) {
    return s ? s->p->name().c_str() : "";
}

const char* si_semiring_element_name(const si_semiring* s, int elem) {
    if (!s || elem < 0 || elem >= s->p->size()) return "";
    return s->p->element_name(elem).c_str();
}

si_result si_semiring_element_index(const si_semiring* s, const char* name,
                                    int* out) {
    if (auto st = need(s && name && out, "semiring, name and out required"))
        return st;
    auto idx = s->p->element_index(name);
    if (!idx) {
        g_last_error = std::string("no element named \"") + name + "\"";
        return SI_ERR_INVALID_ARGUMENT;
    }
    *out = *idx;
    return SI_OK;
}

si_result si_semiring_add(const si_semiring* s, int a, int b, int* out) {
    if (auto st = need(s && out, "semiring and out required")) return st;
    if (auto st = need(a >= 0 && a < s->p->size() && b >= 0 && b < s->p->size(),
                       "element out of range"))
        return st;
    *out = s->p->add(a, b);
    return SI_OK;
}

si_result si_semiring_mul(const si_semiring* s, int a, int b, int* out) {
    if (auto st = need(s && out, "semiring and out required")) return st;
    if (auto st = need(a >= 0 && a < s->p->size() && b >= 0 && b < s->p->size(),
                       "element out of range"))
        return st;
    *out = s->p->mul(a, b);
    return SI_OK;
}

si_result si_semiring_pow(const si_semiring* s, int base, int exponent,
                          int* out) {
    if (auto st = need(s && out, "semiring and out required")) return st;
    return guarded([&] {
        *out = s->p->pow(base, exponent);
        return SI_OK;
    });
}

si_result si_semiring_units(const si_semiring* s, int* buf,
                            size_t* out_count) {
    if (auto st = need(s && buf, "semiring and buffer required")) return st;
    return write_members(s->p->units(), buf, out_count);
}

si_result si_semiring_to_json(const si_semiring* s, char** out_json) {
    if (auto st = need(s && out_json, "semiring and out required")) return st;
    return guarded([&] {
        *out_json = dup_string(semiring_to_json(*s->p));
        return SI_OK;
    });
}

si_result si_direct_product(const si_semiring* a, const si_semiring* b,
                            si_semiring** out) {
    if (auto st = need(a && b && out, "two semirings and out required"))
        return st;
    return guarded([&] {
        *out = new si_semiring{direct_product(a->p, b->p)};
        return SI_OK;
    });
}

size_t si_gallery_count(void) { return gallery().size(); }

const char* si_gallery_name(size_t index) {
    const auto& g = gallery();
    return index < g.size() ? g[index]->name().c_str() : "";
}

si_result si_gallery_get(const char* name, si_semiring** out) {
    if (auto st = need(name && out, "name and out required")) return st;
    return guarded([&] {
        *out = new si_semiring{gallery_find(name)};
        return SI_OK;
    });
}

/* Ideals ------------------------------------------------------------- */

si_result si_ideal_generate(const si_semiring* s, const int* generators,
                            size_t count, si_ideal** out) {
    if (auto st = need(s && out && (generators || count == 0),
                       "semiring, generators and out required"))
        return st;
    return guarded([&] {
        Mask gens = mask_from_list(s->p, generators, count);
        *out = new si_ideal{generate_ideal(s->p, gens)};
        return SI_OK;
    });
}

void si_ideal_free(si_ideal* ideal) { delete ideal; }

size_t si_ideal_member_count(const si_ideal* ideal) {
    return ideal ? static_cast<size_t>(ideal->v.count()) : 0;
}

si_result si_ideal_members(const si_ideal* ideal, int* buf,
                           size_t* out_count) {
    if (auto st = need(ideal && buf, "ideal and buffer required")) return st;
    return write_members(ideal->v.bits(), buf, out_count);
}

int si_ideal_contains(const si_ideal* ideal, int elem) {
    if (!ideal || elem < 0 || elem >= ideal->v.ring()->size()) return 0;
    return ideal->v.contains(elem) ? 1 : 0;
}

int si_ideal_is_proper(const si_ideal* ideal) {
    return ideal && ideal->v.proper() ? 1 : 0;
}

int si_ideal_equal(const si_ideal* a, const si_ideal* b) {
    return a && b && a->v == b->v ? 1 : 0;
}

#define SI_IDEAL_BINOP(api_name, impl)                                       \
    si_result api_name(const si_ideal* a, const si_ideal* b, si_ideal** out) { \
        if (auto st = need(a && b && out, "two ideals and out required"))    \
            return st;                                                       \
        return guarded([&] {                                                 \
            *out = new si_ideal{impl(a->v, b->v)};                           \
            return SI_OK;                                                    \
        });                                                                  \
    }

SI_IDEAL_BINOP(si_ideal_add, add_ideals)
SI_IDEAL_BINOP(si_ideal_mul, mul_ideals)
SI_IDEAL_BINOP(si_ideal_intersect, intersect_ideals)
SI_IDEAL_BINOP(si_ideal_colon, colon)

#undef SI_IDEAL_BINOP

si_result si_ideal_radical(const si_ideal* ideal, si_ideal** out) {
    if (auto st = need(ideal && out, "ideal and out required")) return st;
    return guarded([&] {
        *out = new si_ideal{radical(ideal->v)};
        return SI_OK;
    });
}

#define SI_IDEAL_PRED(api_name, expr)                                \
    si_result api_name(const si_ideal* ideal, int* out) {            \
        if (auto st = need(ideal && out, "ideal and out required"))  \
            return st;                                               \
        return guarded([&] {                                         \
            *out = (expr) ? 1 : 0;                                   \
            return SI_OK;                                            \
        });                                                          \
    }

SI_IDEAL_PRED(si_ideal_is_prime, is_prime(ideal->v))
SI_IDEAL_PRED(si_ideal_is_maximal, is_maximal(ideal->v))
SI_IDEAL_PRED(si_ideal_is_primary, is_primary(ideal->v))
SI_IDEAL_PRED(si_ideal_is_irreducible, is_irreducible(ideal->v))
SI_IDEAL_PRED(si_ideal_is_subtractive, is_subtractive(ideal->v))
SI_IDEAL_PRED(si_ideal_is_cancellation, is_cancellation(ideal->v))

#undef SI_IDEAL_PRED

si_result si_enumerate_ideals(const si_semiring* s, si_ideal_list** out) {
    if (auto st = need(s && out, "semiring and out required")) return st;
    return guarded([&] {
        *out = new si_ideal_list{s->p->ideals().all_ideals()};
        return SI_OK;
    });
}

void si_ideal_list_free(si_ideal_list* list) { delete list; }

size_t si_ideal_list_count(const si_ideal_list* list) {
    return list ? list->v.size() : 0;
}

si_result si_ideal_list_get(const si_ideal_list* list, size_t index,
                            si_ideal** out) {
    if (auto st = need(list && out, "list and out required")) return st;
    if (auto st = need(index < list->v.size(), "index out of range")) return st;
    *out = new si_ideal{list->v[index]};
    return SI_OK;
}

si_result si_ideal_semiring(const si_semiring* s, si_semiring** out) {
    if (auto st = need(s && out, "semiring and out required")) return st;
    return guarded([&] {
        *out = new si_semiring{ideal_semiring(s->p)};
        return SI_OK;
    });
}

/* Spectrum ------------------------------------------------------------ */

si_result si_spectrum(const si_semiring* s, si_ideal_list** out_primes,
                      si_ideal_list** out_maximals) {
    if (auto st = need(s, "semiring required")) return st;
    return guarded([&] {
        auto spec = spectrum_of(s->p);
        if (out_primes) *out_primes = new si_ideal_list{std::move(spec.primes)};
        if (out_maximals)
            *out_maximals = new si_ideal_list{std::move(spec.maximals)};
        return SI_OK;
    });
}

si_result si_vof(const si_ideal* ideal, si_ideal_list** out) {
    if (auto st = need(ideal && out, "ideal and out required")) return st;
    return guarded([&] {
        *out = new si_ideal_list{v_of(ideal->v)};
        return SI_OK;
    });
}

si_result si_maximal_disjoint(const si_semiring* s, const int* mcset,
                              size_t count, si_ideal_list** out) {
    if (auto st = need(s && mcset && out, "semiring, MC-set and out required"))
        return st;
    return guarded([&] {
        Mask W = mask_from_list(s->p, mcset, count);
        *out = new si_ideal_list{maximal_disjoint_ideals(s->p, W)};
        return SI_OK;
    });
}

si_result si_is_comaximal(const si_ideal* a, const si_ideal* b, int* out) {
    if (auto st = need(a && b && out, "two ideals and out required")) return st;
    return guarded([&] {
        *out = is_comaximal(a->v, b->v) ? 1 : 0;
        return SI_OK;
    });
}

si_result si_is_local(const si_semiring* s, int* out_has, si_ideal** out) {
    if (auto st = need(s && out_has, "semiring and out_has required")) return st;
    return guarded([&] {
        auto m = is_local(s->p);
        *out_has = m.has_value() ? 1 : 0;
        if (m && out) *out = new si_ideal{*m};
        return SI_OK;
    });
}

/* Homomorphisms -------------------------------------------------------- */

si_result si_hom_create(const si_semiring* src, const si_semiring* dst,
                        const int* map, si_hom** out) {
    if (auto st = need(src && dst && map && out,
                       "source, target, map and out required"))
        return st;
    return guarded([&] {
        std::vector<Elem> m(map, map + src->p->size());
        *out = new si_hom{Hom::create(src->p, dst->p, std::move(m))};
        return SI_OK;
    });
}

void si_hom_free(si_hom* hom) { delete hom; }

si_result si_hom_kernel(const si_hom* hom, si_ideal** out) {
    if (auto st = need(hom && out, "hom and out required")) return st;
    return guarded([&] {
        *out = new si_ideal{kernel(hom->v)};
        return SI_OK;
    });
}

si_result si_hom_contract(const si_hom* hom, const si_ideal* target_ideal,
                          si_ideal** out) {
    if (auto st = need(hom && target_ideal && out,
                       "hom, ideal and out required"))
        return st;
    return guarded([&] {
        *out = new si_ideal{contract(hom->v, target_ideal->v)};
        return SI_OK;
    });
}

si_result si_hom_extend(const si_hom* hom, const si_ideal* source_ideal,
                        si_ideal** out) {
    if (auto st = need(hom && source_ideal && out,
                       "hom, ideal and out required"))
        return st;
    return guarded([&] {
        *out = new si_ideal{extend(hom->v, source_ideal->v)};
        return SI_OK;
    });
}

int si_hom_is_injective(const si_hom* hom) {
    return hom && hom->v.injective() ? 1 : 0;
}

/* Localization --------------------------------------------------------- */

si_result si_localize(const si_semiring* s, const int* mcset, size_t count,
                      si_localization** out) {
    if (auto st = need(s && mcset && out, "semiring, MC-set and out required"))
        return st;
    return guarded([&] {
        Mask W = mask_from_list(s->p, mcset, count);
        *out = new si_localization{localize(s->p, W)};
        return SI_OK;
    });
}

si_result si_localize_at_prime(const si_semiring* s, const si_ideal* prime,
                               si_localization** out) {
    if (auto st = need(s && prime && out, "semiring, prime and out required"))
        return st;
    return guarded([&] {
        *out = new si_localization{localize_at_prime(s->p, prime->v)};
        return SI_OK;
    });
}

void si_localization_free(si_localization* loc) { delete loc; }

si_result si_localization_quotient(const si_localization* loc,
                                   si_semiring** out) {
    if (auto st = need(loc && out, "localization and out required")) return st;
    *out = new si_semiring{loc->v.quotient()};
    return SI_OK;
}

si_result si_localization_class_of(const si_localization* loc, int elem,
                                   int* out_classes) {
    if (auto st = need(loc && out_classes,
                       "localization and out buffer required"))
        return st;
    return guarded([&] {
        const auto& u = loc->v.mcset_elems();
        for (size_t i = 0; i < u.size(); ++i)
            out_classes[i] = loc->v.class_of(elem, u[i]);
        return SI_OK;
    });
}

si_result si_localization_mcset(const si_localization* loc, int* buf,
                                size_t* out_count) {
    if (auto st = need(loc && buf, "localization and buffer required"))
        return st;
    const auto& u = loc->v.mcset_elems();
    for (size_t i = 0; i < u.size(); ++i) buf[i] = u[i];
    if (out_count) *out_count = u.size();
    return SI_OK;
}

si_result si_localization_gamma(const si_localization* loc, si_hom** out) {
    if (auto st = need(loc && out, "localization and out required")) return st;
    *out = new si_hom{loc->v.gamma()};
    return SI_OK;
}

si_result si_localize_ideal(const si_localization* loc, const si_ideal* ideal,
                            si_ideal** out) {
    if (auto st = need(loc && ideal && out,
                       "localization, ideal and out required"))
        return st;
    return guarded([&] {
        *out = new si_ideal{localize_ideal(loc->v, ideal->v)};
        return SI_OK;
    });
}

si_result si_prime_correspondence(const si_localization* loc,
                                  si_ideal_list** out_base,
                                  si_ideal_list** out_quotient) {
    if (auto st = need(loc, "localization required")) return st;
    return guarded([&] {
        auto pairs = prime_correspondence(loc->v);
        std::vector<Ideal> base, quot;
        for (auto& p : pairs) {
            base.push_back(std::move(p.base_prime));
            quot.push_back(std::move(p.quotient_prime));
        }
        if (out_base) *out_base = new si_ideal_list{std::move(base)};
        if (out_quotient) *out_quotient = new si_ideal_list{std::move(quot)};
        return SI_OK;
    });
}

/* Semimodules ----------------------------------------------------------- */

si_result si_module_from_file(const char* path, int size_cap, si_module** out) {
    if (auto st = need(path && out, "path and out required")) return st;
    return guarded([&] {
        *out = new si_module{load_module_file(
            path, size_cap < 0 ? default_size_cap : size_cap)};
        return SI_OK;
    });
}

void si_module_free(si_module* module) { delete module; }

size_t si_module_size(const si_module* module) {
    return module ? static_cast<size_t>(module->p->size()) : 0;
}

si_result si_module_ring(const si_module* module, si_semiring** out) {
    if (auto st = need(module && out, "module and out required")) return st;
    *out = new si_semiring{module->p->ring()};
    return SI_OK;
}

si_result si_module_annihilator(const si_module* module, int elem,
                                si_ideal** out) {
    if (auto st = need(module && out, "module and out required")) return st;
    return guarded([&] {
        *out = new si_ideal{annihilator(*module->p, elem)};
        return SI_OK;
    });
}

si_result si_module_check(const si_module* module, char** out_report) {
    if (auto st = need(module && out_report, "module and out required"))
        return st;
    return guarded([&] {
        const auto& M = *module->p;
        nlohmann::ordered_json j;
        j["module"] = M.name();
        j["ring"] = M.ring()->name();
        j["size"] = M.size();
        j["valid"] = true; // construction already validated the axioms
        j["annihilators"] = nlohmann::ordered_json::array();
        for (Elem x = 0; x < M.size(); ++x) {
            Ideal ann = annihilator(M, x);
            j["annihilators"].push_back(
                {{"element", x}, {"annihilator", ideal_to_string(ann)}});
        }
        auto lg = is_zero_locally(module->p);
        j["local_global_zero"] = {
            {"module_zero", lg.module_zero},
            {"zero_at_all_primes", lg.zero_at_all_primes},
            {"zero_at_all_maximals", lg.zero_at_all_maximals}};
        if (lg.witness_elem)
            j["local_global_zero"]["witness_element"] = *lg.witness_elem;
        *out_report = dup_string(j.dump(2));
        return SI_OK;
    });
}

/* Decomposition ---------------------------------------------------------- */

si_result si_decompose(const si_ideal* ideal, int kind, int minimal,
                       si_decomposition** out) {
    if (auto st = need(ideal && out, "ideal and out required")) return st;
    if (auto st = need(kind == SI_DECOMP_IRREDUCIBLE || kind == SI_DECOMP_PRIMARY,
                       "kind must be irreducible or primary"))
        return st;
    return guarded([&] {
        Decomposition d = kind == SI_DECOMP_IRREDUCIBLE
                              ? irreducible_decomposition(ideal->v)
                              : primary_decomposition(ideal->v);
        if (minimal) {
            if (kind != SI_DECOMP_PRIMARY)
                fail(ErrorKind::precondition,
                     "only primary decompositions are minimized");
            d = minimize(d);
        }
        *out = new si_decomposition{std::move(d)};
        return SI_OK;
    });
}

void si_decomposition_free(si_decomposition* d) { delete d; }

size_t si_decomposition_count(const si_decomposition* d) {
    return d ? d->v.components.size() : 0;
}

si_result si_decomposition_component(const si_decomposition* d, size_t index,
                                     si_ideal** out) {
    if (auto st = need(d && out, "decomposition and out required")) return st;
    if (auto st = need(index < d->v.components.size(), "index out of range"))
        return st;
    *out = new si_ideal{d->v.components[index]};
    return SI_OK;
}

int si_decomposition_is_minimal(const si_decomposition* d) {
    return d && d->v.minimal ? 1 : 0;
}

si_result si_minimal_primes(const si_ideal* ideal, si_ideal_list** out) {
    if (auto st = need(ideal && out, "ideal and out required")) return st;
    return guarded([&] {
        *out = new si_ideal_list{minimal_primes(ideal->v)};
        return SI_OK;
    });
}

/* Proposition checks ------------------------------------------------------ */

size_t si_proposition_count(void) { return proposition_ids().size(); }

const char* si_proposition_id(size_t index) {
    const auto& ids = proposition_ids();
    return index < ids.size() ? ids[index].c_str() : "";
}

const char* si_proposition_summary(const char* id) {
    if (!id) return "";
    try {
        return proposition_summary(id);
    } catch (const Error& e) {
        g_last_error = e.what();
        return "";
    }
}

si_result si_run_checks(const si_semiring* s, const char* selection,
                        unsigned long long seed, char** out_report) {
    if (auto st = need(s, "semiring required")) return st;
    return guarded([&]() -> si_result {
        std::vector<std::string> ids;
        if (selection && std::string(selection) != "all" &&
            std::string(selection) != "") {
            std::string text = selection;
            std::size_t pos = 0;
            while (pos != std::string::npos) {
                std::size_t comma = text.find(',', pos);
                std::string id = text.substr(
                    pos, comma == std::string::npos ? comma : comma - pos);
                if (!id.empty()) ids.push_back(id);
                pos = comma == std::string::npos ? comma : comma + 1;
            }
        }
        CheckReport report = run_checks(s->p, ids, seed);
        if (out_report) *out_report = dup_string(report_to_json(report));
        if (!report.ok()) {
            g_last_error = "proposition checks reported failures";
            return SI_ERR_CHECK_FAILED;
        }
        return SI_OK;
    });
}

} /* extern "C" */
