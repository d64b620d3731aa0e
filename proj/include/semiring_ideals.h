/*
 * semiring_ideals.h
 *
 * C interface to the finite-commutative-semiring ideal theory library.
 * All objects are opaque handles created and destroyed through this API;
 * every fallible call returns a status code, with a thread-local detail
 * message available via si_last_error(). Handles are immutable once
 * created and may be used from several threads concurrently; they keep
 * whatever they reference alive, so e.g. an ideal outlives the semiring
 * handle it was created from.
 *
 * Elements of a semiring of size n are the indices 0..n-1. After
 * validation the additive identity is always index 0 and the
 * multiplicative identity index 1; element names carry the original
 * labeling.
 */

#ifndef SEMIRING_IDEALS_H
#define SEMIRING_IDEALS_H

#include <stddef.h>

#ifndef SI_API
#  if defined(_WIN32)
#    define SI_API
#  elif defined(__GNUC__) || defined(__clang__)
#    define SI_API __attribute__((visibility("default")))
#  else
#    define SI_API
#  endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum si_result {
    SI_OK = 0,
    SI_ERR_PARSE = 1,
    SI_ERR_MALFORMED_TABLE = 2,
    SI_ERR_AXIOM_VIOLATION = 3,
    SI_ERR_ZERO_EQUALS_ONE = 4,
    SI_ERR_SIZE_CAP_EXCEEDED = 5,
    SI_ERR_HOM_VIOLATION = 6,
    SI_ERR_PARENT_MISMATCH = 7,
    SI_ERR_ZERO_IDEAL = 8,
    SI_ERR_EMPTY_FAMILY = 9,
    SI_ERR_NOT_PRIME = 10,
    SI_ERR_INVALID_MC_SET = 11,
    SI_ERR_IMPROPER_IDEAL = 12,
    SI_ERR_NO_PRIMARY_DECOMPOSITION = 13,
    SI_ERR_PRECONDITION = 14,
    SI_ERR_CORRESPONDENCE_FAILURE = 15,
    SI_ERR_EQUIVALENCE_FAILURE = 16,
    SI_ERR_UNKNOWN_PROPOSITION = 17,
    SI_ERR_IO = 18,
    SI_ERR_CHECK_FAILED = 19,
    SI_ERR_INVALID_ARGUMENT = 20,
    SI_ERR_INTERNAL = 21
} si_result;

typedef struct si_semiring si_semiring;
typedef struct si_ideal si_ideal;
typedef struct si_ideal_list si_ideal_list;
typedef struct si_hom si_hom;
typedef struct si_localization si_localization;
typedef struct si_module si_module;
typedef struct si_decomposition si_decomposition;

SI_API const char* si_version(void);
SI_API const char* si_result_name(si_result status);

/* Detail message for the most recent failing call on this thread. */
SI_API const char* si_last_error(void);

/* Frees strings returned through char** out-parameters. */
SI_API void si_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Semirings                                                           */
/* ------------------------------------------------------------------ */

/* size_cap: 0 keeps the hard representation limit (64), otherwise inputs
 * larger than the cap are rejected with SI_ERR_SIZE_CAP_EXCEEDED. */
SI_API si_result si_semiring_from_json(const char* json, int size_cap,
                                si_semiring** out);
SI_API si_result si_semiring_from_file(const char* path, int size_cap,
                                si_semiring** out);

/* Validation report without constructing anything. *out_report is a JSON
 * object {"valid": bool, "violations": [{"law", "witness", "detail"}]}.
 * Returns SI_OK when valid, the classifying error otherwise. */
SI_API si_result si_validate_json(const char* json, int size_cap,
                           char** out_report);

SI_API void si_semiring_free(si_semiring* s);

SI_API size_t si_semiring_size(const si_semiring* s);
SI_API const char* si_semiring_name(const si_semiring* s);
SI_API const char* si_semiring_element_name(const si_semiring* s, int elem);
SI_API si_result si_semiring_element_index(const si_semiring* s, const char* name,
                                    int* out);

SI_API si_result si_semiring_add(const si_semiring* s, int a, int b, int* out);
SI_API si_result si_semiring_mul(const si_semiring* s, int a, int b, int* out);
SI_API si_result si_semiring_pow(const si_semiring* s, int base, int exponent,
                          int* out);

/* buf must hold si_semiring_size(s) ints; *out_count receives the number
 * of units written. */
SI_API si_result si_semiring_units(const si_semiring* s, int* buf,
                            size_t* out_count);

SI_API si_result si_semiring_to_json(const si_semiring* s, char** out_json);
SI_API si_result si_direct_product(const si_semiring* a, const si_semiring* b,
                            si_semiring** out);

/* Built-in gallery. Names returned by si_gallery_name are static. */
SI_API size_t si_gallery_count(void);
SI_API const char* si_gallery_name(size_t index);
SI_API si_result si_gallery_get(const char* name, si_semiring** out);

/* ------------------------------------------------------------------ */
/* Ideals                                                              */
/* ------------------------------------------------------------------ */

/* Least ideal containing the given generators (none -> the zero ideal). */
SI_API si_result si_ideal_generate(const si_semiring* s, const int* generators,
                            size_t count, si_ideal** out);
SI_API void si_ideal_free(si_ideal* ideal);

SI_API size_t si_ideal_member_count(const si_ideal* ideal);
SI_API si_result si_ideal_members(const si_ideal* ideal, int* buf,
                           size_t* out_count);
SI_API int si_ideal_contains(const si_ideal* ideal, int elem);
SI_API int si_ideal_is_proper(const si_ideal* ideal);
SI_API int si_ideal_equal(const si_ideal* a, const si_ideal* b);

SI_API si_result si_ideal_add(const si_ideal* a, const si_ideal* b, si_ideal** out);
SI_API si_result si_ideal_mul(const si_ideal* a, const si_ideal* b, si_ideal** out);
SI_API si_result si_ideal_intersect(const si_ideal* a, const si_ideal* b,
                             si_ideal** out);
SI_API si_result si_ideal_colon(const si_ideal* numerator, const si_ideal* divisor,
                         si_ideal** out);
SI_API si_result si_ideal_radical(const si_ideal* ideal, si_ideal** out);

SI_API si_result si_ideal_is_prime(const si_ideal* ideal, int* out);
SI_API si_result si_ideal_is_maximal(const si_ideal* ideal, int* out);
SI_API si_result si_ideal_is_primary(const si_ideal* ideal, int* out);
SI_API si_result si_ideal_is_irreducible(const si_ideal* ideal, int* out);
SI_API si_result si_ideal_is_subtractive(const si_ideal* ideal, int* out);
/* SI_ERR_ZERO_IDEAL when called on (0). */
SI_API si_result si_ideal_is_cancellation(const si_ideal* ideal, int* out);

SI_API si_result si_enumerate_ideals(const si_semiring* s, si_ideal_list** out);
SI_API void si_ideal_list_free(si_ideal_list* list);
SI_API size_t si_ideal_list_count(const si_ideal_list* list);
SI_API si_result si_ideal_list_get(const si_ideal_list* list, size_t index,
                            si_ideal** out);

/* Id(S) as a semiring: + is ideal sum, * is ideal product. */
SI_API si_result si_ideal_semiring(const si_semiring* s, si_semiring** out);

/* ------------------------------------------------------------------ */
/* Spectrum                                                            */
/* ------------------------------------------------------------------ */

SI_API si_result si_spectrum(const si_semiring* s, si_ideal_list** out_primes,
                      si_ideal_list** out_maximals);
SI_API si_result si_vof(const si_ideal* ideal, si_ideal_list** out);
/* mcset lists the member elements; must contain 1 and be closed under *.
 * SI_ERR_EMPTY_FAMILY when 0 is a member. */
SI_API si_result si_maximal_disjoint(const si_semiring* s, const int* mcset,
                              size_t count, si_ideal_list** out);
SI_API si_result si_is_comaximal(const si_ideal* a, const si_ideal* b, int* out);
/* *out_has = 1 and *out the unique maximal ideal when S is local. */
SI_API si_result si_is_local(const si_semiring* s, int* out_has, si_ideal** out);

/* ------------------------------------------------------------------ */
/* Homomorphisms                                                       */
/* ------------------------------------------------------------------ */

/* map has one target element per source element. */
SI_API si_result si_hom_create(const si_semiring* src, const si_semiring* dst,
                        const int* map, si_hom** out);
SI_API void si_hom_free(si_hom* hom);
SI_API si_result si_hom_kernel(const si_hom* hom, si_ideal** out);
SI_API si_result si_hom_contract(const si_hom* hom, const si_ideal* target_ideal,
                          si_ideal** out);
SI_API si_result si_hom_extend(const si_hom* hom, const si_ideal* source_ideal,
                        si_ideal** out);
SI_API int si_hom_is_injective(const si_hom* hom);

/* ------------------------------------------------------------------ */
/* Localization                                                        */
/* ------------------------------------------------------------------ */

SI_API si_result si_localize(const si_semiring* s, const int* mcset, size_t count,
                      si_localization** out);
SI_API si_result si_localize_at_prime(const si_semiring* s, const si_ideal* prime,
                               si_localization** out);
SI_API void si_localization_free(si_localization* loc);

SI_API si_result si_localization_quotient(const si_localization* loc,
                                   si_semiring** out);
SI_API si_result si_localization_class_of(const si_localization* loc, int elem,
                                   int* out_classes /* one per MC member */);
SI_API si_result si_localization_mcset(const si_localization* loc, int* buf,
                                size_t* out_count);
SI_API si_result si_localization_gamma(const si_localization* loc, si_hom** out);
SI_API si_result si_localize_ideal(const si_localization* loc, const si_ideal* ideal,
                            si_ideal** out);
/* Parallel lists: primes of S disjoint from U and their extensions. */
SI_API si_result si_prime_correspondence(const si_localization* loc,
                                  si_ideal_list** out_base,
                                  si_ideal_list** out_quotient);

/* ------------------------------------------------------------------ */
/* Semimodules                                                         */
/* ------------------------------------------------------------------ */

SI_API si_result si_module_from_file(const char* path, int size_cap,
                              si_module** out);
SI_API void si_module_free(si_module* module);
SI_API size_t si_module_size(const si_module* module);
SI_API si_result si_module_ring(const si_module* module, si_semiring** out);
SI_API si_result si_module_annihilator(const si_module* module, int elem,
                                si_ideal** out);
/* Validation summary, annihilators and the local-global zero test as JSON. */
SI_API si_result si_module_check(const si_module* module, char** out_report);

/* ------------------------------------------------------------------ */
/* Decomposition                                                       */
/* ------------------------------------------------------------------ */

#define SI_DECOMP_IRREDUCIBLE 0
#define SI_DECOMP_PRIMARY 1

SI_API si_result si_decompose(const si_ideal* ideal, int kind, int minimal,
                       si_decomposition** out);
SI_API void si_decomposition_free(si_decomposition* d);
SI_API size_t si_decomposition_count(const si_decomposition* d);
SI_API si_result si_decomposition_component(const si_decomposition* d, size_t index,
                                     si_ideal** out);
SI_API int si_decomposition_is_minimal(const si_decomposition* d);
SI_API si_result si_minimal_primes(const si_ideal* ideal, si_ideal_list** out);

/* ------------------------------------------------------------------ */
/* Proposition checks                                                  */
/* ------------------------------------------------------------------ */

SI_API size_t si_proposition_count(void);
SI_API const char* si_proposition_id(size_t index);
SI_API const char* si_proposition_summary(const char* id);

/* selection: "all" or a comma-separated id list. Emits the full JSON
 * report regardless of outcome; returns SI_ERR_CHECK_FAILED when any
 * instance failed. The seed only permutes iteration order; reports are
 * identical for every seed. */
SI_API si_result si_run_checks(const si_semiring* s, const char* selection,
                        unsigned long long seed, char** out_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SEMIRING_IDEALS_H */
