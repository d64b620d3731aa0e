#pragma once

#include <optional>
#include <vector>

#include "sri/ideal.hpp"
#include "sri/semiring.hpp"

namespace sri {

/// Prime and maximal ideals of a semiring, each sorted canonically.
struct Spectrum {
    SemiringPtr ring;
    std::vector<Ideal> primes;
    std::vector<Ideal> maximals;
};

// Mask-level predicates; no ideal lattice required.
bool prime_mask(const Semiring& S, Mask P);
bool primary_mask(const Semiring& S, Mask Q);
bool mc_set_mask(const Semiring& S, Mask W); // contains 1, closed under *

bool is_prime(const Ideal& P);
bool is_maximal(const Ideal& m);
bool is_primary(const Ideal& Q);
bool is_irreducible(const Ideal& I);

Spectrum spectrum_of(const SemiringPtr& S);

/// V(I): the primes containing I, sorted canonically. Nonempty iff I is
/// proper.
std::vector<Ideal> v_of(const Ideal& I);

/// The ⊆-maximal ideals disjoint from the MC-set W; each is prime (verified,
/// an internal error if not). Throws invalid_mc_set if W is not an MC-set and
/// empty_family if 0 ∈ W (no ideal at all is disjoint then).
std::vector<Ideal> maximal_disjoint_ideals(const SemiringPtr& S, Mask W);

/// I + J = S.
bool is_comaximal(const Ideal& I, const Ideal& J);

/// The unique maximal ideal when there is exactly one, else nullopt. When
/// present it equals S minus the units (verified).
std::optional<Ideal> is_local(const SemiringPtr& S);

/// All MC-sets W with |W| <= max_size (every W contains 1). Sorted by mask.
std::vector<Mask> mc_sets_up_to(const Semiring& S, int max_size);

} // namespace sri
