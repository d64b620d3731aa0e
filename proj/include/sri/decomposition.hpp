#pragma once

#include <vector>

#include "sri/ideal.hpp"
#include "sri/semiring.hpp"

namespace sri {

enum class DecompKind { irreducible, primary };

/// A presentation of an ideal as a finite intersection of irreducible or
/// primary ideals. "minimal" means the component radicals are pairwise
/// distinct and no component contains the intersection of the others.
struct Decomposition {
    Ideal target;
    std::vector<Ideal> components; // sorted canonically
    DecompKind kind = DecompKind::irreducible;
    bool minimal = false;
    bool repaired = false; // primary kind only: lattice search replaced
                           // non-primary irreducible components
};

/// A ⊆-maximal ideal containing I and avoiding s (ties broken by least
/// canonical encoding); irreducible by construction, which is verified.
/// Throws precondition if s ∈ I.
Ideal irreducible_separating(const Ideal& I, Elem s);

/// Splits I recursively: an irreducible ideal stands alone; otherwise the
/// least pair (J, K) with J ∩ K = I and J != I != K is taken and both halves
/// are decomposed. Also verifies I equals the intersection of *all*
/// irreducible ideals containing it. Throws improper_ideal for I = S.
Decomposition irreducible_decomposition(const Ideal& I);

/// Irreducible decomposition followed by a primary check of every component.
/// If a component fails the check, a bounded search over families (size <= 4)
/// of primary ideals containing I attempts a replacement; when that also
/// fails, throws no_primary_decomposition naming the offending component.
Decomposition primary_decomposition(const Ideal& I);

/// Merges components sharing a radical by intersection, then drops any
/// component containing the intersection of the others. Requires kind ==
/// primary. The result still intersects to the target and is minimal.
Decomposition minimize(const Decomposition& D);

/// The ⊆-minimal radicals of a minimal primary decomposition of I; verified
/// to coincide with the ⊆-minimal elements of V(I).
std::vector<Ideal> minimal_primes(const Ideal& I);

} // namespace sri
