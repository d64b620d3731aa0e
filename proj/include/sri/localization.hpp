#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sri/hom.hpp"
#include "sri/ideal.hpp"
#include "sri/semiring.hpp"

namespace sri {

/// The semiring of fractions S_U for an MC-set U: the quotient of S x U by
/// (x,u) ~ (y,v) iff tvx = tuy for some t in U, with the usual fraction
/// arithmetic.
///
/// The relation is computed for every pair of pairs and *verified* to be an
/// equivalence before classes are formed, and both quotient tables are
/// verified independent of the choice of representatives. Classes are
/// labeled so that 0/1 is element 0 and 1/1 is element 1, the rest ascending
/// by least representative.
class Localization {
public:
    const SemiringPtr& base() const { return base_; }
    Mask mcset() const { return mcset_; }
    const std::vector<Elem>& mcset_elems() const { return u_elems_; }
    const SemiringPtr& quotient() const { return quotient_; }
    const Hom& gamma() const { return *gamma_; }

    /// Class of the fraction s/u; u must belong to the MC-set.
    Elem class_of(Elem s, Elem u) const;

    /// Lexicographically least (s, u) pair in the class of quotient element q.
    std::pair<Elem, Elem> least_representative(Elem q) const;

private:
    friend Localization localize(const SemiringPtr&, Mask);

    Localization() = default;

    SemiringPtr base_;
    Mask mcset_ = 0;
    std::vector<Elem> u_elems_;
    std::vector<int> u_index_;      // element -> position in u_elems_, or -1
    std::vector<Elem> class_table_; // (s, u-position) -> quotient element
    std::vector<std::pair<Elem, Elem>> reps_;
    SemiringPtr quotient_;
    std::optional<Hom> gamma_;
};

/// Throws invalid_mc_set when U is not an MC-set or contains 0 (the quotient
/// would collapse to a point, which is not a semiring).
Localization localize(const SemiringPtr& S, Mask mcset);

/// I_U = {x/u : x in I, u in U}, an ideal of the quotient. Verified equal to
/// the extension of I along gamma.
Ideal localize_ideal(const Localization& L, const Ideal& I);

struct PrimePair {
    Ideal base_prime;     // prime of S disjoint from U
    Ideal quotient_prime; // its extension in S_U
};

/// The bijection between primes of S disjoint from U and primes of S_U,
/// with both composites verified to be identities. Throws
/// correspondence_failure with a witness if verification fails.
std::vector<PrimePair> prime_correspondence(const Localization& L);

/// Localization at the complement of a prime P. The result is verified to be
/// local with maximal ideal P S_P, whose complement is exactly the units.
Localization localize_at_prime(const SemiringPtr& S, const Ideal& P);

} // namespace sri
