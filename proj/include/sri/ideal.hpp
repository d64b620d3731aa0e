#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sri/semiring.hpp"
#include "sri/subset.hpp"

namespace sri {

/// An ideal of a finite semiring: a subset containing 0, closed under
/// addition and under multiplication by arbitrary elements. Carries its
/// parent so cross-semiring operations can be rejected.
class Ideal {
public:
    Ideal(SemiringPtr ring, Mask members);

    const SemiringPtr& ring() const { return ring_; }
    Mask bits() const { return bits_; }

    bool contains(Elem e) const { return mask_has(bits_, e); }
    int count() const { return mask_count(bits_); }
    bool is_zero() const { return bits_ == bit(0); }
    bool proper() const { return bits_ != ring_->all(); }
    std::vector<Elem> members() const { return mask_elems(bits_); }

    bool operator==(const Ideal& other) const {
        return ring_.get() == other.ring_.get() && bits_ == other.bits_;
    }

private:
    SemiringPtr ring_;
    Mask bits_;
};

/// Throws parent_mismatch unless both ideals live over the same semiring
/// object.
void require_same_ring(const Ideal& a, const Ideal& b);

/// "{m, members...}" using the parent's element names.
std::string ideal_to_string(const Ideal& I);
std::string mask_to_string(const Semiring& S, Mask m);

bool is_ideal_mask(const Semiring& S, Mask m);

/// Least ideal containing the seed: closes seed ∪ {0} under pairwise + and
/// multiplication by every element.
Mask close_to_ideal_mask(const Semiring& S, Mask seed);

Ideal generate_ideal(const SemiringPtr& S, Mask generators);
Ideal zero_ideal(const SemiringPtr& S);
Ideal unit_ideal(const SemiringPtr& S);
Ideal principal_ideal(const SemiringPtr& S, Elem s);

/// {x+y : x in I, y in J}; already an ideal, no closure needed.
Ideal add_ideals(const Ideal& I, const Ideal& J);
Mask add_ideal_masks(const Semiring& S, Mask I, Mask J);

/// Finite sums of products xy; the additive closure of the product set.
Ideal mul_ideals(const Ideal& I, const Ideal& J);
Mask mul_ideal_masks(const Semiring& S, Mask I, Mask J);

Ideal intersect_ideals(const Ideal& I, const Ideal& J);

/// [I : J] = {s : sJ ⊆ I}. Colon by a single element x is colon by the
/// principal ideal (x).
Ideal colon(const Ideal& I, const Ideal& J);
Mask colon_masks(const Semiring& S, Mask I, Mask J);

/// {s : s^n in I for some 1 <= n <= |S|}. Powers cycle within |S| steps,
/// so the bound is exact.
Ideal radical(const Ideal& I);
Mask radical_mask(const Semiring& S, Mask I);

/// a+b in I and a in I imply b in I.
bool is_subtractive(const Ideal& I);
bool is_subtractive_mask(const Semiring& S, Mask I);

/// Nonzero I with IJ = IK implying J = K over all ideals. Throws zero_ideal
/// for (0).
bool is_cancellation(const Ideal& I);

/// Every ideal of S, sorted ascending by bit encoding ((0) first, S last),
/// with classification flags computed once. Obtained via
/// Semiring::ideals(); construction closes {(0)} under joins with principal
/// ideals, which reaches every ideal because each ideal is the sum of its
/// principal sub-ideals.
class IdealLattice {
public:
    explicit IdealLattice(const SemiringPtr& ring);

    /// The parent semiring. Held weakly to avoid an ownership cycle with
    /// the per-semiring cache; callers always reach the lattice through a
    /// live parent, so the lock cannot fail.
    SemiringPtr ring() const;
    const std::vector<Mask>& masks() const { return masks_; }
    std::size_t size() const { return masks_.size(); }

    std::size_t index_of(Mask m) const; // throws internal if absent
    bool contains(Mask m) const;
    Ideal ideal_at(std::size_t i) const;
    std::vector<Ideal> all_ideals() const;

    bool prime_at(std::size_t i) const { return prime_[i]; }
    bool maximal_at(std::size_t i) const { return maximal_[i]; }
    bool primary_at(std::size_t i) const { return primary_[i]; }
    bool irreducible_at(std::size_t i) const { return irreducible_[i]; }
    bool subtractive_at(std::size_t i) const { return subtractive_[i]; }

    /// True when every ideal of the semiring is subtractive.
    bool all_subtractive() const;

private:
    std::weak_ptr<const Semiring> ring_;
    const Semiring* raw_ = nullptr;
    std::vector<Mask> masks_;
    std::vector<bool> prime_, maximal_, primary_, irreducible_, subtractive_;
};

/// Id(S) as a semiring in its own right: + is ideal sum, * is ideal
/// product, zero is (0), one is S. Additively idempotent by construction.
SemiringPtr ideal_semiring(const SemiringPtr& S);

} // namespace sri
