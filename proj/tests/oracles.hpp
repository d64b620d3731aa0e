// Test-only oracles. Everything here recomputes results from first
// principles with the dumbest possible method (full subset scans, explicit
// pairwise relations) and must stay independent of the library's algorithms
// it is used to check.
#pragma once

#include <cstdint>
#include <vector>

#include "sri/semiring.hpp"
#include "sri/subset.hpp"

namespace oracle {

using sri::Elem;
using sri::Mask;
using sri::Semiring;

// Direct transcription of the ideal conditions, no closure tricks.
inline bool is_ideal(const Semiring& S, Mask m) {
    if (!sri::mask_has(m, S.zero())) return false;
    for (Elem a = 0; a < S.size(); ++a) {
        if (!sri::mask_has(m, a)) continue;
        for (Elem b = 0; b < S.size(); ++b) {
            if (sri::mask_has(m, b) && !sri::mask_has(m, S.add(a, b)))
                return false;
            if (!sri::mask_has(m, S.mul(b, a))) return false;
        }
    }
    return true;
}

// All ideals by scanning every one of the 2^n subsets; n <= 5 keeps this
// instant.
inline std::vector<Mask> all_ideals_subset_scan(const Semiring& S) {
    std::vector<Mask> out;
    const Mask full = sri::full_mask(S.size());
    for (Mask m = 0; m <= full; ++m)
        if (is_ideal(S, m)) out.push_back(m);
    return out;
}

// Smallest ideal containing the seed, as the intersection of every ideal
// from the subset scan that contains it.
inline Mask generated_ideal(const Semiring& S, Mask seed) {
    Mask acc = sri::full_mask(S.size());
    for (Mask m : all_ideals_subset_scan(S))
        if (sri::mask_subset(seed, m)) acc &= m;
    return acc;
}

// Finite sums of products, grown one term at a time.
inline Mask product_ideal(const Semiring& S, Mask I, Mask J) {
    std::vector<Elem> products;
    for (Elem x = 0; x < S.size(); ++x)
        for (Elem y = 0; y < S.size(); ++y)
            if (sri::mask_has(I, x) && sri::mask_has(J, y))
                products.push_back(S.mul(x, y));
    Mask sums = sri::bit(S.zero());
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem s = 0; s < S.size(); ++s) {
            if (!sri::mask_has(sums, s)) continue;
            for (Elem p : products) {
                Elem next = S.add(s, p);
                if (!sri::mask_has(sums, next)) {
                    sums |= sri::bit(next);
                    changed = true;
                }
            }
        }
    }
    return sums;
}

inline bool is_prime(const Semiring& S, Mask P) {
    if (P == sri::full_mask(S.size())) return false;
    for (Elem a = 0; a < S.size(); ++a)
        for (Elem b = 0; b < S.size(); ++b)
            if (sri::mask_has(P, S.mul(a, b)) && !sri::mask_has(P, a) &&
                !sri::mask_has(P, b))
                return false;
    return true;
}

// Radical as the intersection of the primes above I, with the primes found
// by scanning all subsets; independent from the power-iteration route.
inline Mask radical_via_primes(const Semiring& S, Mask I) {
    Mask acc = sri::full_mask(S.size());
    for (Mask m : all_ideals_subset_scan(S))
        if (is_prime(S, m) && sri::mask_subset(I, m)) acc &= m;
    return acc;
}

// Fraction classes by explicit pairwise comparison: two pairs are related
// when some t in U equalizes them, and classes are the connected components
// of that relation computed by repeated sweeps.
inline std::vector<int> fraction_classes(const Semiring& S,
                                         const std::vector<Elem>& u_elems) {
    const std::size_t un = u_elems.size();
    const std::size_t pairs = static_cast<size_t>(S.size()) * un;
    auto related = [&](std::size_t p, std::size_t q) {
        const Elem x = static_cast<Elem>(p / un), u = u_elems[p % un];
        const Elem y = static_cast<Elem>(q / un), v = u_elems[q % un];
        for (Elem t : u_elems)
            if (S.mul(t, S.mul(v, x)) == S.mul(t, S.mul(u, y))) return true;
        return false;
    };
    std::vector<int> cls(pairs);
    for (std::size_t p = 0; p < pairs; ++p) cls[p] = static_cast<int>(p);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t p = 0; p < pairs; ++p)
            for (std::size_t q = 0; q < pairs; ++q)
                if (related(p, q) && cls[q] != cls[p]) {
                    int lo = std::min(cls[p], cls[q]);
                    cls[p] = cls[q] = lo;
                    changed = true;
                }
    }
    return cls;
}

} // namespace oracle
