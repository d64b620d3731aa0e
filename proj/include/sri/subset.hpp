#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sri {

/// Element index inside a finite semiring (0..n-1 after canonicalization).
using Elem = int;

/// Subsets of a semiring carrier are bitmasks over element indices.
/// Carriers are capped at 64 elements, so one word always suffices and
/// equal sets compare equal bitwise.
using Mask = std::uint64_t;

constexpr Mask bit(Elem i) { return Mask{1} << i; }

constexpr bool mask_has(Mask m, Elem i) { return (m >> i) & 1; }

constexpr Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int mask_count(Mask m) { return std::popcount(m); }

constexpr bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr bool mask_proper_subset(Mask a, Mask b) {
    return a != b && mask_subset(a, b);
}

/// Calls f(i) for every set bit, ascending.
template <typename F>
void for_each_elem(Mask m, F&& f) {
    while (m != 0) {
        Elem i = std::countr_zero(m);
        f(i);
        m &= m - 1;
    }
}

inline std::vector<Elem> mask_elems(Mask m) {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(mask_count(m)));
    for_each_elem(m, [&](Elem i) { out.push_back(i); });
    return out;
}

inline Mask mask_of(std::initializer_list<Elem> elems) {
    Mask m = 0;
    for (Elem e : elems) m |= bit(e);
    return m;
}

} // namespace sri
