#include "sri/decomposition.hpp"

#include <algorithm>

#include "sri/spectrum.hpp"

namespace sri {

namespace {

std::vector<Ideal> masks_to_ideals(const SemiringPtr& S,
                                   std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<Ideal> out;
    out.reserve(masks.size());
    for (Mask m : masks) out.emplace_back(S, m);
    return out;
}

Mask intersect_all(const std::vector<Mask>& masks, Mask full) {
    Mask acc = full;
    for (Mask m : masks) acc &= m;
    return acc;
}

} // namespace

Ideal irreducible_separating(const Ideal& I, Elem s) {
    const auto S = I.ring();
    if (s < 0 || s >= S->size())
        fail(ErrorKind::precondition, "element index out of range");
    if (I.contains(s))
        fail(ErrorKind::precondition,
             "element " + S->element_name(s) + " already lies in " +
                 ideal_to_string(I));
    const auto& L = S->ideals();
    std::vector<Mask> candidates;
    for (Mask m : L.masks())
        if (mask_subset(I.bits(), m) && !mask_has(m, s)) candidates.push_back(m);
    // Masks are sorted, so the first maximal candidate is the canonical pick.
    Mask best = 0;
    bool found = false;
    for (Mask m : candidates) {
        bool maximal = true;
        for (Mask other : candidates)
            if (other != m && mask_proper_subset(m, other)) {
                maximal = false;
                break;
            }
        if (maximal) {
            best = m;
            found = true;
            break;
        }
    }
    if (!found)
        fail(ErrorKind::internal, "no ideal separates the element");
    if (!L.irreducible_at(L.index_of(best)))
        fail(ErrorKind::internal,
             "maximal separating ideal " + mask_to_string(*S, best) +
                 " is not irreducible");
    return Ideal(S, best);
}

Decomposition irreducible_decomposition(const Ideal& I) {
    if (!I.proper())
        fail(ErrorKind::improper_ideal,
             "only proper ideals admit decompositions");
    const auto S = I.ring();
    const auto& L = S->ideals();
    const auto& masks = L.masks();

    std::vector<Mask> components;
    std::vector<Mask> stack{I.bits()};
    while (!stack.empty()) {
        Mask cur = stack.back();
        stack.pop_back();
        if (L.irreducible_at(L.index_of(cur))) {
            components.push_back(cur);
            continue;
        }
        // Least pair (J, K) with J ∩ K = cur and both different from cur;
        // lattice order makes the split deterministic.
        bool split = false;
        for (std::size_t j = 0; j < masks.size() && !split; ++j) {
            if (masks[j] == cur || !mask_subset(cur, masks[j])) continue;
            for (std::size_t k = j + 1; k < masks.size(); ++k) {
                if (masks[k] == cur) continue;
                if ((masks[j] & masks[k]) == cur) {
                    stack.push_back(masks[j]);
                    stack.push_back(masks[k]);
                    split = true;
                    break;
                }
            }
        }
        if (!split)
            fail(ErrorKind::internal,
                 "reducible ideal with no splitting pair");
    }

    if (intersect_all(components, S->all()) != I.bits())
        fail(ErrorKind::internal,
             "irreducible components do not intersect to the ideal");
    // The ideal also equals the intersection of all irreducibles above it.
    Mask all_irr = S->all();
    for (std::size_t i = 0; i < masks.size(); ++i)
        if (L.irreducible_at(i) && mask_subset(I.bits(), masks[i]))
            all_irr &= masks[i];
    if (all_irr != I.bits())
        fail(ErrorKind::internal,
             "intersection of all irreducible ideals above the target "
             "differs from it");

    return Decomposition{I, masks_to_ideals(S, std::move(components)),
                         DecompKind::irreducible, false, false};
}

Decomposition primary_decomposition(const Ideal& I) {
    Decomposition D = irreducible_decomposition(I);
    const auto S = I.ring();
    const auto& L = S->ideals();

    const Ideal* offender = nullptr;
    for (const Ideal& Q : D.components)
        if (!L.primary_at(L.index_of(Q.bits()))) {
            offender = &Q;
            break;
        }
    if (!offender) {
        D.kind = DecompKind::primary;
        return D;
    }

    // Bounded repair: look for a family of at most four primary ideals
    // containing I whose intersection is exactly I.
    std::vector<Mask> primaries;
    for (std::size_t i = 0; i < L.size(); ++i)
        if (L.primary_at(i) && mask_subset(I.bits(), L.masks()[i]))
            primaries.push_back(L.masks()[i]);

    std::vector<Mask> family;
    std::vector<Mask> chosen;
    auto rec = [&](auto&& self, std::size_t from, Mask acc) -> bool {
        if (acc == I.bits()) {
            family = chosen;
            return true;
        }
        if (chosen.size() == 4) return false;
        for (std::size_t i = from; i < primaries.size(); ++i) {
            chosen.push_back(primaries[i]);
            if (self(self, i + 1, acc & primaries[i])) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0, S->all())) {
        fail(ErrorKind::no_primary_decomposition,
             "irreducible component " + ideal_to_string(*offender) +
                 " is not primary and no family of at most 4 primary ideals "
                 "intersects to " + ideal_to_string(I));
    }
    return Decomposition{I, masks_to_ideals(S, std::move(family)),
                         DecompKind::primary, false, true};
}

Decomposition minimize(const Decomposition& D) {
    if (D.kind != DecompKind::primary)
        fail(ErrorKind::precondition,
             "only primary decompositions are minimized");
    const auto S = D.target.ring();

    // Components sharing a radical merge by intersection; the merge of
    // P-primary ideals is again P-primary.
    std::vector<std::pair<Mask, Mask>> by_radical; // (radical, intersection)
    for (const Ideal& Q : D.components) {
        Mask rad = radical_mask(*S, Q.bits());
        bool merged = false;
        for (auto& [r, acc] : by_radical)
            if (r == rad) {
                acc &= Q.bits();
                merged = true;
                break;
            }
        if (!merged) by_radical.push_back({rad, Q.bits()});
    }
    std::vector<Mask> comps;
    for (auto& [r, acc] : by_radical) comps.push_back(acc);

    // Drop any component containing the intersection of the others.
    bool dropped = true;
    while (dropped && comps.size() > 1) {
        dropped = false;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            Mask others = S->all();
            for (std::size_t j = 0; j < comps.size(); ++j)
                if (j != i) others &= comps[j];
            if (mask_subset(others, comps[i])) {
                comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
                dropped = true;
                break;
            }
        }
    }

    Decomposition out{D.target, masks_to_ideals(S, std::move(comps)),
                      DecompKind::primary, true, D.repaired};

    Mask acc = S->all();
    for (const Ideal& Q : out.components) acc &= Q.bits();
    if (acc != D.target.bits())
        fail(ErrorKind::internal, "minimization changed the intersection");
    for (std::size_t i = 0; i < out.components.size(); ++i)
        for (std::size_t j = i + 1; j < out.components.size(); ++j)
            if (radical_mask(*S, out.components[i].bits()) ==
                radical_mask(*S, out.components[j].bits()))
                fail(ErrorKind::internal,
                     "minimized decomposition has equal radicals");
    return out;
}

std::vector<Ideal> minimal_primes(const Ideal& I) {
    if (!I.proper())
        fail(ErrorKind::improper_ideal,
             "only proper ideals have minimal primes");
    const auto S = I.ring();
    Decomposition D = minimize(primary_decomposition(I));

    std::vector<Mask> radicals;
    for (const Ideal& Q : D.components)
        radicals.push_back(radical_mask(*S, Q.bits()));
    std::vector<Mask> minimal;
    for (Mask r : radicals) {
        bool is_min = true;
        for (Mask other : radicals)
            if (other != r && mask_subset(other, r)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(r);
    }

    // Cross-check against the minimal elements of V(I).
    auto primes_over = v_of(I);
    std::vector<Mask> vmin;
    for (const Ideal& P : primes_over) {
        bool is_min = true;
        for (const Ideal& Q : primes_over)
            if (Q.bits() != P.bits() && mask_subset(Q.bits(), P.bits())) {
                is_min = false;
                break;
            }
        if (is_min) vmin.push_back(P.bits());
    }
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    std::sort(vmin.begin(), vmin.end());
    if (minimal != vmin)
        fail(ErrorKind::internal,
             "minimal radicals differ from the minimal primes over the ideal");
    return masks_to_ideals(S, std::move(minimal));
}

} // namespace sri
