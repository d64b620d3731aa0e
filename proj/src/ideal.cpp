#include "sri/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "sri/spectrum.hpp"

namespace sri {

Ideal::Ideal(SemiringPtr ring, Mask members) : ring_(std::move(ring)), bits_(members) {
    if (!ring_) fail(ErrorKind::precondition, "ideal requires a semiring");
    if (!is_ideal_mask(*ring_, bits_))
        fail(ErrorKind::precondition,
             "subset " + mask_to_string(*ring_, bits_) + " is not an ideal");
}

void require_same_ring(const Ideal& a, const Ideal& b) {
    if (a.ring().get() != b.ring().get())
        fail(ErrorKind::parent_mismatch,
             "ideals belong to different semirings");
}

std::string mask_to_string(const Semiring& S, Mask m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for_each_elem(m, [&](Elem e) {
        if (!first) os << ",";
        os << S.element_name(e);
        first = false;
    });
    os << "}";
    return os.str();
}

std::string ideal_to_string(const Ideal& I) {
    return mask_to_string(*I.ring(), I.bits());
}

bool is_ideal_mask(const Semiring& S, Mask m) {
    if (!mask_has(m, S.zero())) return false;
    bool ok = true;
    for_each_elem(m, [&](Elem a) {
        if (!ok) return;
        for_each_elem(m, [&](Elem b) {
            if (!mask_has(m, S.add(a, b))) ok = false;
        });
        for (Elem s = 0; s < S.size() && ok; ++s)
            if (!mask_has(m, S.mul(s, a))) ok = false;
    });
    return ok;
}

Mask close_to_ideal_mask(const Semiring& S, Mask seed) {
    Mask m = seed | bit(S.zero());
    bool changed = true;
    while (changed) {
        changed = false;
        Mask next = m;
        for_each_elem(m, [&](Elem a) {
            for_each_elem(m, [&](Elem b) { next |= bit(S.add(a, b)); });
            for (Elem s = 0; s < S.size(); ++s) next |= bit(S.mul(s, a));
        });
        if (next != m) {
            m = next;
            changed = true;
        }
    }
    return m;
}

Ideal generate_ideal(const SemiringPtr& S, Mask generators) {
    if ((generators & ~S->all()) != 0)
        fail(ErrorKind::precondition, "generator outside the semiring");
    return Ideal(S, close_to_ideal_mask(*S, generators));
}

Ideal zero_ideal(const SemiringPtr& S) { return Ideal(S, bit(S->zero())); }

Ideal unit_ideal(const SemiringPtr& S) { return Ideal(S, S->all()); }

Ideal principal_ideal(const SemiringPtr& S, Elem s) {
    return generate_ideal(S, bit(s));
}

Mask add_ideal_masks(const Semiring& S, Mask I, Mask J) {
    // {x+y} is already closed: sums of sums regroup, and s(x+y) = sx+sy.
    Mask out = 0;
    for_each_elem(I, [&](Elem x) {
        for_each_elem(J, [&](Elem y) { out |= bit(S.add(x, y)); });
    });
    return out;
}

Ideal add_ideals(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    return Ideal(I.ring(), add_ideal_masks(*I.ring(), I.bits(), J.bits()));
}

Mask mul_ideal_masks(const Semiring& S, Mask I, Mask J) {
    Mask products = bit(S.zero());
    for_each_elem(I, [&](Elem x) {
        for_each_elem(J, [&](Elem y) { products |= bit(S.mul(x, y)); });
    });
    // Close under +; multiples of sums of products are again such sums.
    Mask m = products;
    bool changed = true;
    while (changed) {
        changed = false;
        Mask next = m;
        for_each_elem(m, [&](Elem a) {
            for_each_elem(m, [&](Elem b) { next |= bit(S.add(a, b)); });
        });
        if (next != m) {
            m = next;
            changed = true;
        }
    }
    return m;
}

Ideal mul_ideals(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    return Ideal(I.ring(), mul_ideal_masks(*I.ring(), I.bits(), J.bits()));
}

Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    return Ideal(I.ring(), I.bits() & J.bits());
}

Mask colon_masks(const Semiring& S, Mask I, Mask J) {
    Mask out = 0;
    for (Elem s = 0; s < S.size(); ++s) {
        bool in = true;
        for_each_elem(J, [&](Elem j) {
            if (!mask_has(I, S.mul(s, j))) in = false;
        });
        if (in) out |= bit(s);
    }
    return out;
}

Ideal colon(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    return Ideal(I.ring(), colon_masks(*I.ring(), I.bits(), J.bits()));
}

Mask radical_mask(const Semiring& S, Mask I) {
    Mask out = 0;
    for (Elem s = 0; s < S.size(); ++s) {
        Elem p = s;
        for (int k = 1; k <= S.size(); ++k) {
            if (mask_has(I, p)) {
                out |= bit(s);
                break;
            }
            p = S.mul(p, s);
        }
    }
    return out;
}

Ideal radical(const Ideal& I) {
    return Ideal(I.ring(), radical_mask(*I.ring(), I.bits()));
}

bool is_subtractive_mask(const Semiring& S, Mask I) {
    bool ok = true;
    for_each_elem(I, [&](Elem a) {
        for (Elem b = 0; b < S.size() && ok; ++b)
            if (mask_has(I, S.add(a, b)) && !mask_has(I, b)) ok = false;
    });
    return ok;
}

bool is_subtractive(const Ideal& I) {
    return is_subtractive_mask(*I.ring(), I.bits());
}

bool is_cancellation(const Ideal& I) {
    if (I.is_zero())
        fail(ErrorKind::zero_ideal,
             "cancellation is defined for nonzero ideals only");
    const auto S = I.ring();
    const auto& L = S->ideals();
    const auto& masks = L.masks();
    for (std::size_t j = 0; j < masks.size(); ++j) {
        Mask IJ = mul_ideal_masks(*S, I.bits(), masks[j]);
        for (std::size_t k = j + 1; k < masks.size(); ++k)
            if (IJ == mul_ideal_masks(*S, I.bits(), masks[k])) return false;
    }
    return true;
}

IdealLattice::IdealLattice(const SemiringPtr& ring)
    : ring_(ring), raw_(ring.get()) {
    const Semiring& S = *raw_;
    const int n = S.size();

    std::vector<Mask> principal(n);
    for (Elem s = 0; s < n; ++s) principal[s] = close_to_ideal_mask(S, bit(s));

    // Every ideal is the sum of its principal sub-ideals, so closing {(0)}
    // under joins with principal ideals reaches all of Id(S) without a 2^n
    // subset scan.
    std::vector<Mask> found{bit(S.zero())};
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (Elem s = 0; s < n; ++s) {
            Mask next = add_ideal_masks(S, found[i], principal[s]);
            if (std::find(found.begin(), found.end(), next) == found.end())
                found.push_back(next);
        }
    }
    std::sort(found.begin(), found.end());
    masks_ = std::move(found);

    const std::size_t m = masks_.size();
    prime_.resize(m);
    primary_.resize(m);
    subtractive_.resize(m);
    maximal_.resize(m);
    irreducible_.resize(m);
    const Mask full = S.all();
    for (std::size_t i = 0; i < m; ++i) {
        prime_[i] = prime_mask(S, masks_[i]);
        primary_[i] = primary_mask(S, masks_[i]);
        subtractive_[i] = is_subtractive_mask(S, masks_[i]);
        if (masks_[i] != full) {
            bool max = true;
            for (std::size_t j = 0; j < m && max; ++j)
                if (masks_[j] != full &&
                    mask_proper_subset(masks_[i], masks_[j]))
                    max = false;
            maximal_[i] = max;
        }
        bool irr = true;
        for (std::size_t j = 0; j < m && irr; ++j) {
            if (masks_[j] == masks_[i] || !mask_subset(masks_[i], masks_[j]))
                continue;
            for (std::size_t k = j + 1; k < m; ++k) {
                if (masks_[k] == masks_[i]) continue;
                if ((masks_[j] & masks_[k]) == masks_[i]) {
                    irr = false;
                    break;
                }
            }
        }
        irreducible_[i] = irr;
    }
}

SemiringPtr IdealLattice::ring() const {
    auto p = ring_.lock();
    if (!p) fail(ErrorKind::internal, "ideal lattice outlived its semiring");
    return p;
}

std::size_t IdealLattice::index_of(Mask m) const {
    auto it = std::lower_bound(masks_.begin(), masks_.end(), m);
    if (it == masks_.end() || *it != m)
        fail(ErrorKind::internal,
             "subset " + mask_to_string(*raw_, m) + " is not in the ideal lattice");
    return static_cast<std::size_t>(it - masks_.begin());
}

bool IdealLattice::contains(Mask m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m);
}

Ideal IdealLattice::ideal_at(std::size_t i) const {
    return Ideal(ring(), masks_[i]);
}

std::vector<Ideal> IdealLattice::all_ideals() const {
    auto R = ring();
    std::vector<Ideal> out;
    out.reserve(masks_.size());
    for (Mask m : masks_) out.emplace_back(R, m);
    return out;
}

bool IdealLattice::all_subtractive() const {
    return std::all_of(subtractive_.begin(), subtractive_.end(),
                       [](bool b) { return b; });
}

SemiringPtr ideal_semiring(const SemiringPtr& S) {
    const IdealLattice& L = S->ideals();
    const auto& masks = L.masks();
    const int m = static_cast<int>(masks.size());
    auto index = [&](Mask x) { return static_cast<Elem>(L.index_of(x)); };

    TableData data;
    data.size = m;
    data.name = S->name().empty() ? "" : "Id(" + S->name() + ")";
    data.zero = index(bit(S->zero()));
    data.one = index(S->all());
    data.add.assign(m, std::vector<Elem>(m));
    data.mul.assign(m, std::vector<Elem>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            data.add[i][j] = index(add_ideal_masks(*S, masks[i], masks[j]));
            data.mul[i][j] = index(mul_ideal_masks(*S, masks[i], masks[j]));
        }
    data.element_names.reserve(static_cast<std::size_t>(m));
    for (Mask x : masks) data.element_names.push_back(mask_to_string(*S, x));
    return Semiring::create(std::move(data), 0);
}

} // namespace sri
