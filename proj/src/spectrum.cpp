#include "sri/spectrum.hpp"

#include <algorithm>

namespace sri {

bool prime_mask(const Semiring& S, Mask P) {
    if (P == S.all()) return false;
    for (Elem a = 0; a < S.size(); ++a)
        for (Elem b = a; b < S.size(); ++b)
            if (mask_has(P, S.mul(a, b)) && !mask_has(P, a) && !mask_has(P, b))
                return false;
    return true;
}

bool primary_mask(const Semiring& S, Mask Q) {
    if (Q == S.all()) return false;
    const Mask rad = radical_mask(S, Q);
    // y^n in Q for some n iff y is in the radical of Q.
    for (Elem x = 0; x < S.size(); ++x)
        for (Elem y = 0; y < S.size(); ++y)
            if (mask_has(Q, S.mul(x, y)) && !mask_has(Q, x) && !mask_has(rad, y))
                return false;
    return true;
}

bool mc_set_mask(const Semiring& S, Mask W) {
    if (!mask_has(W, S.one())) return false;
    bool ok = true;
    for_each_elem(W, [&](Elem a) {
        for_each_elem(W, [&](Elem b) {
            if (!mask_has(W, S.mul(a, b))) ok = false;
        });
    });
    return ok;
}

bool is_prime(const Ideal& P) { return prime_mask(*P.ring(), P.bits()); }

bool is_primary(const Ideal& Q) { return primary_mask(*Q.ring(), Q.bits()); }

bool is_maximal(const Ideal& m) {
    const auto& L = m.ring()->ideals();
    return L.maximal_at(L.index_of(m.bits()));
}

bool is_irreducible(const Ideal& I) {
    const auto& L = I.ring()->ideals();
    return L.irreducible_at(L.index_of(I.bits()));
}

Spectrum spectrum_of(const SemiringPtr& S) {
    const auto& L = S->ideals();
    Spectrum out;
    out.ring = S;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (L.prime_at(i)) out.primes.push_back(L.ideal_at(i));
        if (L.maximal_at(i)) out.maximals.push_back(L.ideal_at(i));
    }
    return out;
}

std::vector<Ideal> v_of(const Ideal& I) {
    const auto S = I.ring();
    const auto& L = S->ideals();
    std::vector<Ideal> out;
    for (std::size_t i = 0; i < L.size(); ++i)
        if (L.prime_at(i) && mask_subset(I.bits(), L.masks()[i]))
            out.push_back(L.ideal_at(i));
    return out;
}

std::vector<Ideal> maximal_disjoint_ideals(const SemiringPtr& S, Mask W) {
    if (!mc_set_mask(*S, W))
        fail(ErrorKind::invalid_mc_set,
             mask_to_string(*S, W) + " is not multiplicatively closed");
    if (mask_has(W, S->zero()))
        fail(ErrorKind::empty_family,
             "0 belongs to the MC-set, so no ideal is disjoint from it");
    const auto& L = S->ideals();
    std::vector<Mask> disjoint;
    for (Mask m : L.masks())
        if ((m & W) == 0) disjoint.push_back(m);
    std::vector<Ideal> out;
    for (Mask m : disjoint) {
        bool maximal = true;
        for (Mask other : disjoint)
            if (other != m && mask_proper_subset(m, other)) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        if (!prime_mask(*S, m))
            fail(ErrorKind::internal,
                 "maximal disjoint ideal " + mask_to_string(*S, m) +
                     " is not prime");
        out.emplace_back(S, m);
    }
    return out;
}

bool is_comaximal(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    return add_ideal_masks(*I.ring(), I.bits(), J.bits()) == I.ring()->all();
}

std::optional<Ideal> is_local(const SemiringPtr& S) {
    auto spec = spectrum_of(S);
    if (spec.maximals.size() != 1) return std::nullopt;
    const Ideal& m = spec.maximals.front();
    if (m.bits() != (S->all() & ~S->units()))
        fail(ErrorKind::internal,
             "unique maximal ideal differs from the non-units");
    return m;
}

std::vector<Mask> mc_sets_up_to(const Semiring& S, int max_size) {
    std::vector<Mask> out;
    const int n = S.size();
    std::vector<Elem> others;
    for (Elem e = 0; e < n; ++e)
        if (e != S.one()) others.push_back(e);

    auto consider = [&](Mask extra) {
        Mask W = extra | bit(S.one());
        if (mc_set_mask(S, W)) out.push_back(W);
    };
    // All subsets of at most max_size-1 extra elements alongside 1.
    auto rec = [&](auto&& self, std::size_t from, Mask extra, int left) -> void {
        consider(extra);
        if (left == 0) return;
        for (std::size_t i = from; i < others.size(); ++i)
            self(self, i + 1, extra | bit(others[i]), left - 1);
    };
    rec(rec, 0, 0, std::max(0, max_size - 1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace sri
