#include "sri/localization.hpp"

#include <algorithm>

#include "sri/spectrum.hpp"

namespace sri {

namespace {

// Row-per-pair relation matrix, one bit per pair of (element, MC-member).
struct PairRelation {
    std::size_t pairs;
    std::size_t words;
    std::vector<std::uint64_t> rows;

    explicit PairRelation(std::size_t pair_count)
        : pairs(pair_count), words((pair_count + 63) / 64),
          rows(pairs * words, 0) {}

    void set(std::size_t p, std::size_t q) {
        rows[p * words + q / 64] |= std::uint64_t{1} << (q % 64);
    }
    bool get(std::size_t p, std::size_t q) const {
        return (rows[p * words + q / 64] >> (q % 64)) & 1;
    }
    bool rows_equal(std::size_t p, std::size_t q) const {
        return std::equal(rows.begin() + p * words, rows.begin() + (p + 1) * words,
                          rows.begin() + q * words);
    }
};

} // namespace

Elem Localization::class_of(Elem s, Elem u) const {
    if (s < 0 || s >= base_->size() || u < 0 || u >= base_->size() ||
        u_index_[u] < 0)
        fail(ErrorKind::precondition,
             "class_of needs an element and an MC-set member");
    return class_table_[static_cast<std::size_t>(s) * u_elems_.size() +
                        u_index_[u]];
}

std::pair<Elem, Elem> Localization::least_representative(Elem q) const {
    if (q < 0 || q >= quotient_->size())
        fail(ErrorKind::precondition, "quotient element out of range");
    return reps_[q];
}

Localization localize(const SemiringPtr& S, Mask mcset) {
    if (!mc_set_mask(*S, mcset))
        fail(ErrorKind::invalid_mc_set,
             mask_to_string(*S, mcset) + " is not multiplicatively closed");
    if (mask_has(mcset, S->zero()))
        fail(ErrorKind::invalid_mc_set,
             "MC-set contains 0; every fraction would collapse to a point");

    Localization L;
    L.base_ = S;
    L.mcset_ = mcset;
    L.u_elems_ = mask_elems(mcset);
    L.u_index_.assign(S->size(), -1);
    for (std::size_t i = 0; i < L.u_elems_.size(); ++i)
        L.u_index_[L.u_elems_[i]] = static_cast<int>(i);

    const std::size_t un = L.u_elems_.size();
    const std::size_t pair_count = static_cast<std::size_t>(S->size()) * un;
    auto pair_at = [&](std::size_t p) {
        return std::pair<Elem, Elem>{static_cast<Elem>(p / un),
                                     L.u_elems_[p % un]};
    };

    // (x,u) ~ (y,v) iff tvx = tuy for some t in U. Symmetry and reflexivity
    // are immediate from the formula; transitivity is verified below rather
    // than assumed.
    PairRelation rel(pair_count);
    for (std::size_t p = 0; p < pair_count; ++p) {
        auto [x, u] = pair_at(p);
        for (std::size_t q = p; q < pair_count; ++q) {
            auto [y, v] = pair_at(q);
            for (Elem t : L.u_elems_) {
                if (S->mul(t, S->mul(v, x)) == S->mul(t, S->mul(u, y))) {
                    rel.set(p, q);
                    rel.set(q, p);
                    break;
                }
            }
        }
    }
    for (std::size_t p = 0; p < pair_count; ++p)
        for (std::size_t q = p + 1; q < pair_count; ++q)
            if (rel.get(p, q) && !rel.rows_equal(p, q))
                fail(ErrorKind::internal,
                     "fraction relation is not transitive");

    // Rows are now literal equivalence classes; label each class by its
    // least pair. The class of 0/1 becomes element 0 and the class of 1/1
    // element 1, everything else ascending by least representative.
    std::vector<int> class_of_pair(pair_count, -1);
    std::vector<std::size_t> class_leads;
    for (std::size_t p = 0; p < pair_count; ++p) {
        if (class_of_pair[p] >= 0) continue;
        const int c = static_cast<int>(class_leads.size());
        class_leads.push_back(p);
        for (std::size_t q = p; q < pair_count; ++q)
            if (rel.get(p, q)) class_of_pair[q] = c;
    }
    const std::size_t zero_pair =
        static_cast<std::size_t>(S->zero()) * un + L.u_index_[S->one()];
    const std::size_t one_pair =
        static_cast<std::size_t>(S->one()) * un + L.u_index_[S->one()];
    std::vector<int> order;
    order.push_back(class_of_pair[zero_pair]);
    if (class_of_pair[one_pair] == class_of_pair[zero_pair])
        fail(ErrorKind::internal, "0/1 and 1/1 coincide in the quotient");
    order.push_back(class_of_pair[one_pair]);
    for (int c = 0; c < static_cast<int>(class_leads.size()); ++c)
        if (c != order[0] && c != order[1]) order.push_back(c);
    std::vector<int> relabel(class_leads.size());
    for (std::size_t i = 0; i < order.size(); ++i) relabel[order[i]] = static_cast<int>(i);

    const int qn = static_cast<int>(class_leads.size());
    L.class_table_.assign(pair_count, 0);
    for (std::size_t p = 0; p < pair_count; ++p)
        L.class_table_[p] = relabel[class_of_pair[p]];
    L.reps_.assign(qn, {0, 0});
    for (std::size_t i = 0; i < order.size(); ++i)
        L.reps_[i] = pair_at(class_leads[order[i]]);

    // Quotient tables from representatives: x/u + y/v = (xv+yu)/uv and
    // x/u * y/v = xy/uv.
    auto cls = [&](Elem s, Elem u) {
        return L.class_table_[static_cast<std::size_t>(s) * un + L.u_index_[u]];
    };
    auto add_pair = [&](std::pair<Elem, Elem> a, std::pair<Elem, Elem> b) {
        Elem num = S->add(S->mul(a.first, b.second), S->mul(b.first, a.second));
        return cls(num, S->mul(a.second, b.second));
    };
    auto mul_pair = [&](std::pair<Elem, Elem> a, std::pair<Elem, Elem> b) {
        return cls(S->mul(a.first, b.first), S->mul(a.second, b.second));
    };

    TableData data;
    data.size = qn;
    data.zero = 0;
    data.one = 1;
    if (!S->name().empty())
        data.name = S->name() + "_loc";
    data.add.assign(qn, std::vector<Elem>(qn));
    data.mul.assign(qn, std::vector<Elem>(qn));
    for (int i = 0; i < qn; ++i)
        for (int j = 0; j < qn; ++j) {
            data.add[i][j] = add_pair(L.reps_[i], L.reps_[j]);
            data.mul[i][j] = mul_pair(L.reps_[i], L.reps_[j]);
        }
    for (int i = 0; i < qn; ++i)
        data.element_names.push_back(S->element_name(L.reps_[i].first) + "/" +
                                     S->element_name(L.reps_[i].second));

    // Well-definedness: the table value must not depend on which member of
    // a class was used.
    for (std::size_t p = 0; p < pair_count; ++p)
        for (std::size_t q = 0; q < pair_count; ++q) {
            auto a = pair_at(p);
            auto b = pair_at(q);
            const int ci = L.class_table_[p];
            const int cj = L.class_table_[q];
            if (add_pair(a, b) != data.add[ci][cj] ||
                mul_pair(a, b) != data.mul[ci][cj])
                fail(ErrorKind::internal,
                     "fraction arithmetic is not well defined");
        }

    L.quotient_ = Semiring::create(std::move(data), 0);

    std::vector<Elem> gamma_map(static_cast<std::size_t>(S->size()));
    for (Elem a = 0; a < S->size(); ++a) gamma_map[a] = cls(a, S->one());
    L.gamma_ = Hom::create(S, L.quotient_, std::move(gamma_map));
    return L;
}

Ideal localize_ideal(const Localization& L, const Ideal& I) {
    if (I.ring().get() != L.base().get())
        fail(ErrorKind::parent_mismatch,
             "localize_ideal needs an ideal of the base semiring");
    Mask m = 0;
    for_each_elem(I.bits(), [&](Elem x) {
        for (Elem u : L.mcset_elems()) m |= bit(L.class_of(x, u));
    });
    Ideal result(L.quotient(), m);
    if (!(result == extend(L.gamma(), I)))
        fail(ErrorKind::internal,
             "localized ideal differs from the extension along gamma");
    return result;
}

std::vector<PrimePair> prime_correspondence(const Localization& L) {
    const auto S = L.base();
    auto base_spec = spectrum_of(S);
    auto quot_spec = spectrum_of(L.quotient());

    std::vector<PrimePair> pairs;
    for (const Ideal& P : base_spec.primes) {
        if ((P.bits() & L.mcset()) != 0) continue;
        Ideal Pe = localize_ideal(L, P);
        if (!is_prime(Pe))
            fail(ErrorKind::correspondence_failure,
                 "extension of " + ideal_to_string(P) + " is not prime");
        Ideal back = contract(L.gamma(), Pe);
        if (!(back == P))
            fail(ErrorKind::correspondence_failure,
                 "contraction does not undo extension for " +
                     ideal_to_string(P));
        pairs.push_back({P, Pe});
    }
    // Onto: every prime of the quotient must be hit exactly once.
    for (const Ideal& Q : quot_spec.primes) {
        std::size_t hits = 0;
        for (const auto& pr : pairs)
            if (pr.quotient_prime == Q) ++hits;
        if (hits != 1)
            fail(ErrorKind::correspondence_failure,
                 "quotient prime " + ideal_to_string(Q) + " is matched " +
                     std::to_string(hits) + " times");
    }
    if (pairs.size() != quot_spec.primes.size())
        fail(ErrorKind::correspondence_failure,
             "prime counts differ between the two sides");
    return pairs;
}

Localization localize_at_prime(const SemiringPtr& S, const Ideal& P) {
    if (P.ring().get() != S.get())
        fail(ErrorKind::parent_mismatch, "prime belongs to another semiring");
    if (!is_prime(P))
        fail(ErrorKind::not_prime,
             ideal_to_string(P) + " is not a prime ideal");
    Localization L = localize(S, S->all() & ~P.bits());
    auto m = is_local(L.quotient());
    if (!m)
        fail(ErrorKind::internal, "localization at a prime is not local");
    Ideal extended = localize_ideal(L, P);
    if (!(extended == *m))
        fail(ErrorKind::internal,
             "maximal ideal of the localization differs from P S_P");
    if (L.quotient()->units() != (L.quotient()->all() & ~m->bits()))
        fail(ErrorKind::internal,
             "units of the localization differ from the complement of P S_P");
    return L;
}

} // namespace sri
