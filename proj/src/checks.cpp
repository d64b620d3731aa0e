#include "sri/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "sri/decomposition.hpp"
#include "sri/gallery.hpp"
#include "sri/hom.hpp"
#include "sri/ideal.hpp"
#include "sri/localization.hpp"
#include "sri/semimodule.hpp"
#include "sri/spectrum.hpp"

namespace sri {

long CheckReport::total_instances() const {
    return std::accumulate(propositions.begin(), propositions.end(), 0L,
                           [](long acc, const PropositionResult& p) {
                               return acc + p.instances;
                           });
}

long CheckReport::total_failures() const {
    return std::accumulate(propositions.begin(), propositions.end(), 0L,
                           [](long acc, const PropositionResult& p) {
                               return acc + static_cast<long>(p.failures.size());
                           });
}

namespace {

struct Ctx {
    SemiringPtr S;
    const IdealLattice* L = nullptr;
    std::vector<Mask> masks;        // all ideals, canonical order
    Spectrum spec;
    std::vector<Mask> mcsets_all;   // size <= 4 plus structural MC-sets
    std::vector<Mask> mcsets_loc;   // the above without 0-containing ones
    std::vector<Mask> mcsets_small; // size <= 3, for module fixtures
    std::vector<Hom> homs;          // fixture homomorphisms out of S
    std::vector<SemimodulePtr> modules;
    std::map<Mask, Localization> loc_cache;
    PropositionResult* out = nullptr;

    const Localization& loc(Mask W) {
        auto it = loc_cache.find(W);
        if (it == loc_cache.end())
            it = loc_cache.emplace(W, localize(S, W)).first;
        return it->second;
    }

    void tally(long n = 1) { out->instances += n; }

    template <typename F>
    void expect(bool ok, F&& witness) {
        ++out->instances;
        if (!ok) out->failures.push_back(witness());
    }
    void expect_str(bool ok, const std::string& witness) {
        ++out->instances;
        if (!ok) out->failures.push_back(witness);
    }
    void failure(const std::string& witness) {
        out->failures.push_back(witness);
    }
    void note(const std::string& text) { out->notes.push_back(text); }

    std::string ms(Mask m) const { return mask_to_string(*S, m); }

    Mask add(Mask a, Mask b) const { return add_ideal_masks(*S, a, b); }
    Mask mul(Mask a, Mask b) const { return mul_ideal_masks(*S, a, b); }
    Mask col(Mask a, Mask b) const { return colon_masks(*S, a, b); }
    Mask rad(Mask a) const { return radical_mask(*S, a); }
    Mask full() const { return S->all(); }
    Mask zero() const { return bit(S->zero()); }
};

std::string hom_label(const Hom& f) {
    std::string src = f.src()->name().empty() ? "?" : f.src()->name();
    std::string dst = f.dst()->name().empty() ? "?" : f.dst()->name();
    std::ostringstream os;
    os << src << "->" << dst << " [";
    for (std::size_t i = 0; i < f.map().size(); ++i)
        os << (i ? "," : "") << f.map()[i];
    os << "]";
    return os.str();
}

// Enumerates subsets of `items` with size in [min_size, max_size] and hands
// each one to fn.
template <typename T, typename F>
void for_each_subset(const std::vector<T>& items, int min_size, int max_size,
                     F&& fn) {
    std::vector<T> chosen;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        const int sz = static_cast<int>(chosen.size());
        if (sz >= min_size) fn(chosen);
        if (sz == max_size) return;
        for (std::size_t i = from; i < items.size(); ++i) {
            chosen.push_back(items[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

/* ---------------------------------------------------------------- */
/* Ideal calculus                                                    */
/* ---------------------------------------------------------------- */

void prop_ideal_arithmetic(Ctx& c) {
    const auto& ms = c.masks;
    const Mask full = c.full();
    const Mask zero = c.zero();
    for (Mask I : ms) {
        c.expect(c.add(I, I) == I, [&] { return "I+I != I for I=" + c.ms(I); });
        c.expect(c.add(I, zero) == I,
                 [&] { return "I+(0) != I for I=" + c.ms(I); });
        c.expect(c.mul(I, full) == I,
                 [&] { return "I*S != I for I=" + c.ms(I); });
        c.expect(c.mul(I, zero) == zero,
                 [&] { return "I*(0) != (0) for I=" + c.ms(I); });
        c.expect(c.add(I, full) == full,
                 [&] { return "I+S != S for I=" + c.ms(I); });
    }
    for (Mask I : ms)
        for (Mask J : ms) {
            const Mask sum = c.add(I, J);
            const Mask prod = c.mul(I, J);
            auto tag = [&] { return " for I=" + c.ms(I) + ", J=" + c.ms(J); };
            c.expect(is_ideal_mask(*c.S, sum),
                     [&] { return "I+J is not an ideal" + tag(); });
            c.expect(is_ideal_mask(*c.S, prod),
                     [&] { return "I*J is not an ideal" + tag(); });
            c.expect(sum == c.add(J, I),
                     [&] { return "I+J != J+I" + tag(); });
            c.expect(prod == c.mul(J, I),
                     [&] { return "I*J != J*I" + tag(); });
            c.expect(mask_subset(prod, I & J),
                     [&] { return "I*J not inside the intersection" + tag(); });
            c.expect(sum != full || prod == (I & J), [&] {
                return "comaximal pair with I*J != intersection" + tag();
            });
            c.expect(mask_subset(c.mul(sum, I & J), prod), [&] {
                return "(I+J)(I∩J) escapes I*J" + tag();
            });
            c.expect(sum != zero || (I == zero && J == zero), [&] {
                return "I+J=(0) with a nonzero summand" + tag();
            });
        }
    for (Mask I : ms)
        for (Mask J : ms)
            for (Mask K : ms) {
                auto tag = [&] {
                    return " for I=" + c.ms(I) + ", J=" + c.ms(J) +
                           ", K=" + c.ms(K);
                };
                c.expect(c.add(c.add(I, J), K) == c.add(I, c.add(J, K)),
                         [&] { return "ideal sum is not associative" + tag(); });
                c.expect(c.mul(c.mul(I, J), K) == c.mul(I, c.mul(J, K)), [&] {
                    return "ideal product is not associative" + tag();
                });
                c.expect(c.mul(I, c.add(J, K)) == c.add(c.mul(I, J), c.mul(I, K)),
                         [&] {
                             return "ideal product fails to distribute" + tag();
                         });
            }
}

void prop_ideal_lattice(Ctx& c) {
    // Id(S) as a semiring must validate and be additively idempotent.
    try {
        auto idS = ideal_semiring(c.S);
        c.expect(true, [] { return std::string(); });
        for (Elem i = 0; i < idS->size(); ++i)
            c.expect(idS->add(i, i) == i, [&] {
                return "Id(S) is not additively idempotent at " +
                       idS->element_name(i);
            });
    } catch (const Error& e) {
        c.failure(std::string("Id(S) failed to validate as a semiring: ") +
                  e.what());
    }
    const auto& ms = c.masks;
    for (Mask I : ms) {
        c.expect(mask_subset(c.zero(), I) && mask_subset(I, c.full()),
                 [&] { return "lattice bounds broken at " + c.ms(I); });
    }
    for (Mask I : ms)
        for (Mask J : ms) {
            const Mask sup = c.add(I, J);
            const Mask inf = I & J;
            auto tag = [&] { return " for I=" + c.ms(I) + ", J=" + c.ms(J); };
            bool sup_ok = mask_subset(I, sup) && mask_subset(J, sup);
            bool inf_ok = mask_subset(inf, I) && mask_subset(inf, J);
            for (Mask K : ms) {
                if (mask_subset(I, K) && mask_subset(J, K) &&
                    !mask_subset(sup, K))
                    sup_ok = false;
                if (mask_subset(K, I) && mask_subset(K, J) &&
                    !mask_subset(K, inf))
                    inf_ok = false;
            }
            c.expect(sup_ok, [&] { return "I+J is not the supremum" + tag(); });
            c.expect(inf_ok,
                     [&] { return "I∩J is not the infimum" + tag(); });
        }
    // Product distributes over arbitrary sums; all families of size <= 3
    // plus one family of every size up to the whole lattice.
    auto check_family = [&](const std::vector<Mask>& family) {
        Mask sum = c.zero();
        for (Mask m : family) sum = c.add(sum, m);
        for (Mask J : ms) {
            Mask lhs = c.mul(J, sum);
            Mask rhs = c.zero();
            for (Mask m : family) rhs = c.add(rhs, c.mul(J, m));
            c.expect(lhs == rhs, [&] {
                return "J*(ΣIk) != Σ(J*Ik) for J=" + c.ms(J);
            });
        }
    };
    for_each_subset(ms, 1, 3, check_family);
    for (std::size_t k = 4; k <= ms.size(); ++k)
        check_family(std::vector<Mask>(ms.begin(),
                                       ms.begin() + static_cast<long>(k)));
}

void prop_colon_laws(Ctx& c) {
    const auto& ms = c.masks;
    for (Mask I : ms)
        for (Mask J : ms) {
            const Mask q = c.col(I, J);
            auto tag = [&] { return " for I=" + c.ms(I) + ", J=" + c.ms(J); };
            c.expect(mask_subset(I, q),
                     [&] { return "I not inside [I:J]" + tag(); });
            c.expect(mask_subset(c.mul(q, J), I),
                     [&] { return "[I:J]J escapes I" + tag(); });
            c.expect(q == c.col(I, c.add(I, J)),
                     [&] { return "[I:J] != [I:I+J]" + tag(); });
        }
    for (Mask I : ms)
        for (Mask J : ms)
            for (Mask K : ms) {
                auto tag = [&] {
                    return " for I=" + c.ms(I) + ", J=" + c.ms(J) +
                           ", K=" + c.ms(K);
                };
                const Mask a = c.col(c.col(I, J), K);
                const Mask b = c.col(I, c.mul(J, K));
                const Mask d = c.col(c.col(I, K), J);
                c.expect(a == b && b == d, [&] {
                    return "iterated colon identities fail" + tag();
                });
            }
    auto families = [&](const std::vector<Mask>& family) {
        Mask inter = c.full();
        Mask sum = c.zero();
        for (Mask m : family) {
            inter &= m;
            sum = c.add(sum, m);
        }
        for (Mask J : ms) {
            Mask lhs = c.col(inter, J);
            Mask rhs = c.full();
            for (Mask m : family) rhs &= c.col(m, J);
            c.expect(lhs == rhs, [&] {
                return "[∩Ik : J] != ∩[Ik : J] for J=" + c.ms(J);
            });
            Mask lhs2 = c.col(J, sum);
            Mask rhs2 = c.full();
            for (Mask m : family) rhs2 &= c.col(J, m);
            c.expect(lhs2 == rhs2, [&] {
                return "[I : ΣJk] != ∩[I : Jk] for I=" + c.ms(J);
            });
        }
    };
    for_each_subset(ms, 1, 3, families);
}

void prop_can2(Ctx& c) {
    const auto& ms = c.masks;
    for (Mask I : ms)
        for (Mask J : ms) {
            const Mask IJ = c.mul(I, J);
            c.expect(c.mul(c.col(IJ, I), I) == IJ, [&] {
                return "[IJ:I]I != IJ for I=" + c.ms(I) + ", J=" + c.ms(J);
            });
        }
    for (Mask I : ms) {
        if (I == c.zero()) continue;
        bool cancel = true;   // IJ = IK implies J = K
        bool order = true;    // IJ ⊆ IK implies J ⊆ K
        bool recovers = true; // [IJ : I] = J
        std::vector<Mask> products(ms.size());
        for (std::size_t j = 0; j < ms.size(); ++j)
            products[j] = c.mul(I, ms[j]);
        for (std::size_t j = 0; j < ms.size(); ++j) {
            if (c.col(products[j], I) != ms[j]) recovers = false;
            for (std::size_t k = 0; k < ms.size(); ++k) {
                if (j == k) continue;
                if (products[j] == products[k]) cancel = false;
                if (mask_subset(products[j], products[k]) &&
                    !mask_subset(ms[j], ms[k]))
                    order = false;
            }
        }
        c.expect(cancel == recovers && cancel == order, [&] {
            return "cancellation characterizations disagree on " + c.ms(I);
        });
    }
    // A multiplicatively cancelable element generates a cancellation ideal.
    Mask cancelable = c.S->cancelable_elements();
    for_each_elem(cancelable, [&](Elem s) {
        Ideal P = principal_ideal(c.S, s);
        if (P.is_zero()) return;
        c.expect(is_cancellation(P), [&] {
            return "principal ideal of cancelable element " +
                   c.S->element_name(s) + " is not a cancellation ideal";
        });
    });
}

void prop_radical_laws(Ctx& c) {
    const auto& ms = c.masks;
    const Mask full = c.full();
    for (Mask I : ms) {
        const Mask r = c.rad(I);
        auto tag = [&] { return " for I=" + c.ms(I); };
        c.expect(mask_subset(I, r), [&] { return "I not inside √I" + tag(); });
        c.expect(c.rad(r) == r, [&] { return "√√I != √I" + tag(); });
        c.expect((r == full) == (I == full),
                 [&] { return "√I=S fails to characterize I=S" + tag(); });
    }
    for (Mask I : ms)
        for (Mask J : ms) {
            auto tag = [&] { return " for I=" + c.ms(I) + ", J=" + c.ms(J); };
            const Mask a = c.rad(c.mul(I, J));
            const Mask b = c.rad(I & J);
            const Mask d = c.rad(I) & c.rad(J);
            c.expect(a == b && b == d, [&] {
                return "√(IJ), √(I∩J), √I∩√J disagree" + tag();
            });
            c.expect(c.rad(c.add(I, J)) == c.rad(c.add(c.rad(I), c.rad(J))),
                     [&] { return "√(I+J) != √(√I+√J)" + tag(); });
        }
}

/* ---------------------------------------------------------------- */
/* Spectrum                                                          */
/* ---------------------------------------------------------------- */

void prop_prime_containing(Ctx& c) {
    const auto& ms = c.masks;
    for (const Ideal& P : c.spec.primes) {
        const Mask p = P.bits();
        auto tuple_check = [&](const std::vector<Mask>& tuple) {
            bool any = false;
            Mask inter = c.full();
            Mask prod = c.full();
            for (Mask I : tuple) {
                if (mask_subset(I, p)) any = true;
                inter &= I;
                prod = c.mul(prod, I);
            }
            const bool got_inter = mask_subset(inter, p);
            const bool got_prod = mask_subset(prod, p);
            c.expect(any == got_inter && got_inter == got_prod, [&] {
                return "containment equivalence fails for prime " + c.ms(p);
            });
        };
        for (Mask a : ms) tuple_check({a});
        for (Mask a : ms)
            for (Mask b : ms) tuple_check({a, b});
        for (Mask a : ms)
            for (Mask b : ms)
                for (Mask d : ms) tuple_check({a, b, d});
    }
}

void prop_prime_mcset(Ctx& c) {
    for (Mask I : c.masks) {
        const bool prime = prime_mask(*c.S, I);
        const bool complement_mc = mc_set_mask(*c.S, c.full() & ~I);
        c.expect(prime == complement_mc, [&] {
            return "prime iff complement-MC fails at " + c.ms(I);
        });
    }
}

void prop_maxisprime1(Ctx& c) {
    for (Mask W : c.mcsets_all) {
        if (mask_has(W, c.S->zero())) {
            bool threw = false;
            try {
                maximal_disjoint_ideals(c.S, W);
            } catch (const Error& e) {
                threw = e.kind() == ErrorKind::empty_family;
            }
            c.expect(threw, [&] {
                return "0-containing MC-set " + c.ms(W) +
                       " did not raise EmptyFamily";
            });
            continue;
        }
        std::vector<Ideal> result;
        try {
            result = maximal_disjoint_ideals(c.S, W);
        } catch (const Error& e) {
            c.expect_str(false, "maximal_disjoint_ideals failed on " +
                                    c.ms(W) + ": " + e.what());
            continue;
        }
        std::vector<Mask> disjoint;
        for (Mask m : c.masks)
            if ((m & W) == 0) disjoint.push_back(m);
        for (const Ideal& R : result) {
            c.expect(prime_mask(*c.S, R.bits()), [&] {
                return "maximal disjoint ideal " + ideal_to_string(R) +
                       " is not prime for W=" + c.ms(W);
            });
            bool maximal = true;
            for (Mask other : disjoint)
                if (mask_proper_subset(R.bits(), other)) maximal = false;
            c.expect(maximal, [&] {
                return ideal_to_string(R) + " is not maximal disjoint from " +
                       c.ms(W);
            });
        }
        for (Mask m : disjoint) {
            bool covered = false;
            for (const Ideal& R : result)
                if (mask_subset(m, R.bits())) covered = true;
            c.expect(covered, [&] {
                return "disjoint ideal " + c.ms(m) +
                       " lies under no maximal one for W=" + c.ms(W);
            });
        }
    }
}

void prop_maxisprime2(Ctx& c) {
    c.expect(!c.spec.maximals.empty(),
             [] { return std::string("no maximal ideal found"); });
    for (const Ideal& m : c.spec.maximals)
        c.expect(is_prime(m), [&] {
            return "maximal ideal " + ideal_to_string(m) + " is not prime";
        });
    auto via_unit_mcset = maximal_disjoint_ideals(c.S, bit(c.S->one()));
    c.expect(via_unit_mcset.size() == c.spec.maximals.size() &&
                 std::equal(via_unit_mcset.begin(), via_unit_mcset.end(),
                            c.spec.maximals.begin()),
             [] {
                 return std::string(
                     "maximal ideals differ from the W={1} disjoint family");
             });
}

void prop_proper_subset_maximal(Ctx& c) {
    for (Mask I : c.masks) {
        if (I == c.full()) continue;
        bool under = false;
        for (const Ideal& m : c.spec.maximals)
            if (mask_subset(I, m.bits())) under = true;
        c.expect(under, [&] {
            return "proper ideal " + c.ms(I) + " is under no maximal ideal";
        });
    }
}

void prop_zariski(Ctx& c) {
    // Closed sets as membership vectors over the prime list; the prime
    // count is not bounded by the 64-element carrier cap.
    using VSet = std::vector<bool>;
    auto vset = [&](Mask I) {
        VSet v(c.spec.primes.size());
        for (std::size_t i = 0; i < c.spec.primes.size(); ++i)
            v[i] = mask_subset(I, c.spec.primes[i].bits());
        return v;
    };
    auto empty = [](const VSet& v) {
        return std::none_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    auto unite = [](VSet a, const VSet& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
        return a;
    };
    auto meet = [](VSet a, const VSet& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
        return a;
    };
    c.expect(vset(c.zero()) == VSet(c.spec.primes.size(), true),
             [] { return std::string("V(0) is not the whole spectrum"); });
    c.expect(empty(vset(c.full())),
             [] { return std::string("V(S) is not empty"); });
    for (Mask I : c.masks)
        c.expect(!empty(vset(I)) == (I != c.full()), [&] {
            return "V(I) emptiness disagrees with properness at " + c.ms(I);
        });
    for (Mask I : c.masks)
        for (Mask J : c.masks) {
            c.expect(unite(vset(I), vset(J)) == vset(I & J), [&] {
                return "V(I)∪V(J) != V(I∩J) for I=" + c.ms(I) +
                       ", J=" + c.ms(J);
            });
            c.expect(meet(vset(I), vset(J)) == vset(c.add(I, J)), [&] {
                return "V(I)∩V(J) != V(I+J) for I=" + c.ms(I) +
                       ", J=" + c.ms(J);
            });
        }
    auto triple = [&](const std::vector<Mask>& family) {
        VSet inter(c.spec.primes.size(), true);
        Mask sum = c.zero();
        for (Mask m : family) {
            inter = meet(std::move(inter), vset(m));
            sum = c.add(sum, m);
        }
        c.expect(inter == vset(sum), [&] {
            return std::string("∩V(Ik) != V(ΣIk) over a family of size ") +
                   std::to_string(family.size());
        });
    };
    for_each_subset(c.masks, 3, 3, triple);
}

void prop_krull(Ctx& c) {
    for (Mask I : c.masks) {
        Mask inter = c.full();
        for (const Ideal& P : c.spec.primes)
            if (mask_subset(I, P.bits())) inter &= P.bits();
        const Mask r = c.rad(I);
        c.expect(r == inter, [&] {
            return "√I != ∩V(I) at I=" + c.ms(I) + " (power scan " + c.ms(r) +
                   ", prime intersection " + c.ms(inter) + ")";
        });
        c.expect(is_ideal_mask(*c.S, r),
                 [&] { return "√I is not an ideal at I=" + c.ms(I); });
    }
}

void prop_units3(Ctx& c) {
    Mask covered = 0;
    for (const Ideal& m : c.spec.maximals) covered |= m.bits();
    const Mask units = c.S->units();
    for (Elem e = 0; e < c.S->size(); ++e)
        c.expect(mask_has(units, e) == !mask_has(covered, e), [&] {
            return "unit/maximal-cover disagreement at element " +
                   c.S->element_name(e);
        });
}

void prop_localsemiring1(Ctx& c) {
    const Mask nonunits = c.full() & ~c.S->units();
    const bool local = c.spec.maximals.size() == 1;
    c.expect(local == is_ideal_mask(*c.S, nonunits), [&] {
        return std::string("unique-maximal iff nonunits-ideal fails");
    });
    if (local)
        c.expect(c.spec.maximals.front().bits() == nonunits, [&] {
            return std::string("the unique maximal ideal is not S - U(S)");
        });
    const auto& L = *c.L;
    const bool zero_maximal = L.maximal_at(L.index_of(c.zero()));
    const bool semifield = c.S->units() == (c.full() & ~c.zero());
    c.expect(zero_maximal == semifield, [&] {
        return std::string("semifield iff (0) maximal fails");
    });
}

void prop_comaximal(Ctx& c) {
    const auto& ms = c.masks;
    for (Mask I : ms)
        for (Mask J : ms) {
            const bool com = c.add(I, J) == c.full();
            auto tag = [&] { return " for I=" + c.ms(I) + ", J=" + c.ms(J); };
            if (com)
                c.expect((I & J) == c.mul(I, J), [&] {
                    return "comaximal pair with I∩J != IJ" + tag();
                });
            else
                c.tally();
            const bool com_rad = c.add(c.rad(I), c.rad(J)) == c.full();
            c.expect(com == com_rad, [&] {
                return "comaximality differs between ideals and radicals" +
                       tag();
            });
        }
    auto family_check = [&](const std::vector<Mask>& family) {
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
                if (c.add(family[i], family[j]) != c.full()) return;
        Mask inter = c.full();
        Mask prod = c.full();
        for (Mask m : family) {
            inter &= m;
            prod = c.mul(prod, m);
        }
        c.expect(inter == prod, [&] {
            return std::string(
                       "pairwise comaximal family with ∩ != Π, size ") +
                   std::to_string(family.size());
        });
    };
    for_each_subset(ms, 2, 4, family_check);
    std::vector<Mask> maximal_masks;
    for (const Ideal& m : c.spec.maximals) maximal_masks.push_back(m.bits());
    for_each_subset(maximal_masks, 2, 4, [&](const std::vector<Mask>& family) {
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
                c.expect(c.add(family[i], family[j]) == c.full(), [&] {
                    return "distinct maximal ideals " + c.ms(family[i]) +
                           " and " + c.ms(family[j]) + " are not comaximal";
                });
        Mask inter = c.full();
        Mask prod = c.full();
        for (Mask m : family) {
            inter &= m;
            prod = c.mul(prod, m);
        }
        c.expect(inter == prod, [&] {
            return std::string("maximal family with ∩ != Π");
        });
    });
}

void prop_semilocal(Ctx& c) {
    c.expect(!c.spec.maximals.empty() &&
                 c.spec.maximals.size() <= c.masks.size(),
             [] { return std::string("maximal ideal family is not finite"); });
}

void prop_smallest_prime(Ctx& c) {
    const auto& L = *c.L;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (!L.primary_at(i)) continue;
        const Mask Q = L.masks()[i];
        const Mask r = c.rad(Q);
        c.expect(prime_mask(*c.S, r), [&] {
            return "radical of primary " + c.ms(Q) + " is not prime";
        });
        for (const Ideal& P : c.spec.primes)
            if (mask_subset(Q, P.bits()))
                c.expect(mask_subset(r, P.bits()), [&] {
                    return "radical of " + c.ms(Q) +
                           " is not the smallest prime over it";
                });
    }
}

void prop_primary1(Ctx& c) {
    const auto& L = *c.L;
    for (std::size_t i = 0; i < L.size(); ++i) {
        const Mask Q = L.masks()[i];
        if (Q == c.full()) continue;
        const Mask r = c.rad(Q);
        if (!L.contains(r) || !L.maximal_at(L.index_of(r))) continue;
        c.expect(L.primary_at(i), [&] {
            return "ideal " + c.ms(Q) + " with maximal radical is not primary";
        });
    }
    for (const Ideal& m : c.spec.maximals) {
        Mask power = m.bits();
        for (int k = 1; k <= 3; ++k) {
            c.expect(primary_mask(*c.S, power), [&] {
                return "power " + std::to_string(k) + " of maximal ideal " +
                       ideal_to_string(m) + " is not primary";
            });
            power = c.mul(power, m.bits());
        }
    }
}

void prop_primary2(Ctx& c) {
    const auto& L = *c.L;
    for (const Ideal& P : c.spec.primes) {
        std::vector<Mask> p_primary;
        for (std::size_t i = 0; i < L.size(); ++i)
            if (L.primary_at(i) && c.rad(L.masks()[i]) == P.bits())
                p_primary.push_back(L.masks()[i]);
        for_each_subset(p_primary, 1, 3, [&](const std::vector<Mask>& family) {
            Mask inter = c.full();
            for (Mask m : family) inter &= m;
            c.expect(primary_mask(*c.S, inter) && c.rad(inter) == P.bits(),
                     [&] {
                         return "intersection of P-primary ideals is not "
                                "P-primary for P=" + ideal_to_string(P);
                     });
        });
    }
}

void prop_primary3(Ctx& c) {
    const auto& L = *c.L;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (!L.primary_at(i)) continue;
        const Mask Q = L.masks()[i];
        const Mask P = c.rad(Q);
        for (Elem x = 0; x < c.S->size(); ++x) {
            const Mask qx = c.col(Q, close_to_ideal_mask(*c.S, bit(x)));
            auto tag = [&] {
                return " for Q=" + c.ms(Q) + ", x=" + c.S->element_name(x);
            };
            if (mask_has(Q, x))
                c.expect(qx == c.full(),
                         [&] { return "[Q:x] != S despite x in Q" + tag(); });
            else {
                c.expect(primary_mask(*c.S, qx) && c.rad(qx) == P, [&] {
                    return "[Q:x] is not P-primary" + tag();
                });
                if (!mask_has(P, x))
                    c.expect(qx == Q,
                             [&] { return "[Q:x] != Q despite x outside the radical" + tag(); });
            }
        }
    }
}

/* ---------------------------------------------------------------- */
/* Homomorphisms                                                     */
/* ---------------------------------------------------------------- */

void prop_hom_contraction(Ctx& c) {
    for (const Hom& f : c.homs) {
        const auto dst = f.dst();
        const auto& DL = dst->ideals();
        auto ideals = DL.all_ideals();
        for (const Ideal& J1 : ideals)
            for (const Ideal& J2 : ideals) {
                auto tag = [&] {
                    return " under " + hom_label(f) + " at J1=" +
                           ideal_to_string(J1) + ", J2=" + ideal_to_string(J2);
                };
                c.expect(mask_subset(
                             add_ideal_masks(*f.src(), contract(f, J1).bits(),
                                             contract(f, J2).bits()),
                             contract(f, add_ideals(J1, J2)).bits()),
                         [&] { return "(J1+J2)^c misses J1^c+J2^c" + tag(); });
                c.expect(contract(f, intersect_ideals(J1, J2)).bits() ==
                             (contract(f, J1).bits() & contract(f, J2).bits()),
                         [&] { return "(J1∩J2)^c != J1^c∩J2^c" + tag(); });
                c.expect(mask_subset(
                             mul_ideal_masks(*f.src(), contract(f, J1).bits(),
                                             contract(f, J2).bits()),
                             contract(f, mul_ideals(J1, J2)).bits()),
                         [&] { return "(J1J2)^c misses J1^c J2^c" + tag(); });
            }
        for (const Ideal& J : ideals)
            c.expect(contract(f, radical(J)).bits() ==
                         radical_mask(*f.src(), contract(f, J).bits()),
                     [&] {
                         return "(√J)^c != √(J^c) under " + hom_label(f) +
                                " at J=" + ideal_to_string(J);
                     });
        for (const Ideal& Q : ideals)
            if (is_prime(Q))
                c.expect(prime_mask(*f.src(), contract(f, Q).bits()), [&] {
                    return "contraction of prime " + ideal_to_string(Q) +
                           " is not prime under " + hom_label(f);
                });
    }
}

void prop_hom_extension(Ctx& c) {
    for (const Hom& f : c.homs) {
        auto ideals = f.src()->ideals().all_ideals();
        for (const Ideal& I1 : ideals)
            for (const Ideal& I2 : ideals) {
                auto tag = [&] {
                    return " under " + hom_label(f) + " at I1=" +
                           ideal_to_string(I1) + ", I2=" + ideal_to_string(I2);
                };
                c.expect(extend(f, add_ideals(I1, I2)).bits() ==
                             add_ideal_masks(*f.dst(), extend(f, I1).bits(),
                                             extend(f, I2).bits()),
                         [&] { return "(I1+I2)^e != I1^e+I2^e" + tag(); });
                c.expect(mask_subset(extend(f, intersect_ideals(I1, I2)).bits(),
                                     extend(f, I1).bits() &
                                         extend(f, I2).bits()),
                         [&] { return "(I1∩I2)^e escapes I1^e∩I2^e" + tag(); });
                c.expect(extend(f, mul_ideals(I1, I2)).bits() ==
                             mul_ideal_masks(*f.dst(), extend(f, I1).bits(),
                                             extend(f, I2).bits()),
                         [&] { return "(I1I2)^e != I1^e I2^e" + tag(); });
            }
        for (const Ideal& I : ideals)
            c.expect(mask_subset(extend(f, radical(I)).bits(),
                                 radical_mask(*f.dst(), extend(f, I).bits())),
                     [&] {
                         return "(√I)^e escapes √(I^e) under " + hom_label(f) +
                                " at I=" + ideal_to_string(I);
                     });
    }
}

void prop_hom_ec_ce(Ctx& c) {
    bool witness_found = false;
    std::string witness;
    for (const Hom& f : c.homs) {
        auto src_ideals = f.src()->ideals().all_ideals();
        auto dst_ideals = f.dst()->ideals().all_ideals();
        for (const Ideal& I : src_ideals) {
            const Ideal Ie = extend(f, I);
            const Ideal Iec = contract(f, Ie);
            auto tag = [&] {
                return " under " + hom_label(f) + " at I=" + ideal_to_string(I);
            };
            c.expect(mask_subset(I.bits(), Iec.bits()),
                     [&] { return "I escapes I^ec" + tag(); });
            c.expect(extend(f, Iec).bits() == Ie.bits(),
                     [&] { return "I^e != I^ece" + tag(); });
            if (!witness_found && is_prime(I) && !is_prime(Ie)) {
                witness_found = true;
                witness = "prime " + ideal_to_string(I) + " extends to non-prime " +
                          ideal_to_string(Ie) + " under " + hom_label(f);
            }
        }
        for (const Ideal& J : dst_ideals) {
            const Ideal Jc = contract(f, J);
            const Ideal Jce = extend(f, Jc);
            auto tag = [&] {
                return " under " + hom_label(f) + " at J=" + ideal_to_string(J);
            };
            c.expect(mask_subset(Jce.bits(), J.bits()),
                     [&] { return "J^ce escapes J" + tag(); });
            c.expect(contract(f, Jce).bits() == Jc.bits(),
                     [&] { return "J^c != J^cec" + tag(); });
        }
    }
    if (witness_found)
        c.note(witness);
    else
        c.note("no fixture prime extends to a non-prime ideal here");
}

void prop_kernel_example(Ctx& c) {
    // The chain {0,s,1} maps onto the Boolean semiring by s,1 -> 1; the
    // kernel is (0) although the map is two-to-one on {s,1}.
    auto B = gallery_find("B");
    std::vector<Elem> map(3);
    map[c.S->element_index("0").value()] = B->element_index("0").value();
    map[c.S->element_index("s").value()] = B->element_index("1").value();
    map[c.S->element_index("1").value()] = B->element_index("1").value();
    Hom gamma = Hom::create(c.S, B, std::move(map));
    c.expect(kernel(gamma).is_zero(),
             [] { return std::string("kernel of the collapse map is not (0)"); });
    c.expect(!gamma.injective(),
             [] { return std::string("the collapse map is injective"); });
}

/* ---------------------------------------------------------------- */
/* Localization                                                      */
/* ---------------------------------------------------------------- */

void prop_fraction_equivalence(Ctx& c) {
    for (Mask W : c.mcsets_loc) {
        const long pair_count =
            static_cast<long>(c.S->size()) * mask_count(W);
        try {
            const Localization& L = c.loc(W);
            (void)L;
            // The constructor verified the relation is an equivalence and
            // both operations are representative independent over every
            // pair of pairs.
            c.tally(pair_count * pair_count);
            c.expect(true, [] { return std::string(); });
        } catch (const Error& e) {
            c.expect_str(false, "localization at " + c.ms(W) +
                                    " failed: " + e.what());
        }
    }
    // MC-sets containing 0 admit no semiring of fractions (t = 0 relates
    // every pair), but the relation itself must still be an equivalence,
    // and localizing must refuse cleanly.
    for (Mask W : c.mcsets_all) {
        if (!mask_has(W, c.S->zero())) continue;
        const auto u = mask_elems(W);
        const std::size_t pairs =
            static_cast<std::size_t>(c.S->size()) * u.size();
        auto related = [&](std::size_t p, std::size_t q) {
            const Elem x = static_cast<Elem>(p / u.size());
            const Elem uu = u[p % u.size()];
            const Elem y = static_cast<Elem>(q / u.size());
            const Elem v = u[q % u.size()];
            for (Elem t : u)
                if (c.S->mul(t, c.S->mul(v, x)) ==
                    c.S->mul(t, c.S->mul(uu, y)))
                    return true;
            return false;
        };
        bool equivalence = true;
        for (std::size_t p = 0; p < pairs && equivalence; ++p) {
            if (!related(p, p)) equivalence = false;
            for (std::size_t q = 0; q < pairs && equivalence; ++q) {
                if (related(p, q) != related(q, p)) equivalence = false;
                for (std::size_t r = 0; r < pairs; ++r)
                    if (related(p, q) && related(q, r) && !related(p, r)) {
                        equivalence = false;
                        break;
                    }
            }
        }
        c.expect(equivalence, [&] {
            return "fraction relation at " + c.ms(W) +
                   " is not an equivalence";
        });
        bool refused = false;
        try {
            localize(c.S, W);
        } catch (const Error& e) {
            refused = e.kind() == ErrorKind::invalid_mc_set;
        }
        c.expect(refused, [&] {
            return "localization at 0-containing " + c.ms(W) +
                   " was not refused";
        });
    }
}

void prop_localization_ideals(Ctx& c) {
    for (Mask W : c.mcsets_loc) {
        const Localization& L = c.loc(W);
        std::vector<std::pair<Mask, Mask>> localized;
        for (Mask I : c.masks) {
            Ideal lifted = localize_ideal(L, Ideal(c.S, I));
            c.expect(lifted == extend(L.gamma(), Ideal(c.S, I)), [&] {
                return "I_U != I*S_U at I=" + c.ms(I) + ", U=" + c.ms(W);
            });
            localized.push_back({I, lifted.bits()});
        }
        const auto Q = L.quotient();
        for (const auto& [I, IU] : localized)
            for (const auto& [J, JU] : localized) {
                auto tag = [&] {
                    return " for I=" + c.ms(I) + ", I'=" + c.ms(J) +
                           ", U=" + c.ms(W);
                };
                if (mask_subset(I, J))
                    c.expect(mask_subset(IU, JU), [&] {
                        return "localization is not monotone" + tag();
                    });
                else
                    c.tally();
                Mask sum_then = localize_ideal(L, Ideal(c.S, c.add(I, J))).bits();
                c.expect(sum_then == add_ideal_masks(*Q, IU, JU),
                         [&] { return "(I+I')_U != I_U+I'_U" + tag(); });
                Mask inter_then = localize_ideal(L, Ideal(c.S, I & J)).bits();
                c.expect(inter_then == (IU & JU),
                         [&] { return "(I∩I')_U != I_U∩I'_U" + tag(); });
            }
    }
}

void prop_extended_ideal(Ctx& c) {
    for (Mask W : c.mcsets_loc) {
        const Localization& L = c.loc(W);
        for (const Ideal& J : L.quotient()->ideals().all_ideals()) {
            Ideal back = extend(L.gamma(), contract(L.gamma(), J));
            c.expect(back == J, [&] {
                return "ideal " + ideal_to_string(J) +
                       " of the quotient is not extended, U=" + c.ms(W);
            });
        }
    }
}

void prop_primes_of_localization(Ctx& c) {
    for (Mask W : c.mcsets_loc) {
        try {
            auto pairs = prime_correspondence(c.loc(W));
            c.tally(static_cast<long>(pairs.size()));
            c.expect(true, [] { return std::string(); });
        } catch (const Error& e) {
            c.expect_str(false, "prime correspondence failed at U=" +
                                    c.ms(W) + ": " + e.what());
        }
    }
}

void prop_primes_of_localization_at_p(Ctx& c) {
    for (const Ideal& P : c.spec.primes) {
        Localization L = localize_at_prime(c.S, P);
        auto pairs = prime_correspondence(L);
        std::vector<Mask> lhs;
        for (const auto& pr : pairs) lhs.push_back(pr.base_prime.bits());
        std::vector<Mask> rhs;
        for (const Ideal& Q : c.spec.primes)
            if (mask_subset(Q.bits(), P.bits())) rhs.push_back(Q.bits());
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        c.expect(lhs == rhs, [&] {
            return "primes of S_P differ from primes inside P=" +
                   ideal_to_string(P);
        });
    }
}

void prop_localize_at_prime(Ctx& c) {
    for (const Ideal& P : c.spec.primes) {
        try {
            Localization L = localize_at_prime(c.S, P);
            auto m = is_local(L.quotient());
            c.expect(m.has_value() && *m == localize_ideal(L, P), [&] {
                return "S_P is not local with maximal ideal P S_P at P=" +
                       ideal_to_string(P);
            });
        } catch (const Error& e) {
            c.expect_str(false, "localization at prime " + ideal_to_string(P) +
                                    " failed: " + e.what());
        }
    }
}

void prop_gamma_kernel(Ctx& c) {
    for (Mask W : c.mcsets_loc) {
        const Localization& L = c.loc(W);
        for (Elem a = 0; a < c.S->size(); ++a) {
            if (L.gamma()(a) != L.quotient()->zero()) {
                c.tally();
                continue;
            }
            bool killed = false;
            for (Elem t : L.mcset_elems())
                if (c.S->mul(t, a) == c.S->zero()) killed = true;
            c.expect(killed, [&] {
                return "gamma kills " + c.S->element_name(a) +
                       " but no MC member does, U=" + c.ms(W);
            });
        }
    }
}

void prop_iec_witness(Ctx& c) {
    bool found = false;
    std::string witness;
    for (Mask W : c.mcsets_loc) {
        const Localization& L = c.loc(W);
        for (Mask I : c.masks) {
            c.tally();
            Mask iec = contract(L.gamma(), localize_ideal(L, Ideal(c.S, I))).bits();
            if (!found && iec != I) {
                found = true;
                witness = "I^ec = " + c.ms(iec) + " strictly contains I = " +
                          c.ms(I) + " at U=" + c.ms(W);
            }
        }
    }
    c.note(found ? witness : "every ideal satisfies I^ec = I here");
}

/* ---------------------------------------------------------------- */
/* Semimodules                                                       */
/* ---------------------------------------------------------------- */

void prop_semimodule_localization(Ctx& c) {
    for (const auto& M : c.modules) {
        auto submodules = enumerate_submodules(*M);
        for (Mask W : c.mcsets_small) {
            const Localization& L = c.loc(W);
            ModuleLocalization ML = localize_module(M, L);
            std::vector<std::pair<Mask, Mask>> localized;
            for (Mask K : submodules)
                localized.push_back({K, ML.localize_submodule(K)});
            for (const auto& [K, KU] : localized)
                for (const auto& [N, NU] : localized) {
                    auto tag = [&] {
                        return " in module \"" + M->name() + "\" at U=" +
                               c.ms(W);
                    };
                    if (mask_subset(K, N))
                        c.expect(mask_subset(KU, NU), [&] {
                            return "module localization not monotone" + tag();
                        });
                    else
                        c.tally();
                    c.expect(ML.localize_submodule(submodule_sum(*M, K, N)) ==
                                 submodule_sum(*ML.quotient, KU, NU),
                             [&] { return "(K+L)_U != K_U+L_U" + tag(); });
                    c.expect(ML.localize_submodule(K & N) == (KU & NU),
                             [&] { return "(K∩L)_U != K_U∩L_U" + tag(); });
                }
            for (Mask I : c.masks)
                for (const auto& [N, NU] : localized) {
                    Mask IU = localize_ideal(L, Ideal(c.S, I)).bits();
                    c.expect(ML.localize_submodule(ideal_action(*M, I, N)) ==
                                 ideal_action(*ML.quotient, IU, NU),
                             [&] {
                                 return "(IL)_U != I_U L_U in module \"" +
                                        M->name() + "\" at U=" + c.ms(W);
                             });
                }
        }
    }
}

void prop_local_global_zero(Ctx& c) {
    for (const auto& M : c.modules) {
        try {
            auto r = is_zero_locally(M);
            c.expect(r.module_zero == r.zero_at_all_primes &&
                         r.module_zero == r.zero_at_all_maximals,
                     [&] {
                         return "zero-ness conditions disagree on \"" +
                                M->name() + "\"";
                     });
            if (!r.value()) {
                bool ok = r.witness_elem && r.witness_maximal &&
                          mask_subset(annihilator(*M, *r.witness_elem).bits(),
                                      *r.witness_maximal);
                c.expect(ok, [&] {
                    return "missing or wrong nonzero witness for \"" +
                           M->name() + "\"";
                });
            }
        } catch (const Error& e) {
            c.expect_str(false, "local-global zero failed on \"" + M->name() +
                                    "\": " + e.what());
        }
    }
}

void prop_annihilator(Ctx& c) {
    for (const auto& M : c.modules)
        for (Elem x = 0; x < M->size(); ++x) {
            Ideal ann = annihilator(*M, x);
            c.expect(is_ideal_mask(*c.S, ann.bits()), [&] {
                return "Ann(x) is not an ideal for x=" + std::to_string(x) +
                       " in \"" + M->name() + "\"";
            });
        }
}

/* ---------------------------------------------------------------- */
/* Decomposition                                                     */
/* ---------------------------------------------------------------- */

void prop_irreducible_separating(Ctx& c) {
    const auto& L = *c.L;
    for (Mask I : c.masks) {
        for (Elem s = 0; s < c.S->size(); ++s) {
            if (mask_has(I, s)) continue;
            Ideal J = irreducible_separating(Ideal(c.S, I), s);
            bool ok = mask_subset(I, J.bits()) && !J.contains(s) &&
                      L.irreducible_at(L.index_of(J.bits()));
            for (Mask other : c.masks)
                if (mask_proper_subset(J.bits(), other) &&
                    mask_subset(I, other) && !mask_has(other, s))
                    ok = false;
            c.expect(ok, [&] {
                return "separating ideal for I=" + c.ms(I) + ", s=" +
                       c.S->element_name(s) + " is wrong";
            });
        }
    }
}

void prop_irreducible_intersection(Ctx& c) {
    const auto& L = *c.L;
    for (Mask I : c.masks) {
        if (I == c.full()) continue;
        Mask inter = c.full();
        for (std::size_t i = 0; i < L.size(); ++i)
            if (L.irreducible_at(i) && mask_subset(I, L.masks()[i]))
                inter &= L.masks()[i];
        c.expect(inter == I, [&] {
            return "I differs from the intersection of irreducibles above "
                   "it at I=" + c.ms(I);
        });
    }
}

void prop_irreducible_decomposition(Ctx& c) {
    const auto& L = *c.L;
    for (Mask I : c.masks) {
        if (I == c.full()) continue;
        Decomposition D = irreducible_decomposition(Ideal(c.S, I));
        Mask inter = c.full();
        bool comps_ok = true;
        for (const Ideal& Q : D.components) {
            inter &= Q.bits();
            if (!L.irreducible_at(L.index_of(Q.bits()))) comps_ok = false;
        }
        c.expect(comps_ok && inter == I, [&] {
            return "irreducible decomposition of " + c.ms(I) + " is wrong";
        });
    }
}

void prop_subirreprimary(Ctx& c) {
    const auto& L = *c.L;
    for (std::size_t i = 0; i < L.size(); ++i) {
        const Mask I = L.masks()[i];
        if (I == c.full() || !L.irreducible_at(i)) continue;
        if (!L.subtractive_at(i)) {
            c.tally();
            continue;
        }
        c.expect(L.primary_at(i), [&] {
            return "subtractive irreducible ideal " + c.ms(I) +
                   " is not primary";
        });
    }
}

void prop_primary_decomposition(Ctx& c) {
    const bool subtractive_ring = c.L->all_subtractive();
    for (Mask I : c.masks) {
        if (I == c.full()) continue;
        try {
            Decomposition D = primary_decomposition(Ideal(c.S, I));
            Mask inter = c.full();
            bool comps_ok = true;
            for (const Ideal& Q : D.components) {
                inter &= Q.bits();
                if (!primary_mask(*c.S, Q.bits())) comps_ok = false;
            }
            c.expect(comps_ok && inter == I, [&] {
                return "primary decomposition of " + c.ms(I) + " is wrong";
            });
            if (subtractive_ring)
                c.expect(!D.repaired, [&] {
                    return "subtractive semiring needed the repair path at " +
                           c.ms(I);
                });
            else if (D.repaired)
                c.note("repair path used at I=" + c.ms(I));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::no_primary_decomposition &&
                !subtractive_ring) {
                c.tally();
                c.note("no primary decomposition for I=" + c.ms(I) +
                       " (semiring is not subtractive)");
            } else {
                c.expect_str(false, "primary decomposition failed at I=" +
                                        c.ms(I) + ": " + e.what());
            }
        }
    }
}

void prop_minimal_decomposition(Ctx& c) {
    for (Mask I : c.masks) {
        if (I == c.full()) continue;
        std::optional<Decomposition> D;
        try {
            D = primary_decomposition(Ideal(c.S, I));
        } catch (const Error&) {
            c.tally();
            continue;
        }
        Decomposition M = minimize(*D);
        Mask inter = c.full();
        for (const Ideal& Q : M.components) inter &= Q.bits();
        bool rad_distinct = true;
        for (std::size_t i = 0; i < M.components.size(); ++i)
            for (std::size_t j = i + 1; j < M.components.size(); ++j)
                if (c.rad(M.components[i].bits()) ==
                    c.rad(M.components[j].bits()))
                    rad_distinct = false;
        bool irredundant = true;
        for (std::size_t i = 0; i < M.components.size() && M.components.size() > 1; ++i) {
            Mask others = c.full();
            for (std::size_t j = 0; j < M.components.size(); ++j)
                if (j != i) others &= M.components[j].bits();
            if (mask_subset(others, M.components[i].bits())) irredundant = false;
        }
        c.expect(inter == I && rad_distinct && irredundant && M.minimal, [&] {
            return "minimization of " + c.ms(I) + " broke an invariant";
        });
    }
}

void prop_minimal_primes(Ctx& c) {
    for (Mask I : c.masks) {
        if (I == c.full()) continue;
        std::vector<Ideal> mp;
        try {
            mp = minimal_primes(Ideal(c.S, I));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::no_primary_decomposition) {
                c.tally();
                continue;
            }
            c.expect_str(false, "minimal primes failed at I=" + c.ms(I) +
                                    ": " + e.what());
            continue;
        }
        // Verified inside against min V(I); here the first statement: every
        // prime over I contains a minimal one.
        for (const Ideal& P : v_of(Ideal(c.S, I))) {
            bool over = false;
            for (const Ideal& Q : mp)
                if (mask_subset(Q.bits(), P.bits())) over = true;
            c.expect(over, [&] {
                return "prime " + ideal_to_string(P) +
                       " contains no minimal prime of " + c.ms(I);
            });
        }
    }
}

void prop_belonging_primes(Ctx& c) {
    // Diagnostic: compare the radical sets of every minimal primary
    // decomposition with at most four components.
    const auto& L = *c.L;
    std::vector<Mask> primaries;
    for (std::size_t i = 0; i < L.size(); ++i)
        if (L.primary_at(i)) primaries.push_back(L.masks()[i]);
    bool disagreement = false;
    std::string detail;
    for (Mask I : c.masks) {
        if (I == c.full()) continue;
        c.tally();
        std::vector<std::vector<Mask>> radical_sets;
        for_each_subset(primaries, 1, 4, [&](const std::vector<Mask>& fam) {
            Mask inter = c.full();
            for (Mask m : fam) inter &= m;
            if (inter != I) return;
            // Minimality: distinct radicals, no redundant component.
            std::vector<Mask> rads;
            for (Mask m : fam) rads.push_back(c.rad(m));
            std::vector<Mask> sorted_rads = rads;
            std::sort(sorted_rads.begin(), sorted_rads.end());
            if (std::adjacent_find(sorted_rads.begin(), sorted_rads.end()) !=
                sorted_rads.end())
                return;
            for (std::size_t i2 = 0; i2 < fam.size() && fam.size() > 1; ++i2) {
                Mask others = c.full();
                for (std::size_t j = 0; j < fam.size(); ++j)
                    if (j != i2) others &= fam[j];
                if (mask_subset(others, fam[i2])) return;
            }
            radical_sets.push_back(std::move(sorted_rads));
        });
        std::sort(radical_sets.begin(), radical_sets.end());
        radical_sets.erase(
            std::unique(radical_sets.begin(), radical_sets.end()),
            radical_sets.end());
        if (radical_sets.size() > 1 && !disagreement) {
            disagreement = true;
            detail = "two minimal decompositions of " + c.ms(I) +
                     " have different prime sets";
        }
    }
    c.note(disagreement
               ? detail
               : "belonging primes agree across all minimal decompositions");
}

void prop_irr_nonsub_nonprimary(Ctx& c) {
    const auto& L = *c.L;
    bool found = false;
    std::string detail;
    for (std::size_t i = 0; i < L.size(); ++i) {
        const Mask I = L.masks()[i];
        if (I == c.full()) continue;
        c.tally();
        if (L.irreducible_at(i) && !L.subtractive_at(i) && !L.primary_at(i) &&
            !found) {
            found = true;
            detail = "irreducible non-subtractive non-primary ideal: " + c.ms(I);
        }
    }
    c.note(found ? detail
                 : "no irreducible non-subtractive non-primary ideal here");
}

/* ---------------------------------------------------------------- */
/* Registry                                                          */
/* ---------------------------------------------------------------- */

struct Proposition {
    const char* id;
    const char* summary;
    void (*run)(Ctx&);
    bool (*applies)(const Semiring&);
};

bool always(const Semiring&) { return true; }
bool only_l3(const Semiring& S) { return S.name() == "L3"; }

const std::vector<Proposition>& registry() {
    static const std::vector<Proposition> props = {
        {"ideal-arithmetic",
         "sum and product of ideals form a commutative structure with the "
         "expected identities and containments",
         prop_ideal_arithmetic, always},
        {"ideal-lattice",
         "Id(S) is a bounded lattice under inclusion and an additively "
         "idempotent semiring; products distribute over arbitrary sums",
         prop_ideal_lattice, always},
        {"colon-laws", "colon ideals obey the containment and iteration laws",
         prop_colon_laws, always},
        {"can2",
         "the three cancellation-ideal characterizations coincide and "
         "[IJ:I]I = IJ always holds",
         prop_can2, always},
        {"radical-laws",
         "radicals are idempotent, multiplicative over intersections and "
         "detect the unit ideal",
         prop_radical_laws, always},
        {"primecontainingideals",
         "a prime contains some member of a finite ideal family iff it "
         "contains the intersection iff it contains the product",
         prop_prime_containing, always},
        {"prime-mcset",
         "an ideal is prime exactly when its complement is multiplicatively "
         "closed",
         prop_prime_mcset, always},
        {"maxisprime1",
         "maximal ideals disjoint from an MC-set are prime, and the family "
         "covers every disjoint ideal",
         prop_maxisprime1, always},
        {"maxisprime2",
         "maximal ideals exist, are prime, and arise from the MC-set {1}",
         prop_maxisprime2, always},
        {"propersubsetmaximal",
         "every proper ideal lies inside a maximal ideal",
         prop_proper_subset_maximal, always},
        {"zariskitopology",
         "closed sets V(I) obey the union, intersection and boundary laws",
         prop_zariski, always},
        {"krullintersectionprimes",
         "the radical of I equals the intersection of the primes over I",
         prop_krull, always},
        {"units3", "the units are exactly the complement of the union of "
                   "the maximal ideals",
         prop_units3, always},
        {"localsemiring1",
         "a unique maximal ideal exists iff the non-units form an ideal; "
         "semifields are exactly the semirings where (0) is maximal",
         prop_localsemiring1, always},
        {"comaximal",
         "comaximal ideals multiply to their intersection, in families too, "
         "and comaximality is a radical invariant",
         prop_comaximal, always},
        {"artinianisemilocal", "the maximal ideal family is finite",
         prop_semilocal, always},
        {"smallest-prime",
         "the radical of a primary ideal is the smallest prime over it",
         prop_smallest_prime, always},
        {"primary1",
         "ideals with maximal radical are primary; powers of maximal ideals "
         "are primary",
         prop_primary1, always},
        {"primary2",
         "finite intersections of P-primary ideals are P-primary",
         prop_primary2, always},
        {"primary3", "colon by an element interacts with a P-primary ideal "
                     "according to the membership of the element",
         prop_primary3, always},
        {"hom-contraction",
         "contraction preserves intersections and radicals, dominates sums "
         "and products, and pulls primes back to primes",
         prop_hom_contraction, always},
        {"hom-extension",
         "extension preserves sums and products and respects intersections "
         "and radicals by containment",
         prop_hom_extension, always},
        {"hom-ec-ce",
         "extension and contraction satisfy I ⊆ I^ec, J ⊇ J^ce and the "
         "triple-composition identities",
         prop_hom_ec_ce, always},
        {"kernel-example",
         "the collapse of the three-element chain onto the Booleans has "
         "kernel (0) without being injective",
         prop_kernel_example, only_l3},
        {"fraction-equivalence",
         "the fraction relation is a verified equivalence and both quotient "
         "operations are representative independent",
         prop_fraction_equivalence, always},
        {"localization-ideals",
         "localizing ideals agrees with extension along gamma and commutes "
         "with sums and intersections",
         prop_localization_ideals, always},
        {"extendedideal", "every ideal of a localization is extended",
         prop_extended_ideal, always},
        {"primesoflocalization",
         "primes of the localization correspond bijectively to primes "
         "disjoint from the MC-set",
         prop_primes_of_localization, always},
        {"primesoflocalizationatP",
         "primes of the local semiring at P correspond to the primes "
         "inside P",
         prop_primes_of_localization_at_p, always},
        {"localize-at-prime",
         "localizing at a prime yields a local semiring with maximal ideal "
         "P S_P whose complement is the units",
         prop_localize_at_prime, always},
        {"gamma-kernel",
         "gamma sends an element to zero only when some MC member "
         "annihilates it",
         prop_gamma_kernel, always},
        {"iec-witness",
         "search for an ideal with I^ec different from I (diagnostic)",
         prop_iec_witness, always},
        {"semimodule-localization",
         "module localization is monotone and commutes with sums, "
         "intersections and ideal action",
         prop_semimodule_localization, always},
        {"local-global-zero",
         "a module vanishes iff it vanishes at all primes iff at all "
         "maximal ideals",
         prop_local_global_zero, always},
        {"annihilator-ideal", "annihilators of module elements are ideals",
         prop_annihilator, always},
        {"irreducibleideals",
         "for s outside I some maximal ideal containing I avoids s and is "
         "irreducible",
         prop_irreducible_separating, always},
        {"irreducible-intersection",
         "every proper ideal is the intersection of the irreducible ideals "
         "containing it",
         prop_irreducible_intersection, always},
        {"irreducible-decomposition",
         "every proper ideal is a finite intersection of irreducible ideals",
         prop_irreducible_decomposition, always},
        {"subirreprimary",
         "subtractive irreducible proper ideals are primary",
         prop_subirreprimary, always},
        {"primarydecomposition",
         "in subtractive semirings every proper ideal is a finite "
         "intersection of primary ideals",
         prop_primary_decomposition, always},
        {"minimal-decomposition",
         "minimization keeps the intersection, separates radicals and "
         "removes redundant components",
         prop_minimal_decomposition, always},
        {"minimal-primes",
         "the minimal primes of a decomposition are the minimal primes over "
         "the ideal, and every prime over it contains one",
         prop_minimal_primes, always},
        {"belonging-primes",
         "search for minimal decompositions with different prime sets "
         "(diagnostic)",
         prop_belonging_primes, always},
        {"irr-nonsub-nonprimary",
         "search for irreducible ideals that are neither subtractive nor "
         "primary (diagnostic)",
         prop_irr_nonsub_nonprimary, always},
    };
    return props;
}

std::vector<Mask> structural_mcsets(const Semiring& S, const Spectrum& spec,
                                    int max_size) {
    std::vector<Mask> out = mc_sets_up_to(S, max_size);
    for (const Ideal& P : spec.primes) out.push_back(S.all() & ~P.bits());
    out.push_back(S.units());
    out.push_back(S.cancelable_elements());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Hom> hom_fixtures(const SemiringPtr& S) {
    std::vector<Hom> out{identity_hom(S)};
    const std::string& name = S->name();
    auto B = gallery_find("B");
    if (name == "L3") {
        std::vector<Elem> map(3);
        map[S->element_index("0").value()] = 0;
        map[S->element_index("s").value()] = 1;
        map[S->element_index("1").value()] = 1;
        out.push_back(Hom::create(S, B, std::move(map)));
    }
    if (name == "BxB") {
        for (int comp = 0; comp < 2; ++comp) {
            std::vector<Elem> map(static_cast<std::size_t>(S->size()));
            for (Elem e = 0; e < S->size(); ++e) {
                const std::string& n = S->element_name(e);
                // Names look like "(x,y)".
                const std::size_t comma = n.find(',');
                const std::string part =
                    comp == 0 ? n.substr(1, comma - 1)
                              : n.substr(comma + 1, n.size() - comma - 2);
                map[e] = B->element_index(part).value();
            }
            out.push_back(Hom::create(S, B, std::move(map)));
        }
    }
    if (name == "B") {
        auto L3 = gallery_find("L3");
        std::vector<Elem> map(2);
        map[0] = L3->element_index("0").value();
        map[1] = L3->element_index("1").value();
        out.push_back(Hom::create(S, L3, std::move(map)));
    }
    return out;
}

std::vector<SemimodulePtr> module_fixtures(const SemiringPtr& S) {
    std::vector<SemimodulePtr> out;
    out.push_back(regular_module(S));
    out.push_back(zero_module(S));
    if (S->size() <= 3)
        out.push_back(module_direct_sum(out[0], out[0]));
    return out;
}

} // namespace

const std::vector<std::string>& proposition_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& p : registry()) out.emplace_back(p.id);
        return out;
    }();
    return ids;
}

const char* proposition_summary(const std::string& id) {
    for (const auto& p : registry())
        if (id == p.id) return p.summary;
    fail(ErrorKind::unknown_proposition, "unknown proposition id \"" + id + "\"");
}

bool proposition_applies(const std::string& id, const Semiring& S) {
    for (const auto& p : registry())
        if (id == p.id) return p.applies(S);
    fail(ErrorKind::unknown_proposition, "unknown proposition id \"" + id + "\"");
}

CheckReport run_checks(const SemiringPtr& S,
                       const std::vector<std::string>& selection,
                       std::uint64_t seed) {
    const auto& props = registry();
    // "krull-radical" is accepted as a short selector for the same law.
    auto resolve = [](const std::string& id) -> std::string {
        return id == "krull-radical" ? "krullintersectionprimes" : id;
    };
    std::vector<const Proposition*> selected;
    if (selection.empty()) {
        for (const auto& p : props)
            if (p.applies(*S)) selected.push_back(&p);
    } else {
        for (const auto& raw_id : selection) {
            const std::string id = resolve(raw_id);
            const Proposition* found = nullptr;
            for (const auto& p : props)
                if (id == p.id) found = &p;
            if (!found)
                fail(ErrorKind::unknown_proposition,
                     "unknown proposition id \"" + raw_id + "\"");
            selected.push_back(found);
        }
    }

    const auto start = std::chrono::steady_clock::now();
    Ctx ctx;
    ctx.S = S;
    ctx.L = &S->ideals();
    ctx.masks = ctx.L->masks();
    ctx.spec = spectrum_of(S);
    ctx.mcsets_all = structural_mcsets(*S, ctx.spec, 4);
    for (Mask W : ctx.mcsets_all) {
        if (!mask_has(W, S->zero())) ctx.mcsets_loc.push_back(W);
        if (!mask_has(W, S->zero()) && mask_count(W) <= 3)
            ctx.mcsets_small.push_back(W);
    }
    ctx.homs = hom_fixtures(S);
    ctx.modules = module_fixtures(S);

    if (seed != 0) {
        // Iteration order must not matter; reports are canonicalized below.
        std::mt19937_64 rng(seed);
        std::shuffle(ctx.mcsets_all.begin(), ctx.mcsets_all.end(), rng);
        std::shuffle(ctx.mcsets_loc.begin(), ctx.mcsets_loc.end(), rng);
        std::shuffle(ctx.mcsets_small.begin(), ctx.mcsets_small.end(), rng);
        std::shuffle(ctx.homs.begin(), ctx.homs.end(), rng);
    }

    CheckReport report;
    report.semiring = S->name().empty() ? "(unnamed)" : S->name();
    for (const Proposition* p : selected) {
        PropositionResult result;
        result.id = p->id;
        result.summary = p->summary;
        ctx.out = &result;
        if (p->applies(*S)) {
            try {
                p->run(ctx);
            } catch (const Error& e) {
                result.failures.push_back(std::string("unexpected error: ") +
                                          e.what());
            }
        } else {
            result.notes.push_back("not applicable to this semiring");
        }
        std::sort(result.failures.begin(), result.failures.end());
        std::sort(result.notes.begin(), result.notes.end());
        report.propositions.push_back(std::move(result));
    }
    report.elapsed_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return report;
}

} // namespace sri
