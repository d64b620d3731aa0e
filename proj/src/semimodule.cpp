#include "sri/semimodule.hpp"

#include <algorithm>
#include <sstream>

#include "sri/spectrum.hpp"

namespace sri {

namespace {

bool module_table_shaped(const std::vector<std::vector<Elem>>& t, int rows,
                         int cols, int range) {
    if (static_cast<int>(t.size()) != rows) return false;
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != cols) return false;
        for (Elem e : row)
            if (e < 0 || e >= range) return false;
    }
    return true;
}

} // namespace

std::vector<ModuleViolation> check_module(const Semiring& ring,
                                          const ModuleTableData& data) {
    std::vector<ModuleViolation> out;
    const int k = data.size;
    if (k < 1) {
        out.push_back({"shape", {}, "module size must be at least 1"});
        return out;
    }
    if (!module_table_shaped(data.add, k, k, k) ||
        !module_table_shaped(data.action, ring.size(), k, k) ||
        data.zero < 0 || data.zero >= k) {
        out.push_back({"shape", {}, "tables are not well shaped"});
        return out;
    }
    const auto& A = data.add;
    const auto& T = data.action;
    const Elem z = data.zero;
    auto record = [&](const char* law, std::vector<Elem> w, std::string d) {
        out.push_back({law, std::move(w), std::move(d)});
    };

    for (Elem a = 0; a < k; ++a)
        for (Elem b = 0; b < k; ++b)
            for (Elem c = 0; c < k; ++c)
                if (A[A[a][b]][c] != A[a][A[b][c]]) {
                    record("add-associativity", {a, b, c},
                           "(m+n)+p differs from m+(n+p)");
                    goto assoc_done;
                }
assoc_done:
    for (Elem a = 0; a < k; ++a)
        for (Elem b = a + 1; b < k; ++b)
            if (A[a][b] != A[b][a]) {
                record("add-commutativity", {a, b}, "m+n differs from n+m");
                goto comm_done;
            }
comm_done:
    for (Elem a = 0; a < k; ++a)
        if (A[z][a] != a) {
            record("add-identity", {a}, "0+m differs from m");
            break;
        }
    for (Elem s = 0; s < ring.size(); ++s)
        for (Elem m = 0; m < k; ++m)
            for (Elem n = 0; n < k; ++n)
                if (T[s][A[m][n]] != A[T[s][m]][T[s][n]]) {
                    record("action-distributes-over-module-add", {s, m, n},
                           "s(m+n) differs from sm+sn");
                    goto dist1_done;
                }
dist1_done:
    for (Elem s = 0; s < ring.size(); ++s)
        for (Elem t = 0; t < ring.size(); ++t)
            for (Elem m = 0; m < k; ++m) {
                if (T[ring.add(s, t)][m] != A[T[s][m]][T[t][m]]) {
                    record("action-distributes-over-scalar-add", {s, t, m},
                           "(s+t)m differs from sm+tm");
                    goto dist2_done;
                }
            }
dist2_done:
    for (Elem s = 0; s < ring.size(); ++s)
        for (Elem t = 0; t < ring.size(); ++t)
            for (Elem m = 0; m < k; ++m)
                if (T[ring.mul(s, t)][m] != T[s][T[t][m]]) {
                    record("action-associativity", {s, t, m},
                           "(st)m differs from s(tm)");
                    goto act_done;
                }
act_done:
    for (Elem s = 0; s < ring.size(); ++s)
        if (T[s][z] != z) {
            record("zero-absorption", {s}, "s*0 differs from 0");
            break;
        }
    for (Elem m = 0; m < k; ++m)
        if (T[ring.zero()][m] != z) {
            record("scalar-zero", {m}, "0*m differs from 0");
            break;
        }
    for (Elem m = 0; m < k; ++m)
        if (T[ring.one()][m] != m) {
            record("scalar-one", {m}, "1*m differs from m");
            break;
        }
    return out;
}

SemimodulePtr Semimodule::create(SemiringPtr ring, ModuleTableData data) {
    if (!ring) fail(ErrorKind::precondition, "semimodule requires a semiring");
    auto violations = check_module(*ring, data);
    for (const auto& v : violations)
        if (v.law == std::string("shape"))
            fail(ErrorKind::malformed_table, "semimodule tables: " + v.detail);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "semimodule axioms violated";
        if (!data.name.empty()) os << " in \"" << data.name << "\"";
        for (const auto& v : violations) {
            os << "; " << v.law << " at (";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                os << (i ? "," : "") << v.witness[i];
            os << ")";
        }
        fail(ErrorKind::axiom_violation, os.str());
    }

    const int k = data.size;
    std::vector<Elem> perm(k);
    perm[data.zero] = 0;
    Elem next = 1;
    for (Elem e = 0; e < k; ++e)
        if (e != data.zero) perm[e] = next++;

    auto mod = std::shared_ptr<Semimodule>(new Semimodule());
    mod->ring_ = std::move(ring);
    mod->k_ = k;
    mod->name_ = data.name;
    mod->add_.assign(static_cast<std::size_t>(k) * k, 0);
    mod->act_.assign(static_cast<std::size_t>(mod->ring_->size()) * k, 0);
    for (Elem a = 0; a < k; ++a)
        for (Elem b = 0; b < k; ++b)
            mod->add_[static_cast<std::size_t>(perm[a]) * k + perm[b]] =
                perm[data.add[a][b]];
    for (Elem s = 0; s < mod->ring_->size(); ++s)
        for (Elem m = 0; m < k; ++m)
            mod->act_[static_cast<std::size_t>(s) * k + perm[m]] =
                perm[data.action[s][m]];
    return mod;
}

ModuleTableData Semimodule::table_data() const {
    ModuleTableData d;
    d.name = name_;
    d.size = k_;
    d.zero = 0;
    d.add.assign(k_, std::vector<Elem>(k_));
    d.action.assign(ring_->size(), std::vector<Elem>(k_));
    for (Elem a = 0; a < k_; ++a)
        for (Elem b = 0; b < k_; ++b) d.add[a][b] = add(a, b);
    for (Elem s = 0; s < ring_->size(); ++s)
        for (Elem m = 0; m < k_; ++m) d.action[s][m] = act(s, m);
    return d;
}

Ideal annihilator(const Semimodule& M, Elem x) {
    if (x < 0 || x >= M.size())
        fail(ErrorKind::precondition, "module element out of range");
    Mask m = 0;
    for (Elem s = 0; s < M.ring()->size(); ++s)
        if (M.act(s, x) == M.zero()) m |= bit(s);
    if (!is_ideal_mask(*M.ring(), m))
        fail(ErrorKind::internal, "annihilator is not an ideal");
    return Ideal(M.ring(), m);
}

bool is_submodule_mask(const Semimodule& M, Mask N) {
    if (!mask_has(N, M.zero())) return false;
    bool ok = true;
    for_each_elem(N, [&](Elem a) {
        if (!ok) return;
        for_each_elem(N, [&](Elem b) {
            if (!mask_has(N, M.add(a, b))) ok = false;
        });
        for (Elem s = 0; s < M.ring()->size() && ok; ++s)
            if (!mask_has(N, M.act(s, a))) ok = false;
    });
    return ok;
}

Mask close_to_submodule(const Semimodule& M, Mask seed) {
    Mask m = seed | bit(M.zero());
    bool changed = true;
    while (changed) {
        changed = false;
        Mask next = m;
        for_each_elem(m, [&](Elem a) {
            for_each_elem(m, [&](Elem b) { next |= bit(M.add(a, b)); });
            for (Elem s = 0; s < M.ring()->size(); ++s)
                next |= bit(M.act(s, a));
        });
        if (next != m) {
            m = next;
            changed = true;
        }
    }
    return m;
}

Mask submodule_sum(const Semimodule& M, Mask K, Mask L) {
    Mask out = 0;
    for_each_elem(K, [&](Elem k) {
        for_each_elem(L, [&](Elem l) { out |= bit(M.add(k, l)); });
    });
    return out;
}

Mask ideal_action(const Semimodule& M, Mask I, Mask L) {
    Mask products = bit(M.zero());
    for_each_elem(I, [&](Elem a) {
        for_each_elem(L, [&](Elem l) { products |= bit(M.act(a, l)); });
    });
    Mask m = products;
    bool changed = true;
    while (changed) {
        changed = false;
        Mask next = m;
        for_each_elem(m, [&](Elem a) {
            for_each_elem(m, [&](Elem b) { next |= bit(M.add(a, b)); });
        });
        if (next != m) {
            m = next;
            changed = true;
        }
    }
    return m;
}

std::vector<Mask> enumerate_submodules(const Semimodule& M) {
    std::vector<Mask> principal(M.size());
    for (Elem m = 0; m < M.size(); ++m)
        principal[m] = close_to_submodule(M, bit(m));
    std::vector<Mask> found{bit(M.zero())};
    for (std::size_t i = 0; i < found.size(); ++i)
        for (Elem m = 0; m < M.size(); ++m) {
            Mask next = submodule_sum(M, found[i], principal[m]);
            if (std::find(found.begin(), found.end(), next) == found.end())
                found.push_back(next);
        }
    std::sort(found.begin(), found.end());
    return found;
}

Elem ModuleLocalization::class_of(Elem m, Elem u) const {
    const auto& u_elems = ring_loc.mcset_elems();
    auto pos = std::find(u_elems.begin(), u_elems.end(), u);
    if (m < 0 || m >= base->size() || pos == u_elems.end())
        fail(ErrorKind::precondition,
             "class_of needs a module element and an MC-set member");
    return class_table[static_cast<std::size_t>(m) * u_elems.size() +
                       (pos - u_elems.begin())];
}

Mask ModuleLocalization::localize_submodule(Mask K) const {
    Mask out = 0;
    for_each_elem(K, [&](Elem m) {
        for (Elem u : ring_loc.mcset_elems()) out |= bit(class_of(m, u));
    });
    return out;
}

ModuleLocalization localize_module(const SemimodulePtr& M,
                                   const Localization& L) {
    if (M->ring().get() != L.base().get())
        fail(ErrorKind::parent_mismatch,
             "module and localization have different base semirings");
    const auto S = M->ring();
    const auto& u_elems = L.mcset_elems();
    const std::size_t un = u_elems.size();
    const std::size_t pair_count = static_cast<std::size_t>(M->size()) * un;
    auto pair_at = [&](std::size_t p) {
        return std::pair<Elem, Elem>{static_cast<Elem>(p / un),
                                     u_elems[p % un]};
    };

    // (m,u) ~ (n,v) iff tvm = tun for some t in U; verified an equivalence.
    std::vector<std::vector<bool>> rel(pair_count,
                                       std::vector<bool>(pair_count, false));
    for (std::size_t p = 0; p < pair_count; ++p)
        for (std::size_t q = p; q < pair_count; ++q) {
            auto [m, u] = pair_at(p);
            auto [n, v] = pair_at(q);
            for (Elem t : u_elems)
                if (M->act(S->mul(t, v), m) == M->act(S->mul(t, u), n)) {
                    rel[p][q] = rel[q][p] = true;
                    break;
                }
        }
    for (std::size_t p = 0; p < pair_count; ++p)
        for (std::size_t q = p + 1; q < pair_count; ++q)
            if (rel[p][q] && rel[p] != rel[q])
                fail(ErrorKind::internal,
                     "module fraction relation is not transitive");

    std::vector<int> class_of_pair(pair_count, -1);
    std::vector<std::size_t> leads;
    for (std::size_t p = 0; p < pair_count; ++p) {
        if (class_of_pair[p] >= 0) continue;
        const int c = static_cast<int>(leads.size());
        leads.push_back(p);
        for (std::size_t q = p; q < pair_count; ++q)
            if (rel[p][q]) class_of_pair[q] = c;
    }
    // Least pairs ascend with p, so class 0 is the class of (0,least u);
    // relabel so the class of 0/1 leads, then build tables.
    const std::size_t one_pos = static_cast<std::size_t>(
        std::find(u_elems.begin(), u_elems.end(), S->one()) - u_elems.begin());
    const int zero_class = class_of_pair[static_cast<std::size_t>(M->zero()) * un + one_pos];
    std::vector<int> order;
    order.push_back(zero_class);
    for (int c = 0; c < static_cast<int>(leads.size()); ++c)
        if (c != zero_class) order.push_back(c);
    std::vector<int> relabel(leads.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        relabel[order[i]] = static_cast<int>(i);

    std::vector<Elem> class_table(pair_count, 0);
    for (std::size_t p = 0; p < pair_count; ++p)
        class_table[p] = relabel[class_of_pair[p]];

    const int qk = static_cast<int>(leads.size());
    std::vector<std::pair<Elem, Elem>> reps(qk);
    for (std::size_t i = 0; i < order.size(); ++i)
        reps[i] = pair_at(leads[order[i]]);

    auto cls = [&](Elem m, Elem u) {
        const std::size_t pos = static_cast<std::size_t>(
            std::find(u_elems.begin(), u_elems.end(), u) - u_elems.begin());
        return class_table[static_cast<std::size_t>(m) * un + pos];
    };
    // m/u + n/v = (vm+un)/uv and (a/u)(m/v) = am/uv.
    auto add_pair = [&](std::pair<Elem, Elem> a, std::pair<Elem, Elem> b) {
        Elem num = M->add(M->act(b.second, a.first), M->act(a.second, b.first));
        return cls(num, S->mul(a.second, b.second));
    };
    auto act_pair = [&](std::pair<Elem, Elem> r, std::pair<Elem, Elem> m) {
        return cls(M->act(r.first, m.first), S->mul(r.second, m.second));
    };

    const auto Q = L.quotient();
    ModuleTableData data;
    data.size = qk;
    data.zero = 0;
    if (!M->name().empty()) data.name = M->name() + "_loc";
    data.add.assign(qk, std::vector<Elem>(qk));
    for (int i = 0; i < qk; ++i)
        for (int j = 0; j < qk; ++j) data.add[i][j] = add_pair(reps[i], reps[j]);
    data.action.assign(Q->size(), std::vector<Elem>(qk));
    for (Elem r = 0; r < Q->size(); ++r) {
        auto rrep = L.least_representative(r);
        for (int j = 0; j < qk; ++j)
            data.action[r][j] = act_pair(rrep, reps[j]);
    }

    // Well-definedness of both maps over every representative choice.
    for (std::size_t p = 0; p < pair_count; ++p)
        for (std::size_t q = 0; q < pair_count; ++q)
            if (add_pair(pair_at(p), pair_at(q)) !=
                data.add[class_table[p]][class_table[q]])
                fail(ErrorKind::internal,
                     "module fraction addition is not well defined");
    for (Elem a = 0; a < S->size(); ++a)
        for (Elem u : u_elems)
            for (std::size_t q = 0; q < pair_count; ++q)
                if (act_pair({a, u}, pair_at(q)) !=
                    data.action[L.class_of(a, u)][class_table[q]])
                    fail(ErrorKind::internal,
                         "module fraction action is not well defined");

    // gamma(m) = 0 must force tm = 0 for some t in U.
    for (Elem m = 0; m < M->size(); ++m) {
        if (cls(m, S->one()) != 0) continue;
        bool killed = false;
        for (Elem t : u_elems)
            if (M->act(t, m) == M->zero()) {
                killed = true;
                break;
            }
        if (!killed)
            fail(ErrorKind::internal,
                 "gamma annihilates an element no MC member kills");
    }

    return ModuleLocalization{M, L, Semimodule::create(Q, std::move(data)),
                              std::move(class_table)};
}

LocalGlobalZero is_zero_locally(const SemimodulePtr& M) {
    const auto S = M->ring();
    auto spec = spectrum_of(S);

    LocalGlobalZero out;
    out.module_zero = M->size() == 1;
    out.zero_at_all_primes = true;
    for (const Ideal& P : spec.primes) {
        auto L = localize(S, S->all() & ~P.bits());
        if (localize_module(M, L).quotient->size() != 1) {
            out.zero_at_all_primes = false;
            break;
        }
    }
    out.zero_at_all_maximals = true;
    for (const Ideal& m : spec.maximals) {
        auto L = localize(S, S->all() & ~m.bits());
        if (localize_module(M, L).quotient->size() != 1) {
            out.zero_at_all_maximals = false;
            break;
        }
    }
    if (out.module_zero != out.zero_at_all_primes ||
        out.module_zero != out.zero_at_all_maximals)
        fail(ErrorKind::equivalence_failure,
             "the three zero-ness conditions disagree on module \"" +
                 M->name() + "\"");
    if (!out.module_zero) {
        for (Elem x = 0; x < M->size(); ++x) {
            if (x == M->zero()) continue;
            Ideal ann = annihilator(*M, x);
            for (const Ideal& m : spec.maximals)
                if (mask_subset(ann.bits(), m.bits())) {
                    out.witness_elem = x;
                    out.witness_maximal = m.bits();
                    break;
                }
            if (out.witness_elem) break;
        }
        if (!out.witness_elem)
            fail(ErrorKind::internal,
                 "nonzero module without a witness element");
    }
    return out;
}

SemimodulePtr regular_module(const SemiringPtr& S) {
    ModuleTableData d;
    d.size = S->size();
    d.zero = S->zero();
    d.name = S->name().empty() ? "regular" : S->name() + " over itself";
    auto tables = S->table_data();
    d.add = tables.add;
    d.action = tables.mul;
    return Semimodule::create(S, std::move(d));
}

SemimodulePtr zero_module(const SemiringPtr& S) {
    ModuleTableData d;
    d.size = 1;
    d.zero = 0;
    d.name = "zero";
    d.add = {{0}};
    d.action.assign(S->size(), {0});
    return Semimodule::create(S, std::move(d));
}

SemimodulePtr module_direct_sum(const SemimodulePtr& A, const SemimodulePtr& B) {
    if (A->ring().get() != B->ring().get())
        fail(ErrorKind::parent_mismatch,
             "direct sum needs modules over one semiring");
    const int ka = A->size(), kb = B->size();
    auto flat = [&](Elem x, Elem y) { return x * kb + y; };
    ModuleTableData d;
    d.size = ka * kb;
    d.zero = flat(A->zero(), B->zero());
    d.name = A->name() + " (+) " + B->name();
    d.add.assign(d.size, std::vector<Elem>(d.size));
    for (Elem x1 = 0; x1 < ka; ++x1)
        for (Elem y1 = 0; y1 < kb; ++y1)
            for (Elem x2 = 0; x2 < ka; ++x2)
                for (Elem y2 = 0; y2 < kb; ++y2)
                    d.add[flat(x1, y1)][flat(x2, y2)] =
                        flat(A->add(x1, x2), B->add(y1, y2));
    d.action.assign(A->ring()->size(), std::vector<Elem>(d.size));
    for (Elem s = 0; s < A->ring()->size(); ++s)
        for (Elem x = 0; x < ka; ++x)
            for (Elem y = 0; y < kb; ++y)
                d.action[s][flat(x, y)] = flat(A->act(s, x), B->act(s, y));
    return Semimodule::create(A->ring(), std::move(d));
}

} // namespace sri
