#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sri/ideal.hpp"
#include "sri/localization.hpp"
#include "sri/semiring.hpp"

namespace sri {

class Semimodule;
using SemimodulePtr = std::shared_ptr<const Semimodule>;

struct ModuleViolation {
    std::string law;
    std::vector<Elem> witness;
    std::string detail;
};

/// Raw semimodule input: a commutative monoid table plus a scalar action
/// table over a fixed semiring.
struct ModuleTableData {
    std::string name;
    int size = 0;
    std::vector<std::vector<Elem>> add;    // size x size
    Elem zero = 0;
    std::vector<std::vector<Elem>> action; // |S| x size, (s, m) -> s*m
};

std::vector<ModuleViolation> check_module(const Semiring& ring,
                                          const ModuleTableData& data);

/// A finite semimodule over a finite semiring. The additive identity is
/// relabeled to index 0 on construction. Immutable and pure afterwards.
class Semimodule {
public:
    /// Throws malformed_table / axiom_violation analogously to semirings.
    static SemimodulePtr create(SemiringPtr ring, ModuleTableData data);

    const SemiringPtr& ring() const { return ring_; }
    int size() const { return k_; }
    Elem zero() const { return 0; }
    Mask all() const { return full_mask(k_); }
    const std::string& name() const { return name_; }

    Elem add(Elem m, Elem n) const { return add_[static_cast<std::size_t>(m) * k_ + n]; }
    Elem act(Elem s, Elem m) const { return act_[static_cast<std::size_t>(s) * k_ + m]; }

    ModuleTableData table_data() const;

private:
    Semimodule() = default;

    SemiringPtr ring_;
    int k_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> act_;
    std::string name_;
};

/// Ann(x) = {s : s*x = 0}; verified to be an ideal of the ring.
Ideal annihilator(const Semimodule& M, Elem x);

// Subsemimodules are masks over the module carrier: nonempty subsets closed
// under + and the scalar action (hence containing 0).
bool is_submodule_mask(const Semimodule& M, Mask N);
Mask close_to_submodule(const Semimodule& M, Mask seed);
Mask submodule_sum(const Semimodule& M, Mask K, Mask L);
Mask ideal_action(const Semimodule& M, Mask I, Mask L); // closure of {a*l} under +
std::vector<Mask> enumerate_submodules(const Semimodule& M);

/// M_U over S_U, built from the relation (m,u) ~ (n,v) iff tvm = tun for
/// some t in U; the relation and both structure maps are verified exactly
/// like the semiring case. gamma_of(m) is the class of m/1 and satisfies:
/// gamma_of(m) = 0 implies tm = 0 for some t in U (verified).
struct ModuleLocalization {
    SemimodulePtr base;
    Localization ring_loc;
    SemimodulePtr quotient; // over ring_loc.quotient()

    Elem class_of(Elem m, Elem u) const;
    Elem gamma_of(Elem m) const { return class_of(m, 1); }
    Mask localize_submodule(Mask K) const;

    std::vector<Elem> class_table; // (m, u-position) -> quotient element
};

ModuleLocalization localize_module(const SemimodulePtr& M, const Localization& L);

/// The three equivalent zero-ness conditions, each computed independently:
/// M = 0, all localizations at primes vanish, all localizations at maximal
/// ideals vanish. Their equivalence is asserted (equivalence_failure
/// otherwise). When the common value is false, witness_elem is a nonzero x
/// and witness_maximal a maximal ideal containing Ann(x).
struct LocalGlobalZero {
    bool module_zero = false;
    bool zero_at_all_primes = false;
    bool zero_at_all_maximals = false;
    std::optional<Elem> witness_elem;
    std::optional<Mask> witness_maximal;
    bool value() const { return module_zero; }
};

LocalGlobalZero is_zero_locally(const SemimodulePtr& M);

// Stock fixtures.
SemimodulePtr regular_module(const SemiringPtr& S); // S acting on itself
SemimodulePtr zero_module(const SemiringPtr& S);
SemimodulePtr module_direct_sum(const SemimodulePtr& A, const SemimodulePtr& B);

} // namespace sri
