#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sri/error.hpp"
#include "sri/subset.hpp"

namespace sri {

class Semiring;
class IdealLattice;
using SemiringPtr = std::shared_ptr<const Semiring>;

/// The defining laws of a commutative semiring, plus the two shape-level
/// requirements that are checked before any law.
enum class Law {
    table_shape,
    zero_one_distinct,
    add_assoc,
    add_comm,
    add_identity,
    mul_assoc,
    mul_comm,
    mul_identity,
    distributivity,
    absorption,
};

const char* law_name(Law law);

/// One violated law together with the least witness tuple that breaks it.
/// Witness entries are element indices of the *input* tables (before any
/// relabeling).
struct Violation {
    Law law;
    std::vector<Elem> witness;
    std::string detail;
};

/// Raw, unvalidated semiring data as read from a file or built in code.
struct TableData {
    std::string name;
    int size = 0;
    std::vector<std::vector<Elem>> add;
    std::vector<std::vector<Elem>> mul;
    Elem zero = 0;
    Elem one = 0;
    std::vector<std::string> element_names; // optional; size() == size when present
};

/// Shape problems only: dimensions, entry ranges, name list length,
/// zero/one indices. Empty result means the law checks below are safe to run.
std::vector<Violation> check_shape(const TableData& data);

/// Exhaustive law check (all triples). Assumes check_shape passed.
/// Returns one Violation per broken law, least witness first.
std::vector<Violation> check_axioms(const TableData& data);

/// Re-evaluates a reported violation. True means the witness genuinely
/// breaks the stated law on these tables.
bool violation_holds(const TableData& data, const Violation& v);

inline constexpr int default_size_cap = 8;
inline constexpr int hard_size_cap = 64; // Mask is one 64-bit word

/// A validated finite commutative semiring. Immutable after construction;
/// all queries are pure and safe to call concurrently.
///
/// Elements are relabeled on construction so that the additive identity is
/// index 0 and the multiplicative identity is index 1; everything else keeps
/// its relative order. This gives subsets of any two equal semirings the
/// same bit encoding.
class Semiring : public std::enable_shared_from_this<Semiring> {
public:
    /// Validates and canonicalizes. Throws Error with kind malformed_table,
    /// zero_equals_one, size_cap_exceeded, or axiom_violation (message lists
    /// every broken law with a witness). size_cap == 0 lifts the cap up to
    /// the hard 64-element representation limit.
    static SemiringPtr create(TableData data, int size_cap = default_size_cap);

    int size() const { return n_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Mask all() const { return full_mask(n_); }

    Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
    Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }

    /// s multiplied by itself n times; n >= 1.
    Elem pow(Elem s, int n) const;

    /// {s : s*t == 1 for some t}.
    Mask units() const;

    /// {s : s*b == s*c implies b == c}; always contains the units.
    Mask cancelable_elements() const;

    const std::string& name() const { return name_; }
    const std::string& element_name(Elem e) const { return names_[e]; }
    std::optional<Elem> element_index(std::string_view name) const;

    /// Canonical tables (zero = 0, one = 1), suitable for serialization.
    TableData table_data() const;

    /// All ideals of this semiring, computed once on first use and cached.
    const IdealLattice& ideals() const;

private:
    Semiring() = default;
    std::size_t idx(Elem a, Elem b) const {
        return static_cast<std::size_t>(a) * n_ + b;
    }

    int n_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::string name_;
    std::vector<std::string> names_;

    mutable std::once_flag lattice_once_;
    mutable std::shared_ptr<const IdealLattice> lattice_;
};

/// Componentwise product on pairs, flattened row-major and re-canonicalized.
/// The result is validated like any other semiring.
SemiringPtr direct_product(const SemiringPtr& a, const SemiringPtr& b);

/// True when sizes and both Cayley tables match entry for entry
/// (names are ignored).
bool same_tables(const Semiring& a, const Semiring& b);

} // namespace sri
