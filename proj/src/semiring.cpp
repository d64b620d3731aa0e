#include "sri/semiring.hpp"

#include <algorithm>
#include <sstream>

#include "sri/ideal.hpp"

namespace sri {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse: return "ParseError";
        case ErrorKind::malformed_table: return "MalformedTable";
        case ErrorKind::axiom_violation: return "AxiomViolation";
        case ErrorKind::zero_equals_one: return "ZeroEqualsOne";
        case ErrorKind::size_cap_exceeded: return "SizeCapExceeded";
        case ErrorKind::hom_violation: return "HomViolation";
        case ErrorKind::parent_mismatch: return "ParentMismatch";
        case ErrorKind::zero_ideal: return "ZeroIdeal";
        case ErrorKind::empty_family: return "EmptyFamily";
        case ErrorKind::not_prime: return "NotPrime";
        case ErrorKind::invalid_mc_set: return "InvalidMCSet";
        case ErrorKind::improper_ideal: return "ImproperIdeal";
        case ErrorKind::no_primary_decomposition: return "NoPrimaryDecomposition";
        case ErrorKind::precondition: return "PreconditionViolated";
        case ErrorKind::correspondence_failure: return "CorrespondenceFailure";
        case ErrorKind::equivalence_failure: return "EquivalenceFailure";
        case ErrorKind::unknown_proposition: return "UnknownPropositionId";
        case ErrorKind::io: return "IoError";
        case ErrorKind::internal: return "InternalError";
    }
    return "UnknownError";
}

const char* law_name(Law law) {
    switch (law) {
        case Law::table_shape: return "table-shape";
        case Law::zero_one_distinct: return "zero-one-distinct";
        case Law::add_assoc: return "add-associativity";
        case Law::add_comm: return "add-commutativity";
        case Law::add_identity: return "add-identity";
        case Law::mul_assoc: return "mul-associativity";
        case Law::mul_comm: return "mul-commutativity";
        case Law::mul_identity: return "mul-identity";
        case Law::distributivity: return "distributivity";
        case Law::absorption: return "absorption";
    }
    return "unknown-law";
}

namespace {

std::string witness_string(const std::vector<Elem>& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

bool table_well_shaped(const std::vector<std::vector<Elem>>& t, int n) {
    if (static_cast<int>(t.size()) != n) return false;
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n) return false;
        for (Elem e : row)
            if (e < 0 || e >= n) return false;
    }
    return true;
}

} // namespace

std::vector<Violation> check_shape(const TableData& data) {
    std::vector<Violation> out;
    auto bad = [&](const std::string& detail) {
        out.push_back({Law::table_shape, {}, detail});
    };
    if (data.size < 2) bad("size must be at least 2");
    if (!table_well_shaped(data.add, data.size))
        bad("add table is not size x size with entries in 0..size-1");
    if (!table_well_shaped(data.mul, data.size))
        bad("mul table is not size x size with entries in 0..size-1");
    if (data.zero < 0 || data.zero >= data.size) bad("zero index out of range");
    if (data.one < 0 || data.one >= data.size) bad("one index out of range");
    if (!data.element_names.empty() &&
        static_cast<int>(data.element_names.size()) != data.size)
        bad("element name list length differs from size");
    if (out.empty() && data.zero == data.one)
        out.push_back({Law::zero_one_distinct,
                       {data.zero},
                       "zero and one are the same element"});
    return out;
}

std::vector<Violation> check_axioms(const TableData& data) {
    const int n = data.size;
    const auto& A = data.add;
    const auto& M = data.mul;
    const Elem z = data.zero, o = data.one;
    std::vector<Violation> out;

    auto record = [&](Law law, std::vector<Elem> w, std::string detail) {
        out.push_back({law, std::move(w), std::move(detail)});
    };

    // Each law reports its least witness only.
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (A[A[a][b]][c] != A[a][A[b][c]]) {
                    record(Law::add_assoc, {a, b, c},
                           "(a+b)+c differs from a+(b+c)");
                    goto add_assoc_done;
                }
add_assoc_done:
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b)
            if (A[a][b] != A[b][a]) {
                record(Law::add_comm, {a, b}, "a+b differs from b+a");
                goto add_comm_done;
            }
add_comm_done:
    for (Elem a = 0; a < n; ++a)
        if (A[z][a] != a || A[a][z] != a) {
            record(Law::add_identity, {a}, "zero+a differs from a");
            break;
        }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (M[M[a][b]][c] != M[a][M[b][c]]) {
                    record(Law::mul_assoc, {a, b, c},
                           "(a*b)*c differs from a*(b*c)");
                    goto mul_assoc_done;
                }
mul_assoc_done:
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b)
            if (M[a][b] != M[b][a]) {
                record(Law::mul_comm, {a, b}, "a*b differs from b*a");
                goto mul_comm_done;
            }
mul_comm_done:
    for (Elem a = 0; a < n; ++a)
        if (M[o][a] != a || M[a][o] != a) {
            record(Law::mul_identity, {a}, "one*a differs from a");
            break;
        }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (M[a][A[b][c]] != A[M[a][b]][M[a][c]]) {
                    record(Law::distributivity, {a, b, c},
                           "a*(b+c) differs from a*b+a*c");
                    goto distrib_done;
                }
distrib_done:
    for (Elem a = 0; a < n; ++a)
        if (M[z][a] != z || M[a][z] != z) {
            record(Law::absorption, {a}, "zero*a differs from zero");
            break;
        }
    return out;
}

bool violation_holds(const TableData& data, const Violation& v) {
    const auto& A = data.add;
    const auto& M = data.mul;
    const Elem z = data.zero, o = data.one;
    const auto& w = v.witness;
    switch (v.law) {
        case Law::table_shape:
            return !check_shape(data).empty();
        case Law::zero_one_distinct:
            return data.zero == data.one;
        case Law::add_assoc:
            return w.size() == 3 && A[A[w[0]][w[1]]][w[2]] != A[w[0]][A[w[1]][w[2]]];
        case Law::add_comm:
            return w.size() == 2 && A[w[0]][w[1]] != A[w[1]][w[0]];
        case Law::add_identity:
            return w.size() == 1 && (A[z][w[0]] != w[0] || A[w[0]][z] != w[0]);
        case Law::mul_assoc:
            return w.size() == 3 && M[M[w[0]][w[1]]][w[2]] != M[w[0]][M[w[1]][w[2]]];
        case Law::mul_comm:
            return w.size() == 2 && M[w[0]][w[1]] != M[w[1]][w[0]];
        case Law::mul_identity:
            return w.size() == 1 && (M[o][w[0]] != w[0] || M[w[0]][o] != w[0]);
        case Law::distributivity:
            return w.size() == 3 &&
                   M[w[0]][A[w[1]][w[2]]] != A[M[w[0]][w[1]]][M[w[0]][w[2]]];
        case Law::absorption:
            return w.size() == 1 && (M[z][w[0]] != z || M[w[0]][z] != z);
    }
    return false;
}

SemiringPtr Semiring::create(TableData data, int size_cap) {
    auto shape = check_shape(data);
    for (const auto& v : shape) {
        if (v.law == Law::zero_one_distinct)
            fail(ErrorKind::zero_equals_one, v.detail);
    }
    if (!shape.empty()) {
        std::ostringstream os;
        os << "malformed semiring tables";
        if (!data.name.empty()) os << " for \"" << data.name << "\"";
        for (const auto& v : shape) os << ": " << v.detail;
        fail(ErrorKind::malformed_table, os.str());
    }
    const int cap = size_cap == 0 ? hard_size_cap : std::min(size_cap, hard_size_cap);
    if (data.size > cap) {
        std::ostringstream os;
        os << "semiring size " << data.size << " exceeds the cap " << cap;
        fail(ErrorKind::size_cap_exceeded, os.str());
    }

    auto violations = check_axioms(data);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "semiring axioms violated";
        if (!data.name.empty()) os << " in \"" << data.name << "\"";
        for (const auto& v : violations)
            os << "; " << law_name(v.law) << " at " << witness_string(v.witness);
        fail(ErrorKind::axiom_violation, os.str());
    }

    // Relabel so zero -> 0 and one -> 1, remaining elements in input order.
    const int n = data.size;
    std::vector<Elem> perm(n, -1);
    perm[data.zero] = 0;
    perm[data.one] = 1;
    Elem next = 2;
    for (Elem e = 0; e < n; ++e)
        if (perm[e] < 0) perm[e] = next++;

    auto ring = std::shared_ptr<Semiring>(new Semiring());
    ring->n_ = n;
    ring->name_ = data.name;
    ring->add_.assign(static_cast<std::size_t>(n) * n, 0);
    ring->mul_.assign(static_cast<std::size_t>(n) * n, 0);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            ring->add_[ring->idx(perm[a], perm[b])] = perm[data.add[a][b]];
            ring->mul_[ring->idx(perm[a], perm[b])] = perm[data.mul[a][b]];
        }
    ring->names_.assign(n, "");
    for (Elem e = 0; e < n; ++e) {
        ring->names_[perm[e]] = data.element_names.empty()
                                    ? std::to_string(e)
                                    : data.element_names[e];
    }
    return ring;
}

Elem Semiring::pow(Elem s, int n) const {
    if (s < 0 || s >= n_)
        fail(ErrorKind::precondition, "element index out of range");
    if (n < 1) fail(ErrorKind::precondition, "pow exponent must be >= 1");
    Elem acc = s;
    for (int i = 1; i < n; ++i) acc = mul(acc, s);
    return acc;
}

Mask Semiring::units() const {
    Mask out = 0;
    for (Elem s = 0; s < n_; ++s)
        for (Elem t = 0; t < n_; ++t)
            if (mul(s, t) == one()) {
                out |= bit(s);
                break;
            }
    return out;
}

Mask Semiring::cancelable_elements() const {
    Mask out = 0;
    for (Elem s = 0; s < n_; ++s) {
        bool cancels = true;
        for (Elem b = 0; b < n_ && cancels; ++b)
            for (Elem c = b + 1; c < n_; ++c)
                if (mul(s, b) == mul(s, c)) {
                    cancels = false;
                    break;
                }
        if (cancels) out |= bit(s);
    }
    return out;
}

std::optional<Elem> Semiring::element_index(std::string_view name) const {
    for (Elem e = 0; e < n_; ++e)
        if (names_[e] == name) return e;
    return std::nullopt;
}

TableData Semiring::table_data() const {
    TableData data;
    data.name = name_;
    data.size = n_;
    data.zero = 0;
    data.one = 1;
    data.element_names = names_;
    data.add.assign(n_, std::vector<Elem>(n_));
    data.mul.assign(n_, std::vector<Elem>(n_));
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b) {
            data.add[a][b] = add(a, b);
            data.mul[a][b] = mul(a, b);
        }
    return data;
}

const IdealLattice& Semiring::ideals() const {
    std::call_once(lattice_once_, [this] {
        lattice_ = std::make_shared<IdealLattice>(shared_from_this());
    });
    return *lattice_;
}

SemiringPtr direct_product(const SemiringPtr& a, const SemiringPtr& b) {
    const int na = a->size(), nb = b->size();
    TableData data;
    data.size = na * nb;
    if (!a->name().empty() && !b->name().empty())
        data.name = a->name() + "x" + b->name();
    auto flat = [&](Elem x, Elem y) { return x * nb + y; };
    data.add.assign(data.size, std::vector<Elem>(data.size));
    data.mul.assign(data.size, std::vector<Elem>(data.size));
    for (Elem x1 = 0; x1 < na; ++x1)
        for (Elem y1 = 0; y1 < nb; ++y1)
            for (Elem x2 = 0; x2 < na; ++x2)
                for (Elem y2 = 0; y2 < nb; ++y2) {
                    data.add[flat(x1, y1)][flat(x2, y2)] =
                        flat(a->add(x1, x2), b->add(y1, y2));
                    data.mul[flat(x1, y1)][flat(x2, y2)] =
                        flat(a->mul(x1, x2), b->mul(y1, y2));
                }
    data.zero = flat(a->zero(), b->zero());
    data.one = flat(a->one(), b->one());
    data.element_names.reserve(static_cast<std::size_t>(data.size));
    for (Elem x = 0; x < na; ++x)
        for (Elem y = 0; y < nb; ++y)
            data.element_names.push_back("(" + a->element_name(x) + "," +
                                         b->element_name(y) + ")");
    return Semiring::create(std::move(data), 0);
}

bool same_tables(const Semiring& a, const Semiring& b) {
    if (a.size() != b.size()) return false;
    for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
            if (a.add(x, y) != b.add(x, y) || a.mul(x, y) != b.mul(x, y))
                return false;
    return true;
}

} // namespace sri
