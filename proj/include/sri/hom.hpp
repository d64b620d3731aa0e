#pragma once

#include <span>
#include <string>
#include <vector>

#include "sri/ideal.hpp"
#include "sri/semiring.hpp"

namespace sri {

struct HomViolation {
    std::string law; // "range", "zero", "one", "additive", "multiplicative"
    std::vector<Elem> witness;
    std::string detail;
};

/// A semiring homomorphism: a total element map preserving +, *, 0 and 1.
class Hom {
public:
    /// Exhaustive law check; empty result means the map is a homomorphism.
    static std::vector<HomViolation> check(const Semiring& src,
                                           const Semiring& dst,
                                           std::span<const Elem> map);

    /// Throws hom_violation listing every broken law with a witness.
    static Hom create(SemiringPtr src, SemiringPtr dst,
                      std::vector<Elem> map);

    const SemiringPtr& src() const { return src_; }
    const SemiringPtr& dst() const { return dst_; }
    const std::vector<Elem>& map() const { return map_; }
    Elem operator()(Elem e) const { return map_[e]; }

    bool injective() const;

private:
    Hom(SemiringPtr src, SemiringPtr dst, std::vector<Elem> map)
        : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {}

    SemiringPtr src_;
    SemiringPtr dst_;
    std::vector<Elem> map_;
};

Hom identity_hom(const SemiringPtr& S);

/// f^{-1}(0) as an ideal of the source.
Ideal kernel(const Hom& f);

/// f^{-1}(J) for J an ideal of the target; always an ideal of the source.
Ideal contract(const Hom& f, const Ideal& J);

/// The ideal of the target generated by f(I).
Ideal extend(const Hom& f, const Ideal& I);

/// Brute force over all maps fixing 0 and 1; intended for small carriers.
std::vector<Hom> enumerate_homs(const SemiringPtr& src, const SemiringPtr& dst);

} // namespace sri
