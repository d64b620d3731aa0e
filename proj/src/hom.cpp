#include "sri/hom.hpp"

#include <sstream>

namespace sri {

std::vector<HomViolation> Hom::check(const Semiring& src, const Semiring& dst,
                                     std::span<const Elem> map) {
    std::vector<HomViolation> out;
    if (static_cast<int>(map.size()) != src.size()) {
        out.push_back({"range", {}, "map must assign every source element"});
        return out;
    }
    for (Elem e = 0; e < src.size(); ++e)
        if (map[e] < 0 || map[e] >= dst.size()) {
            out.push_back({"range", {e}, "image out of range"});
            return out;
        }
    if (map[src.zero()] != dst.zero())
        out.push_back({"zero", {src.zero()}, "zero must map to zero"});
    if (map[src.one()] != dst.one())
        out.push_back({"one", {src.one()}, "one must map to one"});
    for (Elem a = 0; a < src.size(); ++a)
        for (Elem b = a; b < src.size(); ++b) {
            if (map[src.add(a, b)] != dst.add(map[a], map[b]))
                out.push_back({"additive",
                               {a, b},
                               "f(a+b) differs from f(a)+f(b) at (" +
                                   src.element_name(a) + "," +
                                   src.element_name(b) + ")"});
            if (map[src.mul(a, b)] != dst.mul(map[a], map[b]))
                out.push_back({"multiplicative",
                               {a, b},
                               "f(a*b) differs from f(a)*f(b) at (" +
                                   src.element_name(a) + "," +
                                   src.element_name(b) + ")"});
        }
    return out;
}

Hom Hom::create(SemiringPtr src, SemiringPtr dst, std::vector<Elem> map) {
    if (!src || !dst)
        fail(ErrorKind::precondition, "homomorphism requires two semirings");
    auto violations = check(*src, *dst, map);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "not a semiring homomorphism";
        for (const auto& v : violations) os << "; " << v.law << ": " << v.detail;
        fail(ErrorKind::hom_violation, os.str());
    }
    return Hom(std::move(src), std::move(dst), std::move(map));
}

bool Hom::injective() const {
    for (std::size_t a = 0; a < map_.size(); ++a)
        for (std::size_t b = a + 1; b < map_.size(); ++b)
            if (map_[a] == map_[b]) return false;
    return true;
}

Hom identity_hom(const SemiringPtr& S) {
    std::vector<Elem> map(static_cast<std::size_t>(S->size()));
    for (Elem e = 0; e < S->size(); ++e) map[e] = e;
    return Hom::create(S, S, std::move(map));
}

Ideal kernel(const Hom& f) {
    Mask m = 0;
    for (Elem e = 0; e < f.src()->size(); ++e)
        if (f(e) == f.dst()->zero()) m |= bit(e);
    return Ideal(f.src(), m);
}

Ideal contract(const Hom& f, const Ideal& J) {
    if (J.ring().get() != f.dst().get())
        fail(ErrorKind::parent_mismatch,
             "contraction needs an ideal of the homomorphism's target");
    Mask m = 0;
    for (Elem e = 0; e < f.src()->size(); ++e)
        if (J.contains(f(e))) m |= bit(e);
    return Ideal(f.src(), m);
}

Ideal extend(const Hom& f, const Ideal& I) {
    if (I.ring().get() != f.src().get())
        fail(ErrorKind::parent_mismatch,
             "extension needs an ideal of the homomorphism's source");
    Mask image = 0;
    for_each_elem(I.bits(), [&](Elem e) { image |= bit(f(e)); });
    return generate_ideal(f.dst(), image);
}

std::vector<Hom> enumerate_homs(const SemiringPtr& src, const SemiringPtr& dst) {
    const int n = src->size();
    const int m = dst->size();
    std::vector<Hom> out;
    std::vector<Elem> map(static_cast<std::size_t>(n));
    map[src->zero()] = dst->zero();
    map[src->one()] = dst->one();
    std::vector<Elem> free;
    for (Elem e = 0; e < n; ++e)
        if (e != src->zero() && e != src->one()) free.push_back(e);

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == free.size()) {
            if (Hom::check(*src, *dst, map).empty())
                out.push_back(Hom::create(src, dst, map));
            return;
        }
        for (Elem v = 0; v < m; ++v) {
            map[free[i]] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace sri
