#include "sri/gallery.hpp"

#include <algorithm>

namespace sri {

namespace {

TableData chain_tables(int n, std::string name) {
    // Total order 0 < ... < n-1 with join as + and meet as *.
    TableData d;
    d.name = std::move(name);
    d.size = n;
    d.zero = 0;
    d.one = n - 1;
    d.add.assign(n, std::vector<Elem>(n));
    d.mul.assign(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            d.add[a][b] = std::max(a, b);
            d.mul[a][b] = std::min(a, b);
        }
    d.element_names.push_back("0");
    if (n == 3) {
        d.element_names.push_back("s");
    } else {
        for (Elem e = 1; e < n - 1; ++e)
            d.element_names.push_back(std::string(1, static_cast<char>('a' + e - 1)));
    }
    d.element_names.push_back("1");
    return d;
}

TableData saturating_tables(int k, std::string name) {
    // {0..k} with a+b and a*b capped at k.
    const int n = k + 1;
    TableData d;
    d.name = std::move(name);
    d.size = n;
    d.zero = 0;
    d.one = 1;
    d.add.assign(n, std::vector<Elem>(n));
    d.mul.assign(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            d.add[a][b] = std::min(a + b, k);
            d.mul[a][b] = std::min(a * b, k);
        }
    for (Elem e = 0; e < n; ++e) d.element_names.push_back(std::to_string(e));
    return d;
}

TableData modular_tables(int n, std::string name) {
    TableData d;
    d.name = std::move(name);
    d.size = n;
    d.zero = 0;
    d.one = 1;
    d.add.assign(n, std::vector<Elem>(n));
    d.mul.assign(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            d.add[a][b] = (a + b) % n;
            d.mul[a][b] = (a * b) % n;
        }
    for (Elem e = 0; e < n; ++e) d.element_names.push_back(std::to_string(e));
    return d;
}

TableData tropical_tables(int levels, std::string name) {
    // Min-plus with finite levels 0..levels-1 and a greatest element inf:
    // x+y is min, x*y is level addition saturating just below inf, and inf
    // absorbs. The additive identity is inf, so this exercises relabeling.
    const int n = levels + 1;
    const Elem inf = levels;
    TableData d;
    d.name = std::move(name);
    d.size = n;
    d.zero = inf;
    d.one = 0;
    d.add.assign(n, std::vector<Elem>(n));
    d.mul.assign(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            d.add[a][b] = std::min(a, b); // inf is the largest index
            d.mul[a][b] = (a == inf || b == inf)
                              ? inf
                              : std::min(a + b, levels - 1);
        }
    for (Elem e = 0; e < levels; ++e) d.element_names.push_back(std::to_string(e));
    d.element_names.push_back("inf");
    return d;
}

std::vector<SemiringPtr> build_gallery() {
    std::vector<SemiringPtr> g;
    auto put = [&](TableData d) {
        g.push_back(Semiring::create(std::move(d), 0));
    };
    put(chain_tables(2, "B"));
    put(chain_tables(3, "L3"));
    put(chain_tables(4, "L4"));
    put(chain_tables(5, "L5"));
    put(chain_tables(6, "L6"));
    put(saturating_tables(2, "N2"));
    put(saturating_tables(3, "N3"));
    put(saturating_tables(4, "N4"));
    put(modular_tables(2, "Z2"));
    put(modular_tables(3, "Z3"));
    put(modular_tables(4, "Z4"));
    put(modular_tables(6, "Z6"));
    put(tropical_tables(3, "T3"));

    auto find = [&](std::string_view name) {
        for (const auto& s : g)
            if (s->name() == name) return s;
        fail(ErrorKind::internal, "gallery bootstrap lookup failed");
    };
    auto named_product = [&](std::string_view a, std::string_view b) {
        return direct_product(find(a), find(b));
    };
    g.push_back(named_product("B", "B"));
    g.push_back(named_product("B", "L3"));
    g.push_back(named_product("L3", "L3"));
    g.push_back(named_product("N2", "B"));
    return g;
}

} // namespace

const std::vector<SemiringPtr>& gallery() {
    static const std::vector<SemiringPtr> g = build_gallery();
    return g;
}

std::vector<std::string> gallery_names() {
    std::vector<std::string> out;
    for (const auto& s : gallery()) out.push_back(s->name());
    return out;
}

SemiringPtr gallery_find(std::string_view name) {
    for (const auto& s : gallery())
        if (s->name() == name) return s;
    fail(ErrorKind::parse, "unknown gallery semiring \"" + std::string(name) +
                               "\"; run the gallery command for the list");
}

} // namespace sri
