#include "permlab/corpus.hpp"

#include <algorithm>

#include "permlab/wreath.hpp"

namespace permlab {

namespace {

struct RawGeometry {
    const char* name;
    const char* kind;
    int q;
    std::size_t degree;
    std::size_t order;
    std::vector<std::string> generators;
    std::vector<std::vector<int>> lines;
    std::vector<std::string> coordinates;
};

const std::vector<RawGeometry>& raw_geometries() {
    static const std::vector<RawGeometry> data = {
#include "geometry_data.inc"
    };
    return data;
}

std::string cycle_of(std::size_t from, std::size_t to) {
    std::string s = "(";
    for (std::size_t i = from; i <= to; ++i) s += std::to_string(i) + (i < to ? " " : ")");
    return s;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::string reflection(std::size_t n) {
    // i -> 2 - i mod n, 1-based
    std::string s;
    for (std::size_t i = 2, j = n; i < j; ++i, --j) s += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
    return s.empty() ? "()" : s;
}

Fixture make(std::string name, std::string family, std::size_t degree, std::vector<std::string> gens,
             std::size_t order, std::string provenance) {
    Fixture f;
    f.name = std::move(name);
    f.family = std::move(family);
    f.degree = degree;
    f.generators = std::move(gens);
    f.order = order;
    f.provenance = std::move(provenance);
    f.enumerable = order <= 200000;
    return f;
}

Fixture from_group(std::string name, std::string family, const Group& g, std::size_t order, std::string provenance) {
    std::vector<std::string> gens;
    for (const auto& s : g.generators()) gens.push_back(format_cycles(s));
    return make(std::move(name), std::move(family), g.degree(), std::move(gens), order, std::move(provenance));
}

Group regular_product(std::size_t c, std::size_t d) {
    std::vector<Point> a(c * d), b(c * d);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            a[i * d + j] = static_cast<Point>(((i + 1) % c) * d + j);
            b[i * d + j] = static_cast<Point>(i * d + (j + 1) % d);
        }
    return Group(c * d, {Perm(a), Perm(b)});
}

Group cyclic_group(std::size_t n) { return Group::from_cycles({cycle_of(1, n)}, n); }

std::vector<Fixture> build_corpus() {
    std::vector<Fixture> out;
    for (std::size_t n = 3; n <= 10; ++n)
        out.push_back(make("c_" + std::to_string(n), "cyclic", n, {cycle_of(1, n)}, n,
                           "cyclic group generated by an n-cycle, acting regularly"));
    for (std::size_t n : {4u, 5u, 6u, 8u, 10u})
        out.push_back(make("d_" + std::to_string(n), "dihedral", n, {cycle_of(1, n), reflection(n)}, 2 * n,
                           "symmetries of a regular n-gon on its vertices"));
    for (std::size_t n = 3; n <= 10; ++n)
        out.push_back(make("s_" + std::to_string(n), "symmetric", n, {cycle_of(1, n), "(1 2)"}, factorial(n),
                           "full symmetric group, natural action"));
    for (std::size_t n = 4; n <= 10; ++n)
        out.push_back(make("a_" + std::to_string(n), "alternating", n,
                           {n % 2 ? cycle_of(1, n) : cycle_of(2, n), "(1 2 3)"}, factorial(n) / 2,
                           "alternating group, natural action"));
    for (auto [c, d] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 4}, {3, 3}, {2, 6}}) {
        std::string name = c == 2 && d == 2 ? "v_4" : "z" + std::to_string(c) + "_z" + std::to_string(d);
        out.push_back(from_group(name, "regular", regular_product(c, d), c * d,
                                 "direct product of cyclic groups in its regular action"));
    }
    Group c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
    Group s3 = Group::from_cycles({"(1 2 3)", "(1 2)"}, 3);
    out.push_back(from_group("c2_wr_c2", "wreath", wreath(c2, c2), 8, "imprimitive wreath product C_2 Wr C_2"));
    out.push_back(from_group("c2_wr_c3", "wreath", wreath(c2, c3), 24, "imprimitive wreath product C_2 Wr C_3"));
    out.push_back(from_group("c3_wr_c2", "wreath", wreath(c3, c2), 18, "imprimitive wreath product C_3 Wr C_2"));
    out.push_back(from_group("c2_wr_c4", "wreath", wreath(c2, c4), 64, "imprimitive wreath product C_2 Wr C_4"));
    out.push_back(from_group("s3_wr_c2", "wreath", wreath(s3, c2), 72, "imprimitive wreath product S_3 Wr C_2"));
    out.push_back(from_group("c2_wr_c2_wr_c2", "wreath", hall_tower({c2, c2, c2}).group, 128,
                             "Hall tower C_2 wr C_2 wr C_2, a Sylow 2-subgroup of S_8"));
    for (const auto& r : raw_geometries()) {
        std::string kind = r.kind;
        Fixture f = make(r.name, "geometry", r.degree, r.generators, r.order,
                         kind == "projective"
                             ? "collineation group PGL(3," + std::to_string(r.q) + ") on the points of PG(2," +
                                   std::to_string(r.q) + "); lines tabulated by tools/gen_geometry_fixtures.py"
                             : "affine group AGL(2," + std::to_string(r.q) + ") on the points of AG(2," +
                                   std::to_string(r.q) + "); lines tabulated by tools/gen_geometry_fixtures.py");
        GeometryTable t;
        t.kind = kind;
        t.q = r.q;
        t.coordinates = r.coordinates;
        for (const auto& l : r.lines) {
            PointSet s;
            for (int x : l) s.push_back(x - 1);
            t.lines.push_back(s);
        }
        std::sort(t.lines.begin(), t.lines.end());
        f.geometry = t;
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

const std::vector<Fixture>& corpus() {
    static const std::vector<Fixture> c = build_corpus();
    return c;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& f : corpus())
        if (f.name == name) return f;
    fail(ErrorKind::UnknownFixture, "unknown fixture: " + name);
}

Group fixture_group(const Fixture& f) { return Group::from_cycles(f.generators, f.degree); }

std::vector<PointSet> proper_subspaces(const GeometryTable& t) {
    std::vector<PointSet> out{{}};
    for (std::size_t p = 0; p < t.coordinates.size(); ++p) out.push_back({static_cast<Point>(p)});
    for (const auto& l : t.lines) out.push_back(l);
    return out;
}

}  // namespace permlab
