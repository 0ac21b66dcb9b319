#include "doctest.h"
#include "oracles.hpp"
#include "permlab/corpus.hpp"
#include "permlab/jordan.hpp"

using namespace permlab;

namespace {

Group G(std::vector<std::string> gens, std::size_t n) { return Group::from_cycles(gens, n); }

std::vector<PointSet> sets_of(const std::vector<JordanWitness>& c) {
    std::vector<PointSet> out;
    for (const auto& w : c) out.push_back(w.set);
    std::sort(out.begin(), out.end());
    return out;
}

// Jordan sets straight from the definition, over raw element images.
std::vector<PointSet> brute_jordan(const Group& g) {
    int n = static_cast<int>(g.degree());
    auto el = oracle::naive_closure(n, oracle::images_of(g.generators()));
    std::vector<PointSet> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        PointSet gam;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) gam.push_back(i);
        if (gam.size() < 2) continue;
        std::set<int> reach;
        for (const auto& x : el) {
            bool fixes = true;
            for (int i = 0; i < n; ++i)
                if (!(mask >> i & 1) && x[static_cast<std::size_t>(i)] != i) fixes = false;
            if (fixes) reach.insert(x[static_cast<std::size_t>(gam[0])]);
        }
        if (reach.size() == gam.size()) out.push_back(gam);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PointSet complement_of(std::size_t n, const PointSet& s) {
    PointSet out;
    for (Point p = 0; p < static_cast<Point>(n); ++p)
        if (!std::binary_search(s.begin(), s.end(), p)) out.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("Jordan set membership") {
    Group s4 = G({"(1 2 3 4)", "(1 2)"}, 4);
    auto w = is_jordan(s4, {0, 1, 2});
    REQUIRE(w);
    CHECK_FALSE(w->proper);
    CHECK(w->witness_order == 6);
    CHECK_FALSE(is_jordan(G({"(1 2 3 4)"}, 4), {0, 1}));
    CHECK_THROWS_AS(is_jordan(s4, {0}), Error);

    Group pg = fixture_group(fixture("pg_2_2"));
    const auto& lines = fixture("pg_2_2").geometry->lines;
    auto lw = is_jordan(pg, complement_of(7, lines[0]));
    REQUIRE(lw);
    CHECK(lw->proper);
}

TEST_CASE("Jordan catalogs match the definition") {
    std::vector<Group> gs{G({"(1 2 3 4)", "(1 2)"}, 4), G({"(1 2 3 4)"}, 4), G({"(1 2 3 4)", "(1 3)"}, 4),
                          G({"(1 2 3 4 5)", "(1 2 3)"}, 5), G({"(1 2 3)(4 5 6)", "(1 4)"}, 6),
                          fixture_group(fixture("pg_2_2")), fixture_group(fixture("ag_2_2"))};
    for (const auto& g : gs) CHECK(sets_of(jordan_sets(g)) == brute_jordan(g));
    CHECK(jordan_sets(G({"(1 2 3 4)", "(1 2)"}, 4)).size() == 11);
    // Alt: every set of size at least 3
    for (const auto& w : jordan_sets(G({"(1 2 3 4 5)", "(1 2 3)"}, 5))) CHECK(w.set.size() >= 3);
}

TEST_CASE("geometry fixtures: Jordan sets are complements of proper subspaces") {
    for (const char* name : {"pg_2_2", "pg_2_3", "ag_2_2", "ag_2_3"}) {
        CAPTURE(name);
        const Fixture& f = fixture(name);
        Group g = fixture_group(f);
        std::vector<PointSet> want;
        for (const auto& s : proper_subspaces(*f.geometry)) {
            PointSet c = complement_of(f.degree, s);
            if (c.size() >= 2) want.push_back(c);
        }
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        CHECK(sets_of(jordan_sets(g)) == want);
    }
    CHECK(jordan_sets(fixture_group(fixture("pg_2_2"))).size() == 15);
}

TEST_CASE("maximal Jordan sets avoiding a set") {
    const Fixture& f = fixture("pg_2_2");
    auto cat = jordan_sets(fixture_group(f));
    const PointSet& line = f.geometry->lines[2];
    CHECK(maximal_jordan_avoiding(cat, line) == std::vector<PointSet>{complement_of(7, line)});
    auto s4 = jordan_sets(G({"(1 2 3 4)", "(1 2)"}, 4));
    CHECK(maximal_jordan_avoiding(s4, {0}) == std::vector<PointSet>{{1, 2, 3}});
    CHECK(maximal_jordan_avoiding(s4, {}) == std::vector<PointSet>{{0, 1, 2, 3}});
    CHECK(maximal_jordan_avoiding(s4, {0}, Point{0}).empty());
}

TEST_CASE("span geometry") {
    for (const char* name : {"pg_2_2", "ag_2_3", "pg_2_3"}) {
        CAPTURE(name);
        const Fixture& f = fixture(name);
        SpanGeometry geo(fixture_group(f));
        CHECK(geo.span({}).empty());
        for (Point p = 0; p < static_cast<Point>(f.degree); ++p) CHECK(geo.span({p}) == PointSet{p});
        // span of two points is the tabulated line through them
        for (const auto& l : f.geometry->lines)
            for (std::size_t i = 0; i < l.size(); ++i)
                for (std::size_t j = i + 1; j < l.size(); ++j) CHECK(geo.span({l[i], l[j]}) == l);
        auto a = geometry_audit(geo);
        CHECK(a.passes());
        CHECK(a.independent_orbits.size() >= 3);
        CHECK(a.independent_orbits[0] == 1);
        CHECK(a.independent_orbits[1] == 1);
        CHECK(a.independent_orbits[2] == 1);
    }
    SpanGeometry s5(G({"(1 2 3 4 5)", "(1 2)"}, 5));
    CHECK(s5.span({0, 1, 2}) == PointSet{0, 1, 2});
    CHECK(s5.span({0, 1, 2, 3}).size() == 5);
    CHECK(geometry_audit(s5).passes());
}

TEST_CASE("block test by translates") {
    auto gens = G({"(1 2 3 4)"}, 4).generators();
    CHECK(is_block_for(gens, {0, 2}));
    CHECK_FALSE(is_block_for(gens, {0, 1}));
    CHECK(is_block_for(gens, {1}));
}

TEST_CASE("Jordan property suites on small groups") {
    std::mt19937_64 rng(5);
    std::vector<Group> gs{G({"(1 2 3 4)", "(1 2)"}, 4), G({"(1 2 3 4 5)", "(1 2 3)"}, 5), G({"(1 2 3 4)", "(1 3)"}, 4),
                          fixture_group(fixture("pg_2_2")), fixture_group(fixture("ag_2_3")),
                          G({"(1 2 3 4 5 6)", "(1 2)"}, 6)};
    for (const auto& g : gs) {
        auto cat = jordan_sets(g);
        for (const auto& r : {check_translation_closed(g, cat), check_overlap_unions(cat),
                              check_maximal_subset_blocks(g, cat), check_translate_comparability(g, cat),
                              check_connected_union_primitive(cat, rng, 30),
                              check_connected_union_transitivity(cat, rng, 30),
                              check_overlapping_primitive_pairs(cat), check_translates_cover_pairs(g, cat)}) {
            CAPTURE(r.name);
            CHECK(r.violations == 0);
        }
    }
}
