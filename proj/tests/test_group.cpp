#include "doctest.h"
#include "oracles.hpp"
#include "permlab/group.hpp"

using namespace permlab;

namespace {
Group G(std::vector<std::string> gens, std::size_t n) { return Group::from_cycles(gens, n); }
std::set<oracle::Img> as_set(const std::vector<Perm>& v) {
    auto imgs = oracle::images_of(v);
    return {imgs.begin(), imgs.end()};
}
}  // namespace

TEST_CASE("orbits and transversal words") {
    Group c3 = G({"(1 2 3)"}, 5);
    auto o = orbit(c3, 0);
    CHECK(o.orbit == PointSet{0, 1, 2});
    for (auto& [b, w] : o.words) CHECK(evaluate_word(c3, w)(0) == b);
    CHECK(orbit(c3, 3).orbit == PointSet{3});
    CHECK(orbit(G({"(1 2 3 4)", "(1 2)"}, 4), 0).orbit.size() == 4);
    CHECK_THROWS_AS(orbit(c3, 7), Error);

    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<oracle::Img> gens{oracle::random_perm(n, rng)};
        if (rng() % 2) gens.push_back(oracle::random_perm(n, rng));
        std::vector<Perm> pg;
        for (auto& g : gens) pg.emplace_back(g);
        Group grp(static_cast<std::size_t>(n), pg);
        for (int a = 0; a < n; ++a) {
            auto want = oracle::point_orbit(gens, a);
            auto got = orbit(grp, a).orbit;
            CHECK(std::set<int>(got.begin(), got.end()) == want);
        }
    }
}

TEST_CASE("element enumeration matches the naive closure") {
    Group z2 = G({"(1 2)"}, 2);
    CHECK(z2.order() == 2);
    CHECK(z2.elements().list[0].is_identity());
    Group d4 = G({"(1 2 3 4)", "(1 3)"}, 4);
    CHECK(d4.order() == 8);
    CHECK(as_set(d4.elements().list) == oracle::naive_closure(4, oracle::images_of(d4.generators())));
    Group s8 = G({"(1 2 3 4 5 6 7 8)", "(1 2)"}, 8);
    CHECK_THROWS_AS(enumerate_elements(s8, 10000), Error);
    try { enumerate_elements(s8, 10000); } catch (const Error& e) { CHECK(e.kind() == ErrorKind::CapExceeded); }
    CHECK(enumerate_elements(s8, 50000).size() == 40320);

    // BFS order is reproducible
    Group a = G({"(1 2 3)", "(3 4 5)"}, 5);
    Group b = G({"(1 2 3)", "(3 4 5)"}, 5);
    CHECK(a.elements().list == b.elements().list);
}

TEST_CASE("stabilizers") {
    Group s3 = G({"(1 2 3)", "(1 2)"}, 3);
    Group st = stabilizer(s3, StabKind::Point, {0});
    CHECK(st.order() == 2);
    CHECK(st.contains(parse_cycles("(2 3)", 3)));
    Group d4 = G({"(1 2 3 4)", "(1 3)"}, 4);
    CHECK(stabilizer(d4, StabKind::Pointwise, {}).order() == 8);
    CHECK(stabilizer(d4, StabKind::Setwise, {0, 2}).order() == 4);

    // Schreier generators give exactly the filtered stabilizer
    std::vector<Group> groups{s3, d4, G({"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"}, 6),
                              G({"(1 2 3)", "(3 4 5)", "(5 6 7)"}, 7), G({"(1 2)(3 4)", "(1 3)(2 4)"}, 4)};
    for (const auto& g : groups)
        for (std::size_t a = 0; a < g.degree(); ++a) {
            Group sch = point_stabilizer(g, static_cast<Point>(a));
            std::set<oracle::Img> want;
            for (const auto& e : g.elements().list)
                if (e(static_cast<Point>(a)) == static_cast<Point>(a)) want.insert(e.images());
            CHECK(as_set(sch.elements().list) == want);
            // orbit-stabilizer
            CHECK(orbit(g, static_cast<Point>(a)).orbit.size() * sch.order() == g.order());
        }
}

TEST_CASE("induced actions") {
    Group c3 = G({"(1 2 3)"}, 3);
    auto ia = induced_action(c3, InducedKind::Subsets, 2);
    CHECK(ia.group.degree() == 3);
    CHECK(is_transitive(ia.group));
    Group s4 = G({"(1 2 3 4)", "(1 2)"}, 4);
    auto pairs = induced_action(s4, InducedKind::Tuples, 2);
    CHECK(pairs.group.degree() == 12);
    CHECK(is_transitive(pairs.group));
    auto ones = induced_action(s4, InducedKind::Subsets, 1);
    CHECK(ones.group.order() == 24);
    for (std::size_t i = 0; i < 4; ++i) CHECK(ones.items[i] == std::vector<Point>{static_cast<Point>(i)});
}

TEST_CASE("transitivity and homogeneity degrees") {
    Group s4 = G({"(1 2 3 4)", "(1 2)"}, 4);
    CHECK(transitivity_degree(s4, 4) == 4);
    CHECK(homogeneity_degree(s4, 4) == 4);
    Group c5 = G({"(1 2 3 4 5)"}, 5);
    CHECK(transitivity_degree(c5, 5) == 1);
    CHECK(homogeneity_degree(c5, 5) == 1);
    CHECK(count_orbits(c5, InducedKind::Subsets, 2) == 2);
    Group a4 = G({"(1 2 3)", "(2 3 4)"}, 4);
    CHECK(transitivity_degree(a4, 4) == 2);
    CHECK(homogeneity_degree(a4, 4) >= transitivity_degree(a4, 4));
    CHECK(transitivity_degree(G({"(1 2)"}, 3), 3) == 0);
}

TEST_CASE("separation search") {
    Group c5 = G({"(1 2 3 4 5)"}, 5);
    auto r = separation_search(c5, {0, 1}, {2, 3});
    REQUIRE(r.witness);
    // {1,2} and {3,4} are already disjoint, so the identity comes first
    CHECK(r.witness->is_identity());
    CHECK(r.guaranteed);
    // the only other separating element is sigma^4, sending {1,2} to {5,1}
    std::vector<Perm> all_witnesses;
    for (const auto& g : c5.elements().list)
        if (image_of({0, 1}, g) != PointSet{1, 2} && image_of({0, 1}, g) != PointSet{2, 3} &&
            image_of({0, 1}, g) != PointSet{3, 4})
            all_witnesses.push_back(g);
    REQUIRE(all_witnesses.size() == 2);
    CHECK(all_witnesses[1] == power(parse_cycles("(1 2 3 4 5)", 5), 4));
    CHECK(image_of({0, 1}, all_witnesses[1]) == PointSet{0, 4});
    // with Delta = {1,2} itself the first witness is sigma^2
    auto r2 = separation_search(c5, {0, 1}, {0, 1});
    REQUIRE(r2.witness);
    CHECK(*r2.witness == power(parse_cycles("(1 2 3 4 5)", 5), 2));

    // Z2 x Z2 regular: {e,a} and {e,b}
    Group v4 = G({"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
    auto none = separation_search(v4, {0, 1}, {0, 2});
    CHECK_FALSE(none.witness);
    CHECK_FALSE(none.guaranteed);

    auto trivial = separation_search(c5, {}, {0, 1, 2});
    REQUIRE(trivial.witness);
    CHECK(trivial.witness->is_identity());
}

TEST_CASE("coset cover audit") {
    Group v4 = G({"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
    Perm e(4);
    CosetCoverInstance klein{v4,
                             {{{parse_cycles("(1 2)(3 4)", 4)}, e},
                              {{parse_cycles("(1 3)(2 4)", 4)}, e},
                              {{parse_cycles("(1 4)(2 3)", 4)}, e}}};
    auto r = coset_cover_audit(klein);
    CHECK(r.covers);
    CHECK(r.irredundant);
    CHECK(r.indices == std::vector<std::size_t>{2, 2, 2});
    CHECK(r.index_sum == Rational(3, 2));

    Group s3 = G({"(1 2 3)", "(1 2)"}, 3);
    CosetCoverInstance s3c{s3, {{{parse_cycles("(1 2 3)", 3)}, Perm(3)},
                                {{parse_cycles("(1 2 3)", 3)}, parse_cycles("(1 2)", 3)}}};
    auto r2 = coset_cover_audit(s3c);
    CHECK(r2.covers);
    CHECK(r2.irredundant);
    CHECK(r2.index_sum == 1);

    CosetCoverInstance whole{s3, {{s3.generators(), Perm(3)}}};
    auto r3 = coset_cover_audit(whole);
    CHECK(r3.covers);
    CHECK(r3.index_sum == 1);

    CosetCoverInstance bad{s3, {{{parse_cycles("(1 2 3)", 3)}, Perm(3)}}};
    CHECK_FALSE(coset_cover_audit(bad).covers);
}

TEST_CASE("G-space automorphisms") {
    Group c5 = G({"(1 2 3 4 5)"}, 5);
    Group a = gspace_automorphisms(c5, 0);
    CHECK(a.order() == 5);
    Group s4 = G({"(1 2 3 4)", "(1 2)"}, 4);
    CHECK(gspace_automorphisms(s4, 0).order() == 1);
    CHECK(gspace_automorphisms(Group::trivial(1), 0).order() == 1);
    CHECK_THROWS_AS(gspace_automorphisms(G({"(1 2)"}, 3), 0), Error);

    // cross-check against the centralizer in Sym(n)
    std::vector<Group> groups{c5, G({"(1 2 3 4)", "(1 3)"}, 4), G({"(1 2)(3 4)", "(1 3)(2 4)"}, 4),
                              G({"(1 2 3 4 5 6)"}, 6), G({"(1 2 3)(4 5 6)", "(1 4)(2 6)(3 5)"}, 6)};
    for (const auto& g : groups) {
        std::set<oracle::Img> cent;
        for (const auto& f : oracle::all_perms(static_cast<int>(g.degree()))) {
            bool ok = true;
            for (const auto& s : g.generators())
                if (oracle::mul(f, s.images()) != oracle::mul(s.images(), f)) { ok = false; break; }
            if (ok) cent.insert(f);
        }
        Group au = gspace_automorphisms(g, 0);
        CHECK(as_set(au.elements().list) == cent);
        std::size_t stab = stabilizer(g, StabKind::Pointwise, {0}).order();
        std::size_t norm = 0;
        Group h = stabilizer(g, StabKind::Pointwise, {0});
        for (const auto& x : g.elements().list) {
            bool ok = true;
            for (const auto& s : h.generators())
                if (!h.contains(conjugate(s, x))) ok = false;
            if (ok) ++norm;
        }
        CHECK(au.order() == norm / stab);
    }
}

TEST_CASE("coset space isomorphism") {
    Group s3 = G({"(1 2 3)", "(1 2)"}, 3);
    Group h = G({"(1 2)"}, 3), k = G({"(2 3)"}, 3), a3 = G({"(1 2 3)"}, 3);
    auto x = coset_spaces_isomorphic(s3, h, k);
    REQUIRE(x);
    CHECK(conjugate(parse_cycles("(1 2)", 3), *x) == parse_cycles("(2 3)", 3));
    CHECK_FALSE(coset_spaces_isomorphic(s3, h, a3));
    auto same = coset_spaces_isomorphic(s3, h, h);
    REQUIRE(same);
    CHECK(same->is_identity());
    CHECK_THROWS_AS(coset_spaces_isomorphic(a3, h, h), Error);
}

TEST_CASE("normal closure") {
    Group s4 = G({"(1 2 3 4)", "(1 2)"}, 4);
    CHECK(normal_closure(s4, {parse_cycles("(1 2)(3 4)", 4)}).order() == 4);
    CHECK(normal_closure(s4, {parse_cycles("(1 2 3)", 4)}).order() == 12);
    CHECK(normal_closure(s4, {parse_cycles("(1 2)", 4)}).order() == 24);
    CHECK(is_normal(normal_closure(s4, {parse_cycles("(1 2 3)", 4)}), s4));
    CHECK_FALSE(is_normal(G({"(1 2)"}, 4), s4));
}
