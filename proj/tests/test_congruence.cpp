#include "doctest.h"
#include "oracles.hpp"
#include "permlab/congruence.hpp"

using namespace permlab;

namespace {

Group G(std::vector<std::string> gens, std::size_t n) { return Group::from_cycles(gens, n); }

std::vector<PointSet> blocks(std::vector<std::vector<int>> one_based) {
    std::vector<PointSet> out;
    for (auto& b : one_based) {
        PointSet s;
        for (int x : b) s.push_back(x - 1);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every set partition of {0..n-1} as a label vector (restricted growth strings).
void set_partitions(int n, std::vector<int>& cur, int next, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    for (int l = 0; l <= next; ++l) {
        cur.push_back(l);
        set_partitions(n, cur, std::max(next, l + 1), out);
        cur.pop_back();
    }
}

// Congruences by testing every partition against every group element.
std::set<std::vector<PointSet>> brute_congruences(int n, const std::set<oracle::Img>& elems) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    set_partitions(n, cur, 0, all);
    std::set<std::vector<PointSet>> out;
    for (const auto& lab : all) {
        bool ok = true;
        for (const auto& g : elems) {
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    if (lab[static_cast<std::size_t>(a)] == lab[static_cast<std::size_t>(b)] &&
                        lab[static_cast<std::size_t>(g[static_cast<std::size_t>(a)])] !=
                            lab[static_cast<std::size_t>(g[static_cast<std::size_t>(b)])])
                        ok = false;
            if (!ok) break;
        }
        if (ok) {
            std::map<int, PointSet> by;
            for (int i = 0; i < n; ++i) by[lab[static_cast<std::size_t>(i)]].push_back(i);
            std::vector<PointSet> bl;
            for (auto& [k, v] : by) bl.push_back(v);
            std::sort(bl.begin(), bl.end());
            out.insert(bl);
        }
    }
    return out;
}

std::set<oracle::Img> elems_of(const Group& g) {
    std::set<oracle::Img> s;
    for (const auto& x : g.elements().list) s.insert(x.images());
    return s;
}

std::vector<Group> small_transitive_groups() {
    return {
        G({"(1 2 3 4)"}, 4),
        G({"(1 2 3 4)", "(1 3)"}, 4),
        G({"(1 2 3 4)", "(1 2)"}, 4),
        G({"(1 2 3)(4 5 6)", "(1 4)"}, 6),
        G({"(1 2 3 4 5 6)"}, 6),
        G({"(1 2 3 4 5 6)", "(2 6)(3 5)"}, 6),
        G({"(1 2 3 4 5)"}, 5),
        G({"(1 2 3 4 5)", "(2 5)(3 4)"}, 5),
        G({"(1 2)(3 4)", "(1 3)(2 4)"}, 4),
        G({"(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)"}, 6),
        G({"(1 2 3)(4 5 6)", "(1 4)(2 6)(3 5)"}, 6),
    };
}

}  // namespace

TEST_CASE("minimal congruences") {
    Group c4 = G({"(1 2 3 4)"}, 4);
    CHECK(minimal_congruence_identifying(c4, 0, 2).blocks == blocks({{1, 3}, {2, 4}}));
    CHECK(minimal_congruence_identifying(c4, 0, 1).is_universal());
    CHECK(minimal_congruence_identifying(G({"(1 2 3 4)", "(1 2)"}, 4), 0, 1).is_universal());
    CHECK(minimal_congruence_identifying(c4, 2, 2).is_discrete());
    CHECK_THROWS_AS(minimal_congruence_identifying(G({"(1 2)"}, 3), 0, 1), Error);

    // the minimal congruence is the finest brute-force congruence identifying the pair
    for (const Group& g : small_transitive_groups()) {
        int n = static_cast<int>(g.degree());
        auto all = brute_congruences(n, elems_of(g));
        for (int b = 0; b < n; ++b) {
            Partition p = minimal_congruence_identifying(g, 0, b);
            CHECK(is_congruence(g, p));
            CHECK(all.count(p.blocks));
            for (const auto& q : all) {
                Partition qp = Partition::from_blocks(g.degree(), q);
                if (qp.same_block(0, b)) CHECK(p.refines(qp));
            }
        }
    }
}

TEST_CASE("all congruences match a brute-force partition scan") {
    for (const Group& g : small_transitive_groups()) {
        auto want = brute_congruences(static_cast<int>(g.degree()), elems_of(g));
        std::set<std::vector<PointSet>> got;
        for (const auto& p : all_congruences(g)) got.insert(p.blocks);
        CHECK(got == want);
    }
}

TEST_CASE("primitivity by two routes") {
    CHECK(is_primitive(G({"(1 2 3 4 5)"}, 5)).primitive);
    auto c4 = is_primitive(G({"(1 2 3 4)"}, 4));
    CHECK_FALSE(c4.primitive);
    CHECK(c4.agree);
    REQUIRE(c4.witness);
    CHECK(c4.witness->blocks == blocks({{1, 3}, {2, 4}}));
    for (std::size_t n = 2; n <= 7; ++n) {
        std::string cyc = "(";
        for (std::size_t i = 1; i <= n; ++i) cyc += std::to_string(i) + (i < n ? " " : ")");
        CHECK(is_primitive(G({cyc, "(1 2)"}, n)).primitive);
    }
    CHECK_THROWS_AS(is_primitive(G({"(1 2)"}, 4)), Error);
    CHECK_THROWS_AS(is_primitive(Group::trivial(1)), Error);

    for (const Group& g : small_transitive_groups()) {
        auto r = is_primitive(g);
        CHECK(r.agree);
        // primitive iff only the two trivial congruences
        CHECK(r.primitive == (brute_congruences(static_cast<int>(g.degree()), elems_of(g)).size() == 2));
    }
}

TEST_CASE("suborbits and pairing") {
    auto c3 = suborbits(G({"(1 2 3)"}, 3), 0);
    CHECK(c3.suborbits == std::vector<PointSet>{{0}, {1}, {2}});
    CHECK(c3.paired == std::vector<std::size_t>{0, 2, 1});
    auto s4 = suborbits(G({"(1 2 3 4)", "(1 2)"}, 4), 0);
    CHECK(s4.suborbits == std::vector<PointSet>{{0}, {1, 2, 3}});
    CHECK(s4.paired == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(suborbits(G({"(1 2)"}, 3), 0), Error);

    // pairing oracle: Gamma* = {beta : (beta, alpha) lies in the orbital of (alpha, gamma)}
    for (const Group& g : small_transitive_groups()) {
        auto s = suborbits(g, 0);
        auto el = g.elements().list;
        for (std::size_t i = 0; i < s.suborbits.size(); ++i) {
            Point gamma = s.suborbits[i].front();
            std::set<Point> star;
            for (const auto& x : el)
                if (x(gamma) == 0) star.insert(x(0));
            const auto& paired = s.suborbits[s.paired[i]];
            CHECK(std::set<Point>(paired.begin(), paired.end()) == star);
        }
    }
}

TEST_CASE("subdegree identities") {
    auto d4 = subdegree_check(G({"(1 2 3 4)", "(1 3)"}, 4));
    CHECK(d4.subdegrees == std::vector<std::size_t>{1, 1, 2});
    CHECK(d4.paired_lengths_equal);
    CHECK(d4.index_identity);
    CHECK(subdegree_check(G({"(1 2 3 4 5 6)"}, 6)).subdegrees == std::vector<std::size_t>(6, 1));
    CHECK(subdegree_check(G({"(1 2 3 4)", "(1 2)"}, 4)).subdegrees == std::vector<std::size_t>{1, 3});
    for (const Group& g : small_transitive_groups()) {
        auto r = subdegree_check(g);
        CHECK(r.paired_lengths_equal);
        CHECK(r.index_identity);
    }
}

TEST_CASE("orbital graphs") {
    Group c5 = G({"(1 2 3 4 5)"}, 5);
    auto r = orbital_graph(c5, orbital_of(c5, 0, 1));
    CHECK(r.edges.size() == 5);
    CHECK(r.weakly_connected);
    CHECK(r.valency == 2);
    CHECK(r.spheres == std::vector<std::size_t>{1, 2, 2});
    CHECK(r.sphere_bound_holds);
    CHECK(r.dot.find("1 -> 2;") != std::string::npos);

    Group d4 = G({"(1 2 3 4)", "(1 3)"}, 4);
    auto dr = orbital_graph(d4, orbital_of(d4, 0, 2));
    CHECK(dr.edges == std::vector<std::pair<Point, Point>>{{0, 2}, {1, 3}, {2, 0}, {3, 1}});
    CHECK_FALSE(dr.weakly_connected);
    CHECK(dr.valency == 1);
    CHECK(dr.spheres == std::vector<std::size_t>{1, 1});
    CHECK(dr.sphere_bound_holds);
    CHECK_FALSE(dr.stated_bound_holds);

    Group s4 = G({"(1 2 3 4)", "(1 2)"}, 4);
    CHECK(orbital_graph(s4, orbital_of(s4, 0, 1)).edges.size() == 12);
    CHECK_THROWS_AS(orbital_graph(s4, orbital_of(s4, 1, 1)), Error);

    for (const Group& g : small_transitive_groups()) {
        std::size_t total = 0;
        for (const auto& o : orbitals(g)) {
            total += o.pairs.size();
            if (o.diagonal()) continue;
            auto og = orbital_graph(g, o);
            CHECK(og.sphere_bound_holds);
            CHECK(og.stated_bound_holds == (og.valency >= 2));
        }
        CHECK(total == g.degree() * g.degree());
    }
}

TEST_CASE("semiblocks and strong primitivity") {
    auto c4 = semiblocks(G({"(1 2 3 4)"}, 4), 0);
    CHECK(c4 == std::vector<PointSet>{{0}, {0, 2}, {0, 1, 2, 3}});
    CHECK(semiblocks(G({"(1 2 3 4)", "(1 2)"}, 4), 0) == std::vector<PointSet>{{0}, {0, 1, 2, 3}});

    for (const Group& g : small_transitive_groups()) {
        auto sb = semiblocks(g, 0);
        // brute force over all subsets containing 0
        std::size_t n = g.degree();
        std::vector<PointSet> brute;
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); mask += 2) {
            PointSet s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(static_cast<Point>(i));
            bool ok = true;
            for (const auto& x : g.elements().list) {
                if (!(mask >> x(0) & 1)) continue;
                for (Point p : s)
                    if (!(mask >> x(p) & 1)) ok = false;
            }
            if (ok) brute.push_back(s);
        }
        std::sort(brute.begin(), brute.end(), [](const PointSet& a, const PointSet& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        CHECK(sb == brute);
        // closed under intersection
        for (const auto& a : sb)
            for (const auto& b : sb) {
                PointSet c;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
                CHECK(std::find(sb.begin(), sb.end(), c) != sb.end());
            }
        CHECK(is_strongly_primitive(g) == is_primitive(g).primitive);
    }
}

TEST_CASE("congruences correspond to overgroups of the stabilizer") {
    auto c4 = congruence_subgroup_correspondence(G({"(1 2 3 4)"}, 4), 0);
    CHECK(c4.congruences.size() == 3);
    CHECK(c4.overgroups.size() == 3);
    CHECK(c4.bijective);
    CHECK(c4.order_preserving);
    auto c6 = congruence_subgroup_correspondence(G({"(1 2 3 4 5 6)"}, 6), 0);
    CHECK(c6.congruences.size() == 4);
    CHECK(c6.overgroups.size() == 4);
    CHECK(c6.bijective);
    auto s4 = congruence_subgroup_correspondence(G({"(1 2 3 4)", "(1 2)"}, 4), 0);
    CHECK(s4.congruences.size() == 2);
    CHECK(s4.overgroups.size() == 2);
    for (const Group& g : small_transitive_groups()) {
        auto r = congruence_subgroup_correspondence(g, 0);
        CHECK(r.bijective);
        CHECK(r.order_preserving);
        // every overgroup is closed under products (oracle on raw images)
        auto el = g.elements().list;
        for (const auto& h : r.overgroups) {
            std::set<oracle::Img> hs;
            for (std::size_t i : h) hs.insert(el[i].images());
            for (const auto& a : hs)
                for (const auto& b : hs) CHECK(hs.count(oracle::mul(a, b)));
        }
    }
}

TEST_CASE("Bergman-Lenstra decomposition") {
    auto d4 = bergman_lenstra(G({"(1 2 3 4)", "(1 3)"}, 4));
    CHECK(d4.m == 2);
    CHECK(d4.m0 == 1);
    CHECK(d4.phi == PointSet{0, 1});
    CHECK(d4.rho.is_discrete());
    CHECK(d4.quotient_stab_order == 2);
    CHECK(d4.quotient_stab_order <= d4.m);
    CHECK(d4.n_normal);
    CHECK(d4.stab_bound_holds);

    auto c6 = bergman_lenstra(G({"(1 2 3 4 5 6)"}, 6));
    CHECK(c6.m0 == 1);
    CHECK(c6.n_elements.size() == 1);
    CHECK(c6.rho.is_discrete());

    auto wr = bergman_lenstra(G({"(1 2)", "(1 3 5)(2 4 6)"}, 6));
    CHECK(wr.n_is_subgroup);
    CHECK(wr.n_normal);
    CHECK(wr.classes_within_m);

    for (const Group& g : small_transitive_groups()) {
        auto r = bergman_lenstra(g);
        CHECK(r.n_is_subgroup);
        CHECK(r.n_normal);
        CHECK(r.classes_within_m);
        CHECK(r.stab_bound_holds);
        // m0 oracle: least over nonempty subsets of the largest orbit of the pointwise stabilizer
        std::size_t n = g.degree(), best = n + 1;
        auto el = oracle::images_of(g.elements().list);
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            std::vector<oracle::Img> fix;
            for (const auto& x : el) {
                bool ok = true;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1 && x[i] != static_cast<int>(i)) ok = false;
                if (ok) fix.push_back(x);
            }
            std::size_t mx = 0;
            for (std::size_t p = 0; p < n; ++p) mx = std::max(mx, oracle::point_orbit(fix, static_cast<int>(p)).size());
            best = std::min(best, mx);
        }
        CHECK(r.m0 == best);
    }
}

TEST_CASE("normal subgroup audit") {
    auto s4 = normal_subgroup_audit(G({"(1 2 3 4)", "(1 2)"}, 4));
    std::vector<std::size_t> orders;
    for (const auto& n : s4.normals) orders.push_back(n.order);
    CHECK(orders == std::vector<std::size_t>{1, 4, 12, 24});
    CHECK(s4.primitive);
    CHECK(s4.normals[1].transitive);
    CHECK(s4.normals[1].abelian);
    CHECK(s4.normals[1].regular);
    CHECK(s4.normals[2].transitive);
    CHECK(s4.transitivity_holds);
    CHECK(s4.abelian_regular_holds);

    auto d4 = normal_subgroup_audit(G({"(1 2 3 4)", "(1 3)"}, 4));
    CHECK(d4.subdegrees_at_most_two);
    CHECK(d4.dichotomy_holds);

    auto a5 = normal_subgroup_audit(G({"(1 2 3 4 5)", "(1 2 3)"}, 5));
    CHECK(a5.normals.size() == 2);

    for (const Group& g : small_transitive_groups()) {
        auto r = normal_subgroup_audit(g);
        CHECK(r.transitivity_holds);
        CHECK(r.abelian_regular_holds);
        CHECK(r.dichotomy_holds);
        // each reported subgroup is normal (oracle conjugation on raw images)
        auto el = oracle::images_of(g.elements().list);
        for (const auto& n : r.normals) {
            auto ns = oracle::naive_closure(static_cast<int>(g.degree()), oracle::images_of(n.generators));
            CHECK(ns.size() == n.order);
            for (const auto& x : el)
                for (const auto& y : ns) CHECK(ns.count(oracle::mul(oracle::mul(oracle::inv(x), y), x)));
        }
    }
}

TEST_CASE("conjugacy classes partition the group") {
    Group s4 = G({"(1 2 3 4)", "(1 2)"}, 4);
    auto cls = conjugacy_classes(s4);
    std::vector<std::size_t> sizes;
    for (const auto& c : cls) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 6, 6, 8});
}

TEST_CASE("primitive with a trivial nontrivial suborbit forces prime cyclic regular") {
    std::vector<Group> gs = small_transitive_groups();
    gs.push_back(G({"(1 2 3 4 5 6 7)"}, 7));
    gs.push_back(G({"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"}, 7));
    for (const Group& g : gs) {
        auto s = suborbits(g, 0);
        bool short_one = false;
        for (std::size_t i = 1; i < s.suborbits.size(); ++i)
            if (s.suborbits[i].size() == 1) short_one = true;
        if (!(is_primitive(g).primitive && short_one)) continue;
        std::size_t n = g.degree();
        bool prime = n >= 2;
        for (std::size_t d = 2; d * d <= n; ++d)
            if (n % d == 0) prime = false;
        CHECK(prime);
        CHECK(g.order() == n);
    }
    for (const Group& g : gs) CHECK(finite_suborbit_relation_is_equivalence(g));
}
