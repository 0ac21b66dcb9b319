#include <deque>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "permlab/dense.hpp"
#include "permlab/group.hpp"

using namespace permlab;

namespace {

// Calkin-Wilf order straight from the tree: a/b has children a/(a+b) and (a+b)/b.
std::vector<Rational> calkin_wilf_bfs(std::size_t count) {
    std::vector<Rational> out;
    std::deque<std::pair<long, long>> q{{1, 1}};
    while (out.size() < count) {
        auto [a, b] = q.front();
        q.pop_front();
        out.emplace_back(a, b);
        q.emplace_back(a, a + b);
        q.emplace_back(a + b, b);
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-200, 200), den(1, 17);
    return Rational(num(rng), den(rng));
}

std::vector<Point> iota_order(std::size_t n) {
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

TEST_CASE("standard enumeration of Q") {
    auto q = standard_rationals(41);
    auto cw = calkin_wilf_bfs(20);
    CHECK(q[0] == 0);
    for (std::size_t i = 0; i < 20; ++i) {
        CHECK(q[1 + 2 * i] == cw[i]);
        CHECK(q[2 + 2 * i] == -cw[i]);
    }
    std::set<Rational> distinct(q.begin(), q.end());
    CHECK(distinct.size() == q.size());
    auto d = dyadic_rationals(7);
    CHECK(d == std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(3, 4), Rational(1, 8), Rational(3, 8),
                                     Rational(5, 8), Rational(7, 8)});
}

TEST_CASE("Cantor forth on identical prefixes is the identity") {
    auto q = standard_rationals(100);
    auto r = cantor_forth(q, q);
    CHECK_FALSE(r.exhausted);
    REQUIRE(r.steps.size() == 100);
    for (const auto& s : r.steps) CHECK(s.source == s.target);
    CHECK(r.order_preserving);

    auto one = cantor_forth({Rational(5)}, {Rational(-3)});
    REQUIRE(one.steps.size() == 1);
    CHECK(one.steps[0].target == 0);
}

TEST_CASE("Cantor forth from dyadics into Q") {
    auto src = dyadic_rationals(50);
    auto tgt = standard_rationals(4000);
    auto r = cantor_forth(src, tgt);
    CHECK_FALSE(r.exhausted);
    REQUIRE(r.steps.size() == 50);
    CHECK(r.order_preserving);
    // pairwise order check and injectivity, recomputed independently of the trace invariant
    std::set<std::size_t> hit;
    for (const auto& a : r.steps) {
        hit.insert(a.target);
        for (const auto& b : r.steps)
            if (src[a.source] < src[b.source]) CHECK(tgt[a.target] < tgt[b.target]);
    }
    CHECK(hit.size() == 50);
    for (std::size_t i = 0; i < 5; ++i) CHECK(hit.count(i));
    // first steps by hand: 1/2 -> 0, 1/4 -> -1, 3/4 -> 1
    CHECK(tgt[r.steps[0].target] == 0);
    CHECK(tgt[r.steps[1].target] == -1);
    CHECK(tgt[r.steps[2].target] == 1);
}

TEST_CASE("Cantor forth reports exhaustion") {
    // the only target above 0 is gone after the first two steps
    auto r = cantor_forth({Rational(0), Rational(1), Rational(2)}, {Rational(0), Rational(1), Rational(-1)});
    CHECK(r.exhausted);
    REQUIRE(r.stuck_source);
    CHECK(*r.stuck_source == 2);
    CHECK(r.steps.size() == 2);
}

TEST_CASE("piecewise linear automorphisms") {
    auto id = pl_automorphism({Rational(0)}, {Rational(0)});
    CHECK(evaluate(id, Rational(-7, 3)) == Rational(-7, 3));
    CHECK(evaluate(id, Rational(9)) == 9);
    auto m = pl_automorphism({Rational(0), Rational(1)}, {Rational(0), Rational(2)});
    CHECK(evaluate(m, Rational(1, 2)) == 1);
    CHECK(evaluate(m, Rational(3)) == 4);
    CHECK(evaluate(m, Rational(-1)) == -1);
    CHECK_THROWS_AS(pl_automorphism({Rational(1), Rational(0)}, {Rational(0), Rational(1)}), Error);
    CHECK_THROWS_AS(pl_automorphism({Rational(0)}, {Rational(0), Rational(1)}), Error);

    std::mt19937_64 rng(14);
    for (int inst = 0; inst < 100; ++inst) {
        std::size_t k = 1 + rng() % 6;
        std::set<Rational> a, b;
        while (a.size() < k) a.insert(random_rational(rng));
        while (b.size() < k) b.insert(random_rational(rng));
        auto f = pl_automorphism({a.begin(), a.end()}, {b.begin(), b.end()});
        for (std::size_t i = 0; i < k; ++i) CHECK(evaluate(f, f.alpha[i]) == f.beta[i]);
        CHECK(branches_agree(f));
        std::vector<Rational> pts;
        for (int j = 0; j < 100; ++j) pts.push_back(random_rational(rng));
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        for (std::size_t j = 1; j < pts.size(); ++j) CHECK(evaluate(f, pts[j - 1]) < evaluate(f, pts[j]));
    }
}

TEST_CASE("relations derived from a linear order") {
    auto o3 = linear_order({0, 1, 2});
    auto b = derive_relation(o3, OrderKind::Betweenness);
    CHECK(b.tuples() == std::vector<Tuple>{{1, 0, 2}, {1, 2, 0}});
    auto d = derive_relation(linear_order({0, 1, 2, 3}), OrderKind::Separation);
    CHECK(d.has({0, 2, 1, 3}));
    CHECK_FALSE(d.has({0, 1, 2, 3}));
    CHECK(d.size() == 8);
    CHECK(derive_relation(linear_order({0, 1}), OrderKind::Betweenness).size() == 0);
    auto c = derive_relation(linear_order({0, 1, 2}), OrderKind::Cyclic);
    CHECK(c.tuples() == std::vector<Tuple>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    CHECK(to_json_text(b) == "[[2,1,3],[2,3,1]]");

    RelationK bad(2, 3);
    bad.insert({0, 1});
    bad.insert({1, 2});
    bad.insert({2, 0});
    CHECK_THROWS_AS(derive_relation(bad, OrderKind::Cyclic), Error);
}

TEST_CASE("local characterization accepts every derived relation") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto perm = iota_order(n);
        do {
            auto lin = linear_order(perm);
            CHECK(local_characterization_check(lin, OrderKind::Linear).ok);
            for (OrderKind k : {OrderKind::Betweenness, OrderKind::Cyclic, OrderKind::Separation})
                CHECK(local_characterization_check(derive_relation(lin, k), k).ok);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("local characterization finds the least bad subset") {
    auto c = derive_relation(linear_order(iota_order(5)), OrderKind::Cyclic);
    c.erase({0, 1, 3});
    auto r = local_characterization_check(c, OrderKind::Cyclic);
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness);
    CHECK(r.witness->size() == 4);
    CHECK(*r.witness == PointSet{0, 1, 2, 3});
    CHECK(local_characterization_check(RelationK(3, 2), OrderKind::Betweenness).ok);
    CHECK_THROWS_AS(local_characterization_check(RelationK(2, 4), OrderKind::Cyclic), Error);
}

TEST_CASE("cyclic and dihedral symmetries preserve the derived relations") {
    for (std::size_t n = 3; n <= 7; ++n) {
        auto lin = linear_order(iota_order(n));
        auto cyc = derive_relation(lin, OrderKind::Cyclic);
        auto sep = derive_relation(lin, OrderKind::Separation);
        std::vector<Point> step(n);
        for (std::size_t i = 0; i < n; ++i) step[i] = static_cast<Point>((i + 1) % n);
        Perm rot(step);
        std::vector<Point> rev(n);
        for (std::size_t i = 0; i < n; ++i) rev[i] = static_cast<Point>(n - 1 - i);
        Perm refl(rev);
        CHECK(cyc.relabel(rot) == cyc);
        CHECK(sep.relabel(rot) == sep);
        CHECK(sep.relabel(refl) == sep);
        // a reflection reverses cyclic orientation
        CHECK_FALSE(cyc.relabel(refl) == cyc);
    }
}
