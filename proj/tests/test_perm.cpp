#include "doctest.h"
#include "oracles.hpp"
#include "permlab/perm.hpp"

using namespace permlab;

TEST_CASE("parse cycle notation") {
    Perm p = parse_cycles("(1 2 3)(4 5)", 5);
    CHECK(p.images() == std::vector<Point>{1, 2, 0, 4, 3});
    CHECK(parse_cycles("()", 4).is_identity());
    CHECK(parse_cycles("", 4).is_identity());
    CHECK(parse_cycles("(1 2)(3)", 3).images() == std::vector<Point>{1, 0, 2});

    auto kind_of = [](auto&& fn) {
        try { fn(); } catch (const Error& e) { return e.kind(); }
        return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of([] { parse_cycles("(1 2)(2 3)", 3); }) == ErrorKind::RepeatedPoint);
    CHECK(kind_of([] { parse_cycles("(1 4)", 3); }) == ErrorKind::PointOutOfRange);
    CHECK(kind_of([] { parse_cycles("(0 1)", 3); }) == ErrorKind::PointOutOfRange);
    CHECK(kind_of([] { parse_cycles("(1 2", 3); }) == ErrorKind::MalformedSyntax);
    CHECK(kind_of([] { parse_cycles("1 2", 3); }) == ErrorKind::MalformedSyntax);
    CHECK(kind_of([] { parse_cycles("(1 x)", 3); }) == ErrorKind::MalformedSyntax);
}

TEST_CASE("canonical formatting round trip") {
    CHECK(format_cycles(parse_cycles("(3 1 2)(5 4)", 5)) == "(1 2 3)(4 5)");
    CHECK(format_cycles(Perm(6)) == "()");
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + static_cast<int>(rng() % 12);
        Perm f(oracle::random_perm(n, rng));
        std::string s = format_cycles(f);
        CHECK(parse_cycles(s, static_cast<std::size_t>(n)) == f);
        CHECK(format_cycles(parse_cycles(s, static_cast<std::size_t>(n))) == s);
    }
}

TEST_CASE("composition is left to right") {
    Perm a = parse_cycles("(1 2)", 3), b = parse_cycles("(2 3)", 3);
    CHECK(format_cycles(a * b) == "(1 3 2)");
    Perm p = parse_cycles("(1 4 2)(3 5)", 5);
    CHECK(Perm(5) * p == p);
    CHECK((p * p.inverse()).is_identity());
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 10);
        auto f = oracle::random_perm(n, rng), g = oracle::random_perm(n, rng);
        CHECK((Perm(f) * Perm(g)).images() == oracle::mul(f, g));
    }
    CHECK_THROWS_AS(compose(Perm(3), Perm(4)), Error);
}

TEST_CASE("support, fixed points and degree") {
    auto s = support_fix_degree(Perm(4));
    CHECK(s.support.empty());
    CHECK(s.fixed.size() == 4);
    CHECK(s.deg == 0);
    s = support_fix_degree(parse_cycles("(1 2 3)", 5));
    CHECK(s.support == PointSet{0, 1, 2});
    CHECK(s.fixed == PointSet{3, 4});
    CHECK(s.deg == 3);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + static_cast<int>(rng() % 10);
        Perm f(oracle::random_perm(n, rng)), g(oracle::random_perm(n, rng));
        // supp(g^-1 f g) = (supp f) g
        CHECK(support(conjugate(f, g)) == image_of(support(f), g));
        // supp(fg) within supp f union supp g
        PointSet u = support(f);
        for (Point p : support(g)) u.push_back(p);
        std::sort(u.begin(), u.end());
        for (Point p : support(f * g)) CHECK(std::binary_search(u.begin(), u.end(), p));
    }
}

TEST_CASE("cycle type") {
    CHECK(cycle_type(Perm(5)) == CycleType{{1, 5}});
    CHECK(cycle_type(parse_cycles("(1 2 3)(4 5)", 6)) == CycleType{{1, 1}, {2, 1}, {3, 1}});
    CHECK(format_cycle_type(cycle_type(parse_cycles("(1 2 3)(4 5)", 6))) == "1^1 2^1 3^1");
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + static_cast<int>(rng() % 10);
        Perm f(oracle::random_perm(n, rng)), g(oracle::random_perm(n, rng));
        CHECK(cycle_type(f) == cycle_type(conjugate(f, g)));
        std::size_t total = 0;
        for (auto [len, m] : cycle_type(f)) total += len * m;
        CHECK(total == static_cast<std::size_t>(n));
    }
}

TEST_CASE("conjugacy with witnesses") {
    auto r = is_conjugate(parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4));
    REQUIRE(r.conjugate);
    REQUIRE(r.witness);
    CHECK(conjugate(parse_cycles("(1 2)", 4), *r.witness) == parse_cycles("(3 4)", 4));
    CHECK(format_cycles(*r.witness) == "(1 3)(2 4)");
    CHECK_FALSE(is_conjugate(parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)).conjugate);
    Perm f = parse_cycles("(1 3)(2 5 4)", 5);
    auto self = is_conjugate(f, f);
    CHECK(self.conjugate);
    CHECK(self.witness->is_identity());
}

TEST_CASE("conjugacy agrees with brute-force search over Sym(n)") {
    for (int n = 1; n <= 5; ++n) {
        auto all = oracle::all_perms(n);
        for (const auto& f : all)
            for (const auto& g : all) {
                bool brute = false;
                for (const auto& h : all)
                    if (oracle::mul(oracle::mul(oracle::inv(h), f), h) == g) { brute = true; break; }
                auto r = is_conjugate(Perm(f), Perm(g));
                CHECK(r.conjugate == brute);
                if (r.conjugate) CHECK(conjugate(Perm(f), *r.witness) == Perm(g));
            }
    }
}

TEST_CASE("involution factorization examples") {
    auto [t1, t2] = involution_factorization(parse_cycles("(1 2 3)", 3));
    CHECK(format_cycles(t1) == "(2 3)");
    CHECK(format_cycles(t2) == "(1 2)");
    auto [u1, u2] = involution_factorization(parse_cycles("(1 2 3 4)", 4));
    CHECK(format_cycles(u1) == "(2 4)");
    CHECK(format_cycles(u2) == "(1 2)(3 4)");
    auto [i1, i2] = involution_factorization(Perm(4));
    CHECK(i1.is_identity());
    CHECK(i2.is_identity());
}

TEST_CASE("involution factorization holds for all of Sym(n), n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& f : oracle::all_perms(n)) {
            Perm pf(f);
            auto [t1, t2] = involution_factorization(pf);
            CHECK(oracle::mul(t1.images(), t1.images()) == oracle::id(n));
            CHECK(oracle::mul(t2.images(), t2.images()) == oracle::id(n));
            CHECK(oracle::mul(t1.images(), t2.images()) == f);
            auto s = support(pf);
            for (Point p : support(t1)) CHECK(std::binary_search(s.begin(), s.end(), p));
            for (Point p : support(t2)) CHECK(std::binary_search(s.begin(), s.end(), p));
        }
}
