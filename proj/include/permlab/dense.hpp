#pragma once

#include <optional>
#include <vector>

#include "permlab/rational.hpp"
#include "permlab/relation.hpp"

namespace permlab {

// Prefixes of enumerations of Q. Index order is enumeration order, not value order.
// 0, then each positive Calkin-Wilf term x followed by -x (x' = 1/(2 floor(x) - x + 1)).
std::vector<Rational> standard_rationals(std::size_t count);
// 1/2, 1/4, 3/4, 1/8, 3/8, ...
std::vector<Rational> dyadic_rationals(std::size_t count);

struct CantorStep {
    std::size_t source = 0;  // index into the source prefix
    std::size_t target = 0;  // index into the target prefix
    std::optional<Rational> lower, upper;  // open interval the target had to lie in
};

struct CantorResult {
    std::vector<CantorStep> steps;
    bool exhausted = false;  // some interval held no unused target
    std::optional<std::size_t> stuck_source;
    bool order_preserving = true;  // checked after every step
};

// Forth-only construction: each source item in turn goes to the least-index unused target
// lying in the interval cut out by the images already chosen.
CantorResult cantor_forth(const std::vector<Rational>& source, const std::vector<Rational>& target);

struct PiecewiseLinearMap {
    std::vector<Rational> alpha, beta;
};
PiecewiseLinearMap pl_automorphism(std::vector<Rational> alpha, std::vector<Rational> beta);
Rational evaluate(const PiecewiseLinearMap& m, const Rational& omega);
// The closed branches overlap at each breakpoint; all branches defined there must agree.
bool branches_agree(const PiecewiseLinearMap& m);

enum class OrderKind { Linear, Betweenness, Cyclic, Separation };
const char* order_kind_name(OrderKind k);
std::size_t order_kind_arity(OrderKind k);

// Strict linear order on {0..n-1} listing the points from least to greatest.
RelationK linear_order(const std::vector<Point>& ascending);
// Betweenness B(a;b,c), cyclic C(a,b,c), separation D(a,b;c,d) by direct definition.
RelationK derive_relation(const RelationK& order, OrderKind kind);

struct LocalCheck {
    bool ok = true;
    std::optional<PointSet> witness;  // least failing subset
    std::size_t subsets_checked = 0;
};
// Every restriction to a d-set (d = 3,4,4,5) must be a relation derived from some linear order.
LocalCheck local_characterization_check(const RelationK& r, OrderKind kind);

}  // namespace permlab
