#include "permlab/dense.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

Rational floor_of(const Rational& x) {
    BigInt n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
    BigInt q = n / d;
    if (n < 0 && q * d != n) q -= 1;
    return Rational(q);
}

// Ranks from a validated strict linear order; rank[p] = number of points below p.
std::vector<std::size_t> ranks_of(const RelationK& order) {
    if (order.arity() != 2) fail(ErrorKind::ArityMismatch, "a linear order is binary");
    const std::size_t n = order.domain_size();
    std::vector<std::size_t> rank(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Point pa = static_cast<Point>(a), pb = static_cast<Point>(b);
            bool ab = order.has({pa, pb}), ba = order.has({pb, pa});
            if (a == b && ab) fail(ErrorKind::NotLinearOrder, "order is not irreflexive");
            if (a != b && ab == ba) fail(ErrorKind::NotLinearOrder, "order is not total and asymmetric");
            if (ba) ++rank[a];
        }
    // a strict total tournament is transitive iff the ranks are a permutation
    std::vector<std::size_t> sorted = rank;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
        if (sorted[i] != i) fail(ErrorKind::NotLinearOrder, "order is not transitive");
    return rank;
}

bool d0(const std::vector<std::size_t>& r, Point a, Point b, Point c, Point d) {
    auto R = [&](Point p) { return r[static_cast<std::size_t>(p)]; };
    return (R(a) < R(c) && R(c) < R(b) && R(b) < R(d)) || (R(b) < R(c) && R(c) < R(a) && R(a) < R(d));
}

bool d1(const std::vector<std::size_t>& r, Point a, Point b, Point c, Point d) {
    return d0(r, a, b, c, d) || d0(r, a, b, d, c);
}

}  // namespace

std::vector<Rational> standard_rationals(std::size_t count) {
    std::vector<Rational> out;
    if (count == 0) return out;
    out.push_back(0);
    Rational x = 1;
    while (out.size() < count) {
        out.push_back(x);
        if (out.size() < count) out.push_back(-x);
        x = Rational(1) / (2 * floor_of(x) - x + 1);
    }
    return out;
}

std::vector<Rational> dyadic_rationals(std::size_t count) {
    std::vector<Rational> out;
    for (BigInt den = 2; out.size() < count; den *= 2)
        for (BigInt num = 1; num < den && out.size() < count; num += 2) out.emplace_back(num, den);
    return out;
}

CantorResult cantor_forth(const std::vector<Rational>& source, const std::vector<Rational>& target) {
    CantorResult res;
    std::map<Rational, Rational> phi;  // source value -> target value
    std::vector<bool> used(target.size(), false);
    for (std::size_t i = 0; i < source.size(); ++i) {
        const Rational& lam = source[i];
        if (phi.count(lam)) fail(ErrorKind::RepeatedPoint, "source enumeration repeats a value");
        std::optional<Rational> lo, hi;
        auto it = phi.lower_bound(lam);
        if (it != phi.end()) hi = it->second;
        if (it != phi.begin()) lo = std::prev(it)->second;
        std::optional<std::size_t> pick;
        for (std::size_t s = 0; s < target.size(); ++s) {
            if (used[s]) continue;
            if ((lo && !(target[s] > *lo)) || (hi && !(target[s] < *hi))) continue;
            pick = s;
            break;
        }
        if (!pick) {
            res.exhausted = true;
            res.stuck_source = i;
            break;
        }
        used[*pick] = true;
        phi.emplace(lam, target[*pick]);
        res.steps.push_back({i, *pick, lo, hi});
        // map iteration is in source order, so the images must increase strictly
        const Rational* prev = nullptr;
        for (const auto& [k, v] : phi) {
            if (prev && !(*prev < v)) res.order_preserving = false;
            prev = &v;
        }
    }
    return res;
}

PiecewiseLinearMap pl_automorphism(std::vector<Rational> alpha, std::vector<Rational> beta) {
    if (alpha.size() != beta.size()) fail(ErrorKind::LengthMismatch, "breakpoint lists differ in length");
    if (alpha.empty()) fail(ErrorKind::LengthMismatch, "need at least one breakpoint");
    for (std::size_t i = 1; i < alpha.size(); ++i)
        if (!(alpha[i - 1] < alpha[i]) || !(beta[i - 1] < beta[i]))
            fail(ErrorKind::NotAscending, "breakpoints must be strictly ascending");
    return {std::move(alpha), std::move(beta)};
}

namespace {

Rational middle_branch(const PiecewiseLinearMap& m, std::size_t i, const Rational& w) {
    return m.beta[i] + (w - m.alpha[i]) / (m.alpha[i + 1] - m.alpha[i]) * (m.beta[i + 1] - m.beta[i]);
}

}  // namespace

Rational evaluate(const PiecewiseLinearMap& m, const Rational& w) {
    if (w <= m.alpha.front()) return w + (m.beta.front() - m.alpha.front());
    if (w >= m.alpha.back()) return w + m.beta.back() - m.alpha.back();
    auto it = std::upper_bound(m.alpha.begin(), m.alpha.end(), w);
    std::size_t i = static_cast<std::size_t>(it - m.alpha.begin()) - 1;
    return middle_branch(m, i, w);
}

bool branches_agree(const PiecewiseLinearMap& m) {
    const std::size_t k = m.alpha.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& a = m.alpha[i];
        std::vector<Rational> vals;
        if (i == 0) vals.push_back(a + (m.beta.front() - m.alpha.front()));
        if (i + 1 == k) vals.push_back(a + m.beta.back() - m.alpha.back());
        if (i > 0) vals.push_back(middle_branch(m, i - 1, a));
        if (i + 1 < k) vals.push_back(middle_branch(m, i, a));
        for (const auto& v : vals)
            if (v != m.beta[i]) return false;
    }
    return true;
}

const char* order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::Linear: return "linear";
        case OrderKind::Betweenness: return "betweenness";
        case OrderKind::Cyclic: return "cyclic";
        case OrderKind::Separation: return "separation";
    }
    return "?";
}

std::size_t order_kind_arity(OrderKind k) {
    switch (k) {
        case OrderKind::Linear: return 2;
        case OrderKind::Betweenness:
        case OrderKind::Cyclic: return 3;
        case OrderKind::Separation: return 4;
    }
    return 0;
}

RelationK linear_order(const std::vector<Point>& ascending) {
    const std::size_t n = ascending.size();
    std::vector<bool> seen(n, false);
    for (Point p : ascending) {
        if (p < 0 || static_cast<std::size_t>(p) >= n) fail(ErrorKind::PointOutOfRange, "order lists a point outside the domain");
        if (seen[static_cast<std::size_t>(p)]) fail(ErrorKind::RepeatedPoint, "order lists a point twice");
        seen[static_cast<std::size_t>(p)] = true;
    }
    RelationK r(2, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) r.insert({ascending[i], ascending[j]});
    return r;
}

RelationK derive_relation(const RelationK& order, OrderKind kind) {
    auto rank = ranks_of(order);
    const std::size_t n = order.domain_size();
    const Point N = static_cast<Point>(n);
    auto R = [&](Point p) { return rank[static_cast<std::size_t>(p)]; };
    if (kind == OrderKind::Linear) return order;
    RelationK out(order_kind_arity(kind), n);
    for (Point a = 0; a < N; ++a)
        for (Point b = 0; b < N; ++b)
            for (Point c = 0; c < N; ++c) {
                if (kind == OrderKind::Betweenness) {
                    if ((R(b) < R(a) && R(a) < R(c)) || (R(c) < R(a) && R(a) < R(b))) out.insert({a, b, c});
                } else if (kind == OrderKind::Cyclic) {
                    if ((R(a) < R(b) && R(b) < R(c)) || (R(b) < R(c) && R(c) < R(a)) || (R(c) < R(a) && R(a) < R(b)))
                        out.insert({a, b, c});
                } else {
                    for (Point d = 0; d < N; ++d)
                        if (d1(rank, a, b, c, d) || d1(rank, c, d, a, b)) out.insert({a, b, c, d});
                }
            }
    return out;
}

LocalCheck local_characterization_check(const RelationK& r, OrderKind kind) {
    if (r.arity() != order_kind_arity(kind)) fail(ErrorKind::ArityMismatch, "relation arity does not match the kind");
    const std::size_t d = kind == OrderKind::Linear ? 3 : kind == OrderKind::Separation ? 5 : 4;
    // every relation of this kind on d points, from all d! linear orders; built once per kind
    static const auto catalogs = [] {
        std::map<OrderKind, std::set<std::vector<Tuple>>> all;
        for (OrderKind k : {OrderKind::Linear, OrderKind::Betweenness, OrderKind::Cyclic, OrderKind::Separation}) {
            std::size_t dk = k == OrderKind::Linear ? 3 : k == OrderKind::Separation ? 5 : 4;
            std::vector<Point> perm(dk);
            std::iota(perm.begin(), perm.end(), 0);
            do all[k].insert(derive_relation(linear_order(perm), k).tuples());
            while (std::next_permutation(perm.begin(), perm.end()));
        }
        return all;
    }();
    const auto& catalog = catalogs.at(kind);

    LocalCheck res;
    const std::size_t n = r.domain_size();
    if (n < d) return res;
    // d-subsets in lexicographic order, so the first failure is the least witness
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        PointSet delta;
        for (auto i : idx) delta.push_back(static_cast<Point>(i));
        ++res.subsets_checked;
        if (!catalog.count(r.restrict_to(delta).tuples())) {
            res.ok = false;
            res.witness = delta;
            return res;
        }
        std::size_t j = d;
        while (j-- > 0 && idx[j] == n - d + j) {}
        if (j == static_cast<std::size_t>(-1)) break;
        ++idx[j];
        for (std::size_t t = j + 1; t < d; ++t) idx[t] = idx[t - 1] + 1;
    }
    return res;
}

}  // namespace permlab
