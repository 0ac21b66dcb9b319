#include "permlab/group.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>

namespace permlab {

namespace {
std::atomic<std::size_t> g_default_cap{200000};
}

std::size_t default_cap() { return g_default_cap.load(); }
void set_default_cap(std::size_t cap) {
    if (cap == 0) fail(ErrorKind::InvalidArgument, "cap must be positive");
    g_default_cap.store(cap);
}

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt p(text.substr(0, slash)), q(text.substr(slash + 1));
        if (q == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        fail(ErrorKind::MalformedSyntax, "bad rational '" + text + "'");
    }
}

std::optional<std::size_t> Elements::find(const Perm& p) const {
    auto it = index.find(p);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

Elements closure(std::size_t degree, const std::vector<Perm>& gens, std::size_t cap) {
    Elements e;
    e.list.push_back(Perm(degree));
    e.index.emplace(e.list.back(), 0);
    for (std::size_t i = 0; i < e.list.size(); ++i) {
        for (const auto& g : gens) {
            Perm y = e.list[i] * g;
            if (e.index.count(y)) continue;
            if (e.list.size() >= cap)
                fail(ErrorKind::CapExceeded,
                     "group has more than " + std::to_string(cap) + " elements");
            e.index.emplace(y, static_cast<std::uint32_t>(e.list.size()));
            e.list.push_back(std::move(y));
        }
    }
    return e;
}

struct Group::Cache {
    std::mutex m;
    std::shared_ptr<const Elements> elems;
};

Group::Group(std::size_t degree, std::vector<Perm> gens)
    : n_(degree), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        if (g.degree() != n_) fail(ErrorKind::DegreeMismatch, "generator degree differs from group degree");
}

Group Group::from_cycles(const std::vector<std::string>& cycles, std::size_t degree) {
    std::vector<Perm> gens;
    for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
    return Group(degree, std::move(gens));
}

const Elements& Group::elements(std::size_t cap) const {
    std::lock_guard<std::mutex> lock(cache_->m);
    if (!cache_->elems || cache_->elems->size() > cap) {
        if (cache_->elems && cache_->elems->size() > cap)
            fail(ErrorKind::CapExceeded,
                 "group has more than " + std::to_string(cap) + " elements");
        cache_->elems = std::make_shared<const Elements>(closure(n_, gens_, cap));
    }
    return *cache_->elems;
}

bool Group::contains(const Perm& p, std::size_t cap) const {
    if (p.degree() != n_) return false;
    return elements(cap).contains(p);
}

Group group_from_elements(std::size_t degree, const std::vector<Perm>& elems) {
    std::vector<Perm> gens;
    Elements cur = closure(degree, gens, elems.size() + 1);
    for (const auto& e : elems) {
        if (cur.size() == elems.size()) break;
        if (cur.contains(e)) continue;
        gens.push_back(e);
        cur = closure(degree, gens, elems.size() + 1);
    }
    return Group(degree, std::move(gens));
}

OrbitResult orbit(const Group& g, Point alpha) {
    if (alpha < 0 || static_cast<std::size_t>(alpha) >= g.degree())
        fail(ErrorKind::PointOutOfRange, "orbit: point out of range");
    OrbitResult r;
    r.bfs_order.push_back(alpha);
    r.words[alpha] = {};
    r.transversal.emplace(alpha, Perm(g.degree()));
    for (std::size_t i = 0; i < r.bfs_order.size(); ++i) {
        Point b = r.bfs_order[i];
        for (std::size_t s = 0; s < g.generators().size(); ++s) {
            Point c = g.generators()[s](b);
            if (r.words.count(c)) continue;
            Word w = r.words[b];
            w.push_back(static_cast<int>(s));
            r.words[c] = std::move(w);
            r.transversal.emplace(c, r.transversal.at(b) * g.generators()[s]);
            r.bfs_order.push_back(c);
        }
    }
    r.orbit = r.bfs_order;
    std::sort(r.orbit.begin(), r.orbit.end());
    return r;
}

std::vector<PointSet> orbits(const Group& g) {
    std::vector<PointSet> out;
    std::vector<char> seen(g.degree(), 0);
    for (std::size_t p = 0; p < g.degree(); ++p) {
        if (seen[p]) continue;
        PointSet o = orbit(g, static_cast<Point>(p)).orbit;
        for (Point q : o) seen[static_cast<std::size_t>(q)] = 1;
        out.push_back(std::move(o));
    }
    return out;
}

bool is_transitive(const Group& g) {
    return g.degree() > 0 && orbit(g, 0).orbit.size() == g.degree();
}

Perm evaluate_word(const Group& g, const Word& w) {
    Perm p(g.degree());
    for (int s : w) p = p * g.generators().at(static_cast<std::size_t>(s));
    return p;
}

const Elements& enumerate_elements(const Group& g, std::size_t cap) {
    if (cap == 0) fail(ErrorKind::InvalidArgument, "cap must be at least 1");
    return g.elements(cap);
}

Group point_stabilizer(const Group& g, Point alpha) {
    OrbitResult o = orbit(g, alpha);
    std::set<Perm> gens;
    for (Point b : o.bfs_order) {
        const Perm& ub = o.transversal.at(b);
        for (const auto& s : g.generators()) {
            Point c = s(b);
            Perm sg = ub * s * o.transversal.at(c).inverse();
            if (!sg.is_identity()) gens.insert(std::move(sg));
        }
    }
    return Group(g.degree(), std::vector<Perm>(gens.begin(), gens.end()));
}

std::vector<Perm> filter_pointwise(const std::vector<Perm>& elems, const PointSet& s) {
    std::vector<Perm> out;
    for (const auto& e : elems) {
        bool ok = true;
        for (Point p : s)
            if (e(p) != p) { ok = false; break; }
        if (ok) out.push_back(e);
    }
    return out;
}

Group stabilizer(const Group& g, StabKind kind, const PointSet& arg, std::size_t cap) {
    for (Point p : arg)
        if (p < 0 || static_cast<std::size_t>(p) >= g.degree())
            fail(ErrorKind::PointOutOfRange, "stabilizer: point out of range");
    if (kind == StabKind::Point) {
        if (arg.size() != 1) fail(ErrorKind::InvalidArgument, "point stabilizer needs one point");
        return point_stabilizer(g, arg[0]);
    }
    if (arg.empty() && kind == StabKind::Pointwise) return g;
    const auto& el = g.elements(cap).list;
    std::vector<Perm> keep;
    if (kind == StabKind::Pointwise) {
        keep = filter_pointwise(el, arg);
    } else {
        std::vector<char> in(g.degree(), 0);
        for (Point p : arg) in[static_cast<std::size_t>(p)] = 1;
        for (const auto& e : el) {
            bool ok = true;
            for (Point p : arg)
                if (!in[static_cast<std::size_t>(e(p))]) { ok = false; break; }
            if (ok) keep.push_back(e);
        }
    }
    return group_from_elements(g.degree(), keep);
}

namespace {

std::size_t falling(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= (n - i);
        if (r > (std::size_t(1) << 40)) return r;
    }
    return r;
}

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void gen_tuples(std::size_t n, std::size_t k, std::vector<Point>& cur, std::vector<char>& used,
                std::vector<std::vector<Point>>& out) {
    if (cur.size() == k) { out.push_back(cur); return; }
    for (std::size_t p = 0; p < n; ++p) {
        if (used[p]) continue;
        used[p] = 1;
        cur.push_back(static_cast<Point>(p));
        gen_tuples(n, k, cur, used, out);
        cur.pop_back();
        used[p] = 0;
    }
}

void gen_subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<Point>& cur,
                 std::vector<std::vector<Point>>& out) {
    if (cur.size() == k) { out.push_back(cur); return; }
    for (std::size_t p = from; p + (k - cur.size()) <= n; ++p) {
        cur.push_back(static_cast<Point>(p));
        gen_subsets(n, k, p + 1, cur, out);
        cur.pop_back();
    }
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        if (a < b) std::swap(a, b);
        parent[a] = b;
        return true;
    }
};

}  // namespace

InducedAction induced_action(const Group& g, InducedKind kind, std::size_t k, std::size_t cap) {
    const std::size_t n = g.degree();
    if (k > n) fail(ErrorKind::OutOfRange, "induced action: k exceeds degree");
    std::size_t size = kind == InducedKind::Tuples ? falling(n, k) : binom(n, k);
    if (size > cap) fail(ErrorKind::CapExceeded, "derived domain exceeds cap");
    InducedAction ia;
    std::vector<Point> cur;
    if (kind == InducedKind::Tuples) {
        std::vector<char> used(n, 0);
        gen_tuples(n, k, cur, used, ia.items);
    } else {
        gen_subsets(n, k, 0, cur, ia.items);
    }
    for (std::size_t i = 0; i < ia.items.size(); ++i)
        ia.index.emplace(ia.items[i], static_cast<Point>(i));
    std::vector<Perm> gens;
    for (const auto& s : g.generators()) {
        std::vector<Point> img(ia.items.size());
        for (std::size_t i = 0; i < ia.items.size(); ++i) {
            std::vector<Point> t;
            for (Point p : ia.items[i]) t.push_back(s(p));
            if (kind == InducedKind::Subsets) std::sort(t.begin(), t.end());
            img[i] = ia.index.at(t);
        }
        gens.emplace_back(std::move(img));
    }
    ia.group = Group(ia.items.size(), std::move(gens));
    return ia;
}

std::size_t count_orbits(const Group& g, InducedKind kind, std::size_t k, std::size_t cap) {
    InducedAction ia = induced_action(g, kind, k, cap);
    DisjointSets ds(ia.items.size());
    std::size_t count = ia.items.size();
    for (const auto& s : ia.group.generators())
        for (std::size_t i = 0; i < ia.items.size(); ++i)
            if (ds.unite(i, static_cast<std::size_t>(s(static_cast<Point>(i))))) --count;
    return count;
}

std::size_t transitivity_degree(const Group& g, std::size_t kmax, std::size_t cap) {
    if (kmax > g.degree()) fail(ErrorKind::OutOfRange, "kmax exceeds degree");
    std::size_t best = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (count_orbits(g, InducedKind::Tuples, k, cap) != 1) break;
        best = k;
    }
    return best;
}

std::size_t homogeneity_degree(const Group& g, std::size_t kmax, std::size_t cap) {
    if (kmax > g.degree()) fail(ErrorKind::OutOfRange, "kmax exceeds degree");
    std::size_t best = 0;
    for (std::size_t k = 1; k <= kmax; ++k) {
        if (count_orbits(g, InducedKind::Subsets, k, cap) != 1) break;
        best = k;
    }
    return best;
}

SeparationResult separation_search(const Group& g, const PointSet& gamma, const PointSet& delta,
                                   std::size_t cap) {
    std::vector<char> in_delta(g.degree(), 0);
    for (Point p : delta) {
        if (p < 0 || static_cast<std::size_t>(p) >= g.degree())
            fail(ErrorKind::PointOutOfRange, "separation: point out of range");
        in_delta[static_cast<std::size_t>(p)] = 1;
    }
    for (Point p : gamma)
        if (p < 0 || static_cast<std::size_t>(p) >= g.degree())
            fail(ErrorKind::PointOutOfRange, "separation: point out of range");
    SeparationResult r;
    std::size_t min_orbit = g.degree();
    for (const auto& o : orbits(g)) min_orbit = std::min(min_orbit, o.size());
    r.guaranteed = min_orbit > gamma.size() * delta.size();
    const auto& el = g.elements(cap).list;
    for (std::size_t i = 0; i < el.size(); ++i) {
        bool ok = true;
        for (Point p : gamma)
            if (in_delta[static_cast<std::size_t>(el[i](p))]) { ok = false; break; }
        if (ok) {
            r.witness = el[i];
            r.bfs_index = i;
            return r;
        }
    }
    return r;
}

CosetCoverReport coset_cover_audit(const CosetCoverInstance& inst, std::size_t cap) {
    const Elements& x = inst.group.elements(cap);
    const std::size_t n = inst.group.degree();
    std::vector<std::vector<char>> member;
    CosetCoverReport r;
    r.index_sum = 0;
    for (const auto& part : inst.parts) {
        Elements y = closure(n, part.subgroup_gens, cap);
        for (const auto& e : y.list)
            if (!x.contains(e)) fail(ErrorKind::NotSubgroup, "coset part is not a subgroup of X");
        if (!x.contains(part.rep)) fail(ErrorKind::NotSubgroup, "coset representative not in X");
        std::vector<char> m(x.size(), 0);
        for (const auto& e : y.list) m[*x.find(e * part.rep)] = 1;
        member.push_back(std::move(m));
        std::size_t idx = x.size() / y.size();
        r.indices.push_back(idx);
        r.index_sum += Rational(1, static_cast<long long>(idx));
    }
    auto covered_without = [&](std::size_t skip) {
        for (std::size_t e = 0; e < x.size(); ++e) {
            bool hit = false;
            for (std::size_t i = 0; i < member.size() && !hit; ++i)
                if (i != skip && member[i][e]) hit = true;
            if (!hit) return false;
        }
        return true;
    };
    r.covers = covered_without(member.size());
    r.irredundant = r.covers;
    for (std::size_t i = 0; i < member.size() && r.irredundant; ++i)
        if (covered_without(i)) r.irredundant = false;
    r.bound_holds = !(r.covers && r.irredundant) || r.index_sum >= 1;
    return r;
}

Group gspace_automorphisms(const Group& g, Point alpha, std::size_t cap) {
    if (!is_transitive(g)) fail(ErrorKind::NotTransitive, "G-space automorphisms need a transitive group");
    const auto& el = g.elements(cap).list;
    std::vector<Perm> stab = filter_pointwise(el, {alpha});
    Group h = group_from_elements(g.degree(), stab);
    Elements hs = closure(g.degree(), h.generators(), cap);
    OrbitResult o = orbit(g, alpha);
    std::set<Perm> autos;
    for (const auto& x : el) {
        bool normalizes = true;
        for (const auto& s : h.generators())
            if (!hs.contains(conjugate(s, x))) { normalizes = false; break; }
        if (!normalizes) continue;
        // f_x: alpha t -> alpha x t
        std::vector<Point> img(g.degree());
        Point ax = x(alpha);
        for (const auto& [w, t] : o.transversal) img[static_cast<std::size_t>(w)] = t(ax);
        autos.insert(Perm(std::move(img)));
    }
    return group_from_elements(g.degree(), std::vector<Perm>(autos.begin(), autos.end()));
}

bool is_subgroup_of(const Group& h, const Group& g, std::size_t cap) {
    if (h.degree() != g.degree()) return false;
    const Elements& e = g.elements(cap);
    for (const auto& s : h.generators())
        if (!e.contains(s)) return false;
    return true;
}

std::optional<Perm> coset_spaces_isomorphic(const Group& g, const Group& h, const Group& k,
                                            std::size_t cap) {
    if (!is_subgroup_of(h, g, cap) || !is_subgroup_of(k, g, cap))
        fail(ErrorKind::NotSubgroup, "H and K must be subgroups of G");
    if (h.order(cap) != k.order(cap)) return std::nullopt;
    const Elements& ke = k.elements(cap);
    for (const auto& x : g.elements(cap).list) {
        bool ok = true;
        for (const auto& s : h.generators())
            if (!ke.contains(conjugate(s, x))) { ok = false; break; }
        if (ok) return x;
    }
    return std::nullopt;
}

Group normal_closure(const Group& g, const std::vector<Perm>& elems, std::size_t cap) {
    std::vector<Perm> gens;
    for (const auto& e : elems)
        if (!e.is_identity()) gens.push_back(e);
    Elements cur = closure(g.degree(), gens, cap);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (const auto& s : g.generators()) {
                Perm c = conjugate(gens[i], s);
                if (cur.contains(c)) continue;
                gens.push_back(c);
                cur = closure(g.degree(), gens, cap);
                changed = true;
            }
        }
    }
    return Group(g.degree(), std::move(gens));
}

bool is_normal(const Group& n, const Group& g, std::size_t cap) {
    const Elements& ne = n.elements(cap);
    for (const auto& s : n.generators())
        for (const auto& x : g.generators())
            if (!ne.contains(conjugate(s, x))) return false;
    return true;
}

Group action_on_sets(const Group& g, const std::vector<PointSet>& sets) {
    std::map<PointSet, Point> idx;
    for (std::size_t i = 0; i < sets.size(); ++i) idx.emplace(sets[i], static_cast<Point>(i));
    std::vector<Perm> gens;
    for (const auto& s : g.generators()) {
        std::vector<Point> img(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
            auto it = idx.find(image_of(sets[i], s));
            if (it == idx.end()) fail(ErrorKind::NotACongruence, "set family is not invariant");
            img[i] = it->second;
        }
        gens.emplace_back(std::move(img));
    }
    return Group(sets.size(), std::move(gens));
}

}  // namespace permlab
