#include "permlab/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace permlab {

namespace {

struct Dsu {
    std::vector<std::size_t> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        if (a < b) std::swap(a, b);
        p[a] = b;
        return true;
    }
};

Partition partition_of(Dsu& d) {
    std::vector<int> labels(d.p.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(d.find(i));
    return Partition::from_labels(labels);
}

// Close a union-find under the generators, given the pairs already merged.
void close_under(const Group& g, Dsu& d, std::deque<std::pair<Point, Point>> todo) {
    while (!todo.empty()) {
        auto [x, y] = todo.front();
        todo.pop_front();
        for (const auto& s : g.generators()) {
            Point a = s(x), b = s(y);
            if (d.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) todo.emplace_back(a, b);
        }
    }
}

void require_transitive(const Group& g, const char* what) {
    if (!is_transitive(g)) fail(ErrorKind::NotTransitive, std::string(what) + ": group is not transitive");
}

std::vector<std::size_t> stab_indices(const Elements& e, Point a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e.list[i](a) == a) out.push_back(i);
    return out;
}

}  // namespace

Partition Partition::from_blocks(std::size_t n, std::vector<PointSet> blocks) {
    Partition p;
    p.block_of.assign(n, -1);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const PointSet& b) { return b.empty(); }),
                 blocks.end());
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (Point x : blocks[i]) {
            if (x < 0 || static_cast<std::size_t>(x) >= n)
                fail(ErrorKind::PointOutOfRange, "partition point out of range");
            if (p.block_of[static_cast<std::size_t>(x)] != -1)
                fail(ErrorKind::RepeatedPoint, "partition blocks overlap");
            p.block_of[static_cast<std::size_t>(x)] = static_cast<int>(i);
        }
    for (int b : p.block_of)
        if (b == -1) fail(ErrorKind::InvalidArgument, "partition blocks do not cover the domain");
    p.blocks = std::move(blocks);
    return p;
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    std::map<int, PointSet> by;
    for (std::size_t i = 0; i < labels.size(); ++i) by[labels[i]].push_back(static_cast<Point>(i));
    std::vector<PointSet> blocks;
    for (auto& [k, v] : by) blocks.push_back(std::move(v));
    return from_blocks(labels.size(), std::move(blocks));
}

Partition Partition::discrete(std::size_t n) {
    std::vector<int> l(n);
    std::iota(l.begin(), l.end(), 0);
    return from_labels(l);
}

Partition Partition::universal(std::size_t n) { return from_labels(std::vector<int>(n, 0)); }

bool Partition::refines(const Partition& other) const {
    for (const auto& b : blocks)
        for (Point x : b)
            if (!other.same_block(b.front(), x)) return false;
    return true;
}

std::size_t Partition::max_block_size() const {
    std::size_t m = 0;
    for (const auto& b : blocks) m = std::max(m, b.size());
    return m;
}

bool is_congruence(const Group& g, const Partition& p) {
    for (const auto& s : g.generators())
        for (const auto& b : p.blocks)
            for (Point x : b)
                if (!p.same_block(s(b.front()), s(x))) return false;
    return true;
}

Partition minimal_congruence_identifying(const Group& g, Point alpha, Point beta) {
    require_transitive(g, "minimal congruence");
    const std::size_t n = g.degree();
    if (alpha < 0 || beta < 0 || static_cast<std::size_t>(alpha) >= n || static_cast<std::size_t>(beta) >= n)
        fail(ErrorKind::PointOutOfRange, "minimal congruence: point out of range");
    Dsu d(n);
    std::deque<std::pair<Point, Point>> todo;
    if (d.unite(static_cast<std::size_t>(alpha), static_cast<std::size_t>(beta))) todo.emplace_back(alpha, beta);
    close_under(g, d, std::move(todo));
    return partition_of(d);
}

Partition join(const Group& g, const Partition& a, const Partition& b) {
    Dsu d(g.degree());
    std::deque<std::pair<Point, Point>> todo;
    for (const Partition* p : {&a, &b})
        for (const auto& blk : p->blocks)
            for (Point x : blk)
                if (d.unite(static_cast<std::size_t>(blk.front()), static_cast<std::size_t>(x)))
                    todo.emplace_back(blk.front(), x);
    close_under(g, d, std::move(todo));
    return partition_of(d);
}

std::vector<Partition> all_congruences(const Group& g) {
    require_transitive(g, "congruence enumeration");
    const std::size_t n = g.degree();
    std::vector<Partition> minimal;
    for (std::size_t b = 1; b < n; ++b) {
        Partition p = minimal_congruence_identifying(g, 0, static_cast<Point>(b));
        if (std::find(minimal.begin(), minimal.end(), p) == minimal.end()) minimal.push_back(p);
    }
    std::vector<Partition> found{Partition::discrete(n)};
    std::set<Partition> seen(found.begin(), found.end());
    for (std::size_t i = 0; i < found.size(); ++i)
        for (const auto& m : minimal) {
            Partition j = join(g, found[i], m);
            if (seen.insert(j).second) found.push_back(j);
        }
    std::sort(found.begin(), found.end(), [](const Partition& x, const Partition& y) {
        if (x.blocks.size() != y.blocks.size()) return x.blocks.size() > y.blocks.size();
        return x.blocks < y.blocks;
    });
    return found;
}

Orbital orbital_of(const Group& g, Point a, Point b) {
    const std::size_t n = g.degree();
    std::vector<char> seen(n * n, 0);
    Orbital o;
    o.representative = {a, b};
    std::vector<std::pair<Point, Point>> q{{a, b}};
    seen[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (const auto& s : g.generators()) {
            auto [x, y] = q[i];
            Point u = s(x), v = s(y);
            char& f = seen[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
            if (!f) {
                f = 1;
                q.emplace_back(u, v);
            }
        }
    std::sort(q.begin(), q.end());
    o.pairs = std::move(q);
    o.representative = o.pairs.front();
    return o;
}

std::vector<Orbital> orbitals(const Group& g) {
    const std::size_t n = g.degree();
    std::vector<char> done(n * n, 0);
    std::vector<Orbital> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (done[a * n + b]) continue;
            Orbital o = orbital_of(g, static_cast<Point>(a), static_cast<Point>(b));
            for (auto [x, y] : o.pairs) done[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = 1;
            out.push_back(std::move(o));
        }
    return out;
}

namespace {

bool weakly_connected(std::size_t n, const std::vector<std::pair<Point, Point>>& edges) {
    Dsu d(n);
    std::size_t comps = n;
    for (auto [x, y] : edges)
        if (d.unite(static_cast<std::size_t>(x), static_cast<std::size_t>(y))) --comps;
    return comps <= 1;
}

}  // namespace

PrimitivityReport is_primitive(const Group& g) {
    if (g.degree() < 2) fail(ErrorKind::TooSmall, "primitivity needs degree at least 2");
    require_transitive(g, "primitivity");
    PrimitivityReport r;
    r.route_blocks = true;
    for (std::size_t b = 1; b < g.degree(); ++b) {
        Partition p = minimal_congruence_identifying(g, 0, static_cast<Point>(b));
        if (!p.is_universal()) {
            r.route_blocks = false;
            r.witness = p;
            break;
        }
    }
    r.route_orbitals = true;
    std::vector<char> covered(g.degree(), 0);
    for (std::size_t b = 1; b < g.degree(); ++b) {
        if (covered[b]) continue;
        Orbital o = orbital_of(g, 0, static_cast<Point>(b));
        for (auto [x, y] : o.pairs)
            if (x == 0) covered[static_cast<std::size_t>(y)] = 1;
        if (!weakly_connected(g.degree(), o.pairs)) r.route_orbitals = false;
    }
    r.agree = r.route_blocks == r.route_orbitals;
    r.primitive = r.route_blocks && r.route_orbitals;
    return r;
}

SuborbitReport suborbits(const Group& g, Point alpha) {
    require_transitive(g, "suborbits");
    SuborbitReport r;
    r.alpha = alpha;
    Group st = point_stabilizer(g, alpha);
    auto os = orbits(st);
    std::stable_sort(os.begin(), os.end(), [&](const PointSet& a, const PointSet& b) {
        bool ta = a.size() == 1 && a[0] == alpha, tb = b.size() == 1 && b[0] == alpha;
        if (ta != tb) return ta;
        return a.front() < b.front();
    });
    r.suborbits = os;
    std::vector<std::size_t> which(g.degree());
    for (std::size_t i = 0; i < os.size(); ++i)
        for (Point x : os[i]) which[static_cast<std::size_t>(x)] = i;
    OrbitResult orb = orbit(g, alpha);
    // t maps alpha to gamma; t^-1 maps gamma to alpha and alpha into the paired suborbit
    for (const auto& s : os) {
        const Perm& t = orb.transversal.at(s.front());
        r.paired.push_back(which[static_cast<std::size_t>(t.inverse()(alpha))]);
    }
    return r;
}

SubdegreeReport subdegree_check(const Group& g, std::size_t cap) {
    SuborbitReport s = suborbits(g, 0);
    SubdegreeReport r;
    Group st = point_stabilizer(g, 0);
    std::size_t st_order = st.order(cap);
    for (std::size_t i = 0; i < s.suborbits.size(); ++i) {
        r.subdegrees.push_back(s.suborbits[i].size());
        if (s.suborbits[s.paired[i]].size() != s.suborbits[i].size()) r.paired_lengths_equal = false;
        Group st2 = point_stabilizer(st, s.suborbits[i].front());
        if (st_order / st2.order(cap) != s.suborbits[i].size() || st_order % st2.order(cap) != 0)
            r.index_identity = false;
    }
    std::sort(r.subdegrees.begin(), r.subdegrees.end());
    return r;
}

std::string orbital_dot(std::size_t n, const std::vector<std::pair<Point, Point>>& edges,
                        const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t v = 0; v < n; ++v) os << "  " << v + 1 << ";\n";
    for (auto [x, y] : edges) os << "  " << x + 1 << " -> " << y + 1 << ";\n";
    os << "}\n";
    return os.str();
}

OrbitalGraphReport orbital_graph(const Group& g, const Orbital& orb) {
    if (orb.diagonal()) fail(ErrorKind::DiagonalOrbital, "orbital graph of the diagonal orbital");
    const std::size_t n = g.degree();
    OrbitalGraphReport r;
    r.edges = orb.pairs;
    r.weakly_connected = weakly_connected(n, orb.pairs);
    Point a = orb.representative.first;
    std::set<std::pair<Point, Point>> fwd(orb.pairs.begin(), orb.pairs.end()), rev;
    for (auto [x, y] : orb.pairs) rev.emplace(y, x);
    std::size_t m = 0, mstar = 0;
    for (auto [x, y] : orb.pairs) {
        if (x == a) ++m;
        if (y == a) ++mstar;
    }
    r.valency = fwd == rev ? m : m + mstar;
    std::vector<std::vector<Point>> adj(n);
    for (auto [x, y] : orb.pairs) {
        adj[static_cast<std::size_t>(x)].push_back(y);
        adj[static_cast<std::size_t>(y)].push_back(x);
    }
    std::vector<long> dist(n, -1);
    dist[static_cast<std::size_t>(a)] = 0;
    std::deque<Point> q{a};
    while (!q.empty()) {
        Point x = q.front();
        q.pop_front();
        for (Point y : adj[static_cast<std::size_t>(x)])
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                q.push_back(y);
            }
    }
    for (long d : dist) {
        if (d < 0) continue;
        if (r.spheres.size() <= static_cast<std::size_t>(d)) r.spheres.resize(static_cast<std::size_t>(d) + 1, 0);
        ++r.spheres[static_cast<std::size_t>(d)];
    }
    const BigInt v = r.valency, v1 = r.valency == 0 ? 0 : r.valency - 1;
    BigInt sharp = v, stated = v * v1;
    for (std::size_t d = 1; d < r.spheres.size(); ++d) {
        if (BigInt(r.spheres[d]) > sharp) r.sphere_bound_holds = false;
        if (BigInt(r.spheres[d]) > stated) r.stated_bound_holds = false;
        sharp *= v1;
        stated *= v1;
    }
    r.dot = orbital_dot(n, orb.pairs);
    return r;
}

std::vector<PointSet> semiblocks(const Group& g, Point alpha, std::size_t cap) {
    require_transitive(g, "semiblocks");
    SuborbitReport s = suborbits(g, alpha);
    const std::size_t r = s.suborbits.size() - 1;
    if (r > 20) fail(ErrorKind::CapExceeded, "too many suborbits for the semiblock scan");
    const auto& el = g.elements(cap).list;
    const std::size_t n = g.degree();
    std::vector<PointSet> out;
    std::vector<char> in(n);
    for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
        std::fill(in.begin(), in.end(), 0);
        PointSet gam{alpha};
        in[static_cast<std::size_t>(alpha)] = 1;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1)
                for (Point x : s.suborbits[i + 1]) {
                    gam.push_back(x);
                    in[static_cast<std::size_t>(x)] = 1;
                }
        bool ok = true;
        for (const auto& x : el) {
            if (!in[static_cast<std::size_t>(x(alpha))]) continue;
            for (Point p : gam)
                if (!in[static_cast<std::size_t>(x(p))]) { ok = false; break; }
            if (!ok) break;
        }
        if (ok) {
            std::sort(gam.begin(), gam.end());
            out.push_back(std::move(gam));
        }
    }
    std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_strongly_primitive(const Group& g, std::size_t cap) {
    auto sb = semiblocks(g, 0, cap);
    return sb.size() == (g.degree() == 1 ? 1u : 2u);
}

CorrespondenceReport congruence_subgroup_correspondence(const Group& g, Point alpha, std::size_t cap) {
    require_transitive(g, "congruence correspondence");
    const Elements& e = g.elements(cap);
    const std::size_t n = g.degree();
    CorrespondenceReport r;
    r.congruences = all_congruences(g);

    auto to_indices = [&](const Elements& sub) {
        std::vector<std::size_t> v;
        for (const auto& x : sub.list) v.push_back(*e.find(x));
        std::sort(v.begin(), v.end());
        return v;
    };
    // overgroups of G_alpha by repeated one-element extension
    std::vector<std::size_t> st = stab_indices(e, alpha);
    std::vector<std::vector<Perm>> gens_of;
    std::set<std::vector<std::size_t>> seen;
    {
        std::vector<Perm> sg;
        for (std::size_t i : st) sg.push_back(e.list[i]);
        Group h = group_from_elements(n, sg);
        r.overgroups.push_back(st);
        gens_of.push_back(h.generators());
        seen.insert(st);
    }
    for (std::size_t k = 0; k < r.overgroups.size(); ++k) {
        std::vector<char> covered(e.size(), 0);
        for (std::size_t i : r.overgroups[k]) covered[i] = 1;
        for (std::size_t x = 0; x < e.size(); ++x) {
            if (covered[x]) continue;
            for (std::size_t i : r.overgroups[k]) covered[*e.find(e.list[i] * e.list[x])] = 1;
            std::vector<Perm> gens = gens_of[k];
            gens.push_back(e.list[x]);
            auto idx = to_indices(closure(n, gens, cap));
            if (seen.insert(idx).second) {
                r.overgroups.push_back(idx);
                gens_of.push_back(gens);
            }
        }
    }
    std::vector<std::size_t> order(r.overgroups.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (r.overgroups[a].size() != r.overgroups[b].size())
            return r.overgroups[a].size() < r.overgroups[b].size();
        return r.overgroups[a] < r.overgroups[b];
    });
    std::vector<std::vector<std::size_t>> sorted;
    for (std::size_t i : order) sorted.push_back(r.overgroups[i]);
    r.overgroups = std::move(sorted);

    auto h_of = [&](const Partition& rho) {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (rho.same_block(e.list[i](alpha), alpha)) v.push_back(i);
        return v;
    };
    auto rho_of = [&](const std::vector<std::size_t>& h) {
        PointSet cls;
        for (std::size_t i : h) cls.push_back(e.list[i](alpha));
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        std::set<PointSet> blocks;
        for (const auto& x : e.list) blocks.insert(image_of(cls, x));
        std::vector<PointSet> bl(blocks.begin(), blocks.end());
        std::vector<int> label(n, -1);
        for (std::size_t b = 0; b < bl.size(); ++b)
            for (Point p : bl[b]) {
                if (label[static_cast<std::size_t>(p)] != -1) return std::optional<Partition>{};
                label[static_cast<std::size_t>(p)] = static_cast<int>(b);
            }
        return std::optional<Partition>(Partition::from_labels(label));
    };

    r.bijective = r.congruences.size() == r.overgroups.size();
    std::vector<std::size_t> img(r.congruences.size());
    for (std::size_t i = 0; i < r.congruences.size() && r.bijective; ++i) {
        auto h = h_of(r.congruences[i]);
        auto it = std::find(r.overgroups.begin(), r.overgroups.end(), h);
        if (it == r.overgroups.end()) { r.bijective = false; break; }
        img[i] = static_cast<std::size_t>(it - r.overgroups.begin());
        auto back = rho_of(h);
        if (!back || !(*back == r.congruences[i])) r.bijective = false;
    }
    for (const auto& h : r.overgroups) {
        if (!r.bijective) break;
        auto rho = rho_of(h);
        if (!rho || std::find(r.congruences.begin(), r.congruences.end(), *rho) == r.congruences.end() ||
            h_of(*rho) != h)
            r.bijective = false;
    }
    r.order_preserving = r.bijective;
    for (std::size_t i = 0; i < r.congruences.size() && r.order_preserving; ++i)
        for (std::size_t j = 0; j < r.congruences.size(); ++j) {
            bool le_rho = r.congruences[i].refines(r.congruences[j]);
            const auto& hi = r.overgroups[img[i]];
            const auto& hj = r.overgroups[img[j]];
            bool le_h = std::includes(hj.begin(), hj.end(), hi.begin(), hi.end());
            if (le_rho != le_h) { r.order_preserving = false; break; }
        }
    return r;
}

BLDecomposition bergman_lenstra(const Group& g, Point alpha, std::size_t cap) {
    require_transitive(g, "Bergman-Lenstra");
    const Elements& e = g.elements(cap);
    const std::size_t n = g.degree();
    if (n > 20) fail(ErrorKind::CapExceeded, "subset scan limited to degree 20");
    BLDecomposition r;
    for (const auto& s : suborbits(g, alpha).suborbits) r.m = std::max(r.m, s.size());

    struct Entry {
        PointSet phi;
        std::size_t m_phi;
        std::vector<int> labels;  // orbit labels of the pointwise stabilizer
    };
    std::vector<Entry> entries;
    std::vector<std::size_t> all(e.size());
    std::iota(all.begin(), all.end(), 0);
    // depth-first over subsets, filtering the stabilizer incrementally
    PointSet cur;
    auto rec = [&](auto&& self, std::size_t from, const std::vector<std::size_t>& stab) -> void {
        for (std::size_t p = from; p < n; ++p) {
            std::vector<std::size_t> sub;
            for (std::size_t i : stab)
                if (e.list[i](static_cast<Point>(p)) == static_cast<Point>(p)) sub.push_back(i);
            cur.push_back(static_cast<Point>(p));
            Dsu d(n);
            for (std::size_t i : sub)
                for (std::size_t x = 0; x < n; ++x) d.unite(x, static_cast<std::size_t>(e.list[i](static_cast<Point>(x))));
            Entry en{cur, 0, std::vector<int>(n)};
            std::vector<std::size_t> sz(n, 0);
            for (std::size_t x = 0; x < n; ++x) {
                en.labels[x] = static_cast<int>(d.find(x));
                en.m_phi = std::max(en.m_phi, ++sz[d.find(x)]);
            }
            entries.push_back(std::move(en));
            self(self, p + 1, sub);
            cur.pop_back();
        }
    };
    rec(rec, 0, all);

    r.m0 = entries.front().m_phi;
    for (const auto& en : entries) r.m0 = std::min(r.m0, en.m_phi);
    std::vector<const Entry*> witnesses;
    for (const auto& en : entries)
        if (en.m_phi == r.m0) witnesses.push_back(&en);
    std::sort(witnesses.begin(), witnesses.end(), [](const Entry* a, const Entry* b) {
        if (a->phi.size() != b->phi.size()) return a->phi.size() < b->phi.size();
        return a->phi < b->phi;
    });
    r.witness_count = witnesses.size();
    r.phi = witnesses.front()->phi;
    for (const Entry* w : witnesses)
        if (std::binary_search(w->phi.begin(), w->phi.end(), alpha)) { r.phi_alpha = w->phi; break; }

    // N: elements fixing setwise every orbit of length m0, for some witness
    std::vector<char> in_n(e.size(), 0);
    for (const Entry* w : witnesses) {
        std::map<int, PointSet> orbs;
        for (std::size_t x = 0; x < n; ++x) orbs[w->labels[x]].push_back(static_cast<Point>(x));
        std::vector<const PointSet*> short_orbits;
        for (const auto& [k, o] : orbs)
            if (o.size() == r.m0) short_orbits.push_back(&o);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (in_n[i]) continue;
            bool ok = true;
            for (const PointSet* o : short_orbits) {
                for (Point p : *o)
                    if (w->labels[static_cast<std::size_t>(e.list[i](p))] != w->labels[static_cast<std::size_t>(o->front())]) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) in_n[i] = 1;
        }
    }
    for (std::size_t i = 0; i < e.size(); ++i)
        if (in_n[i]) r.n_elements.push_back(e.list[i]);

    r.n_is_subgroup = closure(n, r.n_elements, cap).size() == r.n_elements.size();
    r.n_normal = true;
    for (std::size_t i = 0; i < e.size() && r.n_normal; ++i) {
        if (!in_n[i]) continue;
        for (const auto& s : g.generators())
            if (!in_n[*e.find(conjugate(e.list[i], s))]) { r.n_normal = false; break; }
    }
    Group ng(n, r.n_elements);
    r.rho = Partition::from_blocks(n, orbits(ng));
    r.classes_within_m = r.rho.max_block_size() <= r.m;

    // H = G_alpha N acting on the classes of rho
    std::set<std::vector<int>> induced;
    for (std::size_t i : stab_indices(e, alpha))
        for (const auto& x : r.n_elements) {
            Perm h = e.list[i] * x;
            std::vector<int> act(r.rho.blocks.size());
            for (std::size_t b = 0; b < r.rho.blocks.size(); ++b)
                act[b] = r.rho.block_of[static_cast<std::size_t>(h(r.rho.blocks[b].front()))];
            induced.insert(std::move(act));
        }
    r.quotient_stab_order = induced.size();
    BigInt bound = 1;
    for (std::size_t i = 1; i < r.phi_alpha.size(); ++i) bound *= r.m;
    r.stab_bound_holds = BigInt(r.quotient_stab_order) <= bound;
    return r;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& g, std::size_t cap) {
    const Elements& e = g.elements(cap);
    std::vector<int> cls(e.size(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (cls[i] != -1) continue;
        std::vector<std::size_t> c{i};
        cls[i] = static_cast<int>(out.size());
        for (std::size_t k = 0; k < c.size(); ++k)
            for (const auto& s : g.generators()) {
                std::size_t j = *e.find(conjugate(e.list[c[k]], s));
                if (cls[j] == -1) {
                    cls[j] = static_cast<int>(out.size());
                    c.push_back(j);
                }
            }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

NormalAuditReport normal_subgroup_audit(const Group& g, std::size_t cap) {
    require_transitive(g, "normal subgroup audit");
    const Elements& e = g.elements(cap);
    const std::size_t n = g.degree();
    NormalAuditReport r;
    r.primitive = n >= 2 ? is_primitive(g).primitive : true;

    auto key_of = [&](const Group& h) {
        std::vector<std::size_t> v;
        for (const auto& x : h.elements(cap).list) v.push_back(*e.find(x));
        std::sort(v.begin(), v.end());
        return v;
    };
    std::map<std::vector<std::size_t>, Group> found;
    std::vector<Group> singles;
    for (const auto& c : conjugacy_classes(g, cap)) {
        Group h = normal_closure(g, {e.list[c.front()]}, cap);
        auto k = key_of(h);
        if (!found.count(k)) {
            found.emplace(k, h);
            singles.push_back(h);
        }
    }
    // joins of up to three distinct closures
    auto join_groups = [&](std::vector<const Group*> parts) {
        std::vector<Perm> gens;
        for (const Group* p : parts)
            for (const auto& s : p->generators()) gens.push_back(s);
        Group h(n, gens);
        auto k = key_of(h);
        if (!found.count(k)) found.emplace(k, h);
    };
    for (std::size_t i = 0; i < singles.size(); ++i)
        for (std::size_t j = i + 1; j < singles.size(); ++j) {
            join_groups({&singles[i], &singles[j]});
            for (std::size_t k = j + 1; k < singles.size(); ++k) join_groups({&singles[i], &singles[j], &singles[k]});
        }
    for (auto& [k, h] : found) {
        NormalSubgroupInfo info;
        info.order = k.size();
        info.generators = h.generators();
        info.transitive = is_transitive(h);
        info.abelian = true;
        for (const auto& a : h.generators())
            for (const auto& b : h.generators())
                if (a * b != b * a) info.abelian = false;
        info.regular = info.transitive && info.order == n;
        r.normals.push_back(std::move(info));
    }
    std::stable_sort(r.normals.begin(), r.normals.end(),
                     [](const auto& a, const auto& b) { return a.order < b.order; });
    if (r.primitive)
        for (const auto& nn : r.normals) {
            if (nn.order == 1) continue;
            if (!nn.transitive) r.transitivity_holds = false;
            if (nn.abelian && !nn.regular) r.abelian_regular_holds = false;
        }
    SuborbitReport s = suborbits(g, 0);
    r.subdegrees_at_most_two = true;
    for (const auto& o : s.suborbits)
        if (o.size() > 2) r.subdegrees_at_most_two = false;
    if (r.subdegrees_at_most_two) {
        std::size_t stab = e.size() / n;
        bool ok = stab <= 2;
        if (!ok)
            for (const auto& rho : all_congruences(g)) {
                if (rho.max_block_size() > 2) continue;
                Group q = action_on_sets(g, rho.blocks);
                if (is_transitive(q) && q.order(cap) == rho.blocks.size()) { ok = true; break; }
            }
        r.dichotomy_holds = ok;
    }
    return r;
}

bool finite_suborbit_relation_is_equivalence(const Group& g) {
    const std::size_t n = g.degree();
    SuborbitReport s = suborbits(g, 0);
    std::vector<char> rel(n * n, 0);
    for (const auto& o : s.suborbits)
        for (auto [x, y] : orbital_of(g, 0, o.front()).pairs)
            rel[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = 1;
    for (std::size_t a = 0; a < n; ++a) {
        if (!rel[a * n + a]) return false;
        for (std::size_t b = 0; b < n; ++b) {
            if (rel[a * n + b] != rel[b * n + a]) return false;
            if (!rel[a * n + b]) continue;
            for (std::size_t c = 0; c < n; ++c)
                if (rel[b * n + c] && !rel[a * n + c]) return false;
        }
    }
    return true;
}

}  // namespace permlab
