#include "permlab/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace permlab {

namespace {

PointSet complement(std::size_t n, const PointSet& s) {
    PointSet out;
    std::size_t j = 0;
    for (std::size_t p = 0; p < n; ++p) {
        if (j < s.size() && s[j] == static_cast<Point>(p)) {
            ++j;
            continue;
        }
        out.push_back(static_cast<Point>(p));
    }
    return out;
}

bool disjoint(const PointSet& a, const PointSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        a[i] < b[j] ? ++i : ++j;
    }
    return true;
}

bool subset(const PointSet& a, const PointSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

bool size_lex(const PointSet& a, const PointSet& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

void validate_set(std::size_t n, const PointSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || static_cast<std::size_t>(s[i]) >= n) fail(ErrorKind::PointOutOfRange, "point out of range");
        if (i && s[i - 1] >= s[i]) fail(ErrorKind::RepeatedPoint, "set must be sorted without repeats");
    }
}

// All G-translates of a set, by BFS over the generators.
std::vector<PointSet> translates(const std::vector<Perm>& gens, const PointSet& s) {
    std::set<PointSet> seen{s};
    std::vector<PointSet> q{s};
    for (std::size_t i = 0; i < q.size(); ++i)
        for (const auto& g : gens) {
            PointSet t = image_of(q[i], g);
            if (seen.insert(t).second) q.push_back(std::move(t));
        }
    return q;
}

std::size_t improper_threshold(const Group& g, std::size_t cap) {
    // G is j-transitive for all j <= result
    return transitivity_degree(g, g.degree() > 1 ? g.degree() - 1 : 1, cap);
}

}  // namespace

Group restrict_to(const std::vector<Perm>& gens, const PointSet& gamma) {
    std::map<Point, Point> label;
    for (std::size_t i = 0; i < gamma.size(); ++i) label[gamma[i]] = static_cast<Point>(i);
    std::vector<Perm> out;
    for (const auto& s : gens) {
        std::vector<Point> img(gamma.size());
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            auto it = label.find(s(gamma[i]));
            if (it == label.end()) fail(ErrorKind::InvalidArgument, "generator does not preserve the set");
            img[i] = it->second;
        }
        out.emplace_back(std::move(img));
    }
    return Group(gamma.size(), std::move(out));
}

std::optional<JordanWitness> is_jordan(const Group& g, const PointSet& gamma, std::size_t cap) {
    const std::size_t n = g.degree();
    validate_set(n, gamma);
    if (gamma.size() < 2) fail(ErrorKind::TooSmall, "a Jordan set has at least two points");
    PointSet rest = complement(n, gamma);
    std::vector<Perm> stab = filter_pointwise(g.elements(cap).list, rest);
    std::set<Point> reach;
    for (const auto& x : stab) reach.insert(x(gamma.front()));
    if (reach.size() != gamma.size()) return std::nullopt;
    JordanWitness w;
    w.set = gamma;
    w.witness_order = stab.size();
    w.witness_generators = group_from_elements(n, stab).generators();
    w.proper = improper_threshold(g, cap) < rest.size() + 1;
    return w;
}

std::vector<JordanWitness> jordan_sets(const Group& g, std::size_t cap, std::size_t max_degree) {
    const std::size_t n = g.degree();
    if (n > max_degree) fail(ErrorKind::CapExceeded, "Jordan scan limited to degree " + std::to_string(max_degree));
    const auto& el = g.elements(cap).list;
    const std::size_t td = improper_threshold(g, cap);
    std::vector<JordanWitness> out;
    std::vector<char> in_delta(n, 0);
    std::size_t delta_size = 0;
    std::vector<char> hit(n, 0);

    auto visit = [&](auto&& self, std::size_t start, const std::vector<std::uint32_t>& stab) -> void {
        const std::size_t gsize = n - delta_size;
        if (gsize < 2) return;
        PointSet gamma;
        for (std::size_t p = 0; p < n; ++p)
            if (!in_delta[p]) gamma.push_back(static_cast<Point>(p));
        std::size_t count = 0;
        for (std::uint32_t i : stab) {
            auto p = static_cast<std::size_t>(el[i](gamma.front()));
            if (!hit[p]) { hit[p] = 1; ++count; }
        }
        for (Point p : gamma) hit[static_cast<std::size_t>(p)] = 0;
        if (count == gsize) {
            JordanWitness w;
            w.set = gamma;
            w.witness_order = stab.size();
            std::vector<Perm> elems;
            for (std::uint32_t i : stab) elems.push_back(el[i]);
            w.witness_generators = group_from_elements(n, elems).generators();
            w.proper = td < delta_size + 1;
            out.push_back(std::move(w));
        }
        if (stab.size() == 1) return;  // trivial stabilizer: no smaller Jordan sets
        for (std::size_t p = start; p < n; ++p) {
            std::vector<std::uint32_t> sub;
            for (std::uint32_t i : stab)
                if (el[i](static_cast<Point>(p)) == static_cast<Point>(p)) sub.push_back(i);
            in_delta[p] = 1;
            ++delta_size;
            self(self, p + 1, sub);
            in_delta[p] = 0;
            --delta_size;
        }
    };
    std::vector<std::uint32_t> all(el.size());
    std::iota(all.begin(), all.end(), 0u);
    visit(visit, 0, all);
    std::sort(out.begin(), out.end(), [](const JordanWitness& a, const JordanWitness& b) { return size_lex(a.set, b.set); });
    return out;
}

std::vector<PointSet> maximal_jordan_avoiding(const std::vector<JordanWitness>& catalog, const PointSet& delta0,
                                              std::optional<Point> seed) {
    std::vector<const PointSet*> fam;
    for (const auto& w : catalog)
        if (disjoint(w.set, delta0)) fam.push_back(&w.set);
    std::vector<std::size_t> parent(fam.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            if (!disjoint(*fam[i], *fam[j])) parent[find(i)] = find(j);
    std::map<std::size_t, PointSet> unions;
    for (std::size_t i = 0; i < fam.size(); ++i) unions[find(i)] = set_union(unions[find(i)], *fam[i]);
    std::vector<PointSet> out;
    for (auto& [k, u] : unions)
        if (!seed || std::binary_search(u.begin(), u.end(), *seed)) out.push_back(u);
    std::sort(out.begin(), out.end(), size_lex);
    return out;
}

SpanGeometry::SpanGeometry(const Group& g, std::vector<JordanWitness> catalog) : g_(g), catalog_(std::move(catalog)) {}

SpanGeometry::SpanGeometry(const Group& g, std::size_t cap) : g_(g), catalog_(jordan_sets(g, cap)) {}

const PointSet& SpanGeometry::span(const PointSet& gamma) {
    auto it = memo_.find(gamma);
    if (it != memo_.end()) return it->second;
    validate_set(g_.degree(), gamma);
    std::vector<char> avoided(g_.degree(), 0);
    for (const auto& w : catalog_)
        if (disjoint(w.set, gamma))
            for (Point p : w.set) avoided[static_cast<std::size_t>(p)] = 1;
    PointSet s;
    for (std::size_t p = 0; p < g_.degree(); ++p)
        if (!avoided[p]) s.push_back(static_cast<Point>(p));
    return memo_.emplace(gamma, std::move(s)).first->second;
}

bool GeometryAudit::passes() const {
    return extensive && idempotent && monotone && empty_span_empty && singletons_closed && exchange &&
           transitive_on_independent;
}

GeometryAudit geometry_audit(SpanGeometry& geo, std::size_t size_cap) {
    const Group& g = geo.group();
    const std::size_t n = g.degree();
    GeometryAudit r;
    std::vector<PointSet> small{{}};
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i].size() >= size_cap) continue;
        Point from = small[i].empty() ? 0 : small[i].back() + 1;
        for (Point p = from; p < static_cast<Point>(n); ++p) {
            PointSet s = small[i];
            s.push_back(p);
            small.push_back(std::move(s));
        }
    }
    r.empty_span_empty = geo.span({}).empty();
    const bool two_trans = transitivity_degree(g, 2) >= 2;
    for (const auto& s : small) {
        PointSet sp = geo.span(s);
        if (!subset(s, sp)) r.extensive = false;
        if (geo.span(sp) != sp) r.idempotent = false;
        if (two_trans && s.size() == 1 && sp != s) r.singletons_closed = false;
        if (s.size() + 1 > size_cap) continue;
        for (Point x = 0; x < static_cast<Point>(n); ++x) {
            if (std::binary_search(s.begin(), s.end(), x)) continue;
            PointSet sx = set_union(s, {x});
            if (!subset(sp, geo.span(sx))) r.monotone = false;
        }
    }
    // exchange: gamma in span(S + beta) - span(S) implies beta in span(S + gamma)
    for (const auto& s : small) {
        const PointSet sp = geo.span(s);
        for (Point b = 0; b < static_cast<Point>(n); ++b) {
            PointSet sb = geo.span(set_union(s, {b}));
            for (Point c = 0; c < static_cast<Point>(n); ++c) {
                ++r.exchange_checked;
                if (!std::binary_search(sb.begin(), sb.end(), c) || std::binary_search(sp.begin(), sp.end(), c))
                    continue;
                const PointSet& sc = geo.span(set_union(s, {c}));
                if (!std::binary_search(sc.begin(), sc.end(), b)) r.exchange = false;
            }
        }
    }
    // ordered independent k-tuples and their orbits
    auto independent = [&](PointSet set) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            PointSet rest = set;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            const PointSet& sp = geo.span(rest);
            if (std::binary_search(sp.begin(), sp.end(), set[i])) return false;
        }
        return true;
    };
    std::vector<std::vector<Point>> layer{{}};
    for (std::size_t k = 1; k <= size_cap; ++k) {
        std::vector<std::vector<Point>> next;
        for (const auto& t : layer)
            for (Point p = 0; p < static_cast<Point>(n); ++p) {
                if (std::find(t.begin(), t.end(), p) != t.end()) continue;
                auto u = t;
                u.push_back(p);
                PointSet s(u.begin(), u.end());
                std::sort(s.begin(), s.end());
                if (independent(s)) next.push_back(std::move(u));
            }
        layer = next;
        std::map<std::vector<Point>, std::size_t> index;
        for (std::size_t i = 0; i < layer.size(); ++i) index[layer[i]] = i;
        std::vector<std::size_t> parent(layer.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t orbits_left = layer.size();
        for (std::size_t i = 0; i < layer.size(); ++i)
            for (const auto& s : g.generators()) {
                std::vector<Point> img;
                for (Point p : layer[i]) img.push_back(s(p));
                auto it = index.find(img);
                if (it == index.end()) {
                    r.transitive_on_independent = false;  // independence not G-invariant
                    continue;
                }
                std::size_t a = find(i), b = find(it->second);
                if (a != b) {
                    parent[a] = b;
                    --orbits_left;
                }
            }
        r.independent_orbits.push_back(orbits_left);
        if (orbits_left > 1) r.transitive_on_independent = false;
        if (layer.empty()) break;
    }
    return r;
}

bool is_block_for(const std::vector<Perm>& gens, const PointSet& b) {
    std::set<PointSet> seen{b};
    std::vector<PointSet> q{b};
    for (std::size_t i = 0; i < q.size(); ++i)
        for (const auto& g : gens) {
            PointSet t = image_of(q[i], g);
            if (t != b && !disjoint(t, b)) return false;
            if (seen.insert(t).second) q.push_back(std::move(t));
        }
    return true;
}

PropertyResult check_translation_closed(const Group& g, const std::vector<JordanWitness>& catalog) {
    PropertyResult r{"Jordan sets closed under translation", 0, 0};
    std::set<PointSet> all;
    for (const auto& w : catalog) all.insert(w.set);
    for (const auto& w : catalog)
        for (const auto& s : g.generators()) {
            ++r.checked;
            if (!all.count(image_of(w.set, s))) ++r.violations;
        }
    return r;
}

PropertyResult check_overlap_unions(const std::vector<JordanWitness>& catalog) {
    PropertyResult r{"union of overlapping Jordan sets is Jordan", 0, 0};
    std::set<PointSet> all;
    for (const auto& w : catalog) all.insert(w.set);
    for (std::size_t i = 0; i < catalog.size(); ++i)
        for (std::size_t j = i + 1; j < catalog.size(); ++j) {
            if (disjoint(catalog[i].set, catalog[j].set)) continue;
            ++r.checked;
            if (!all.count(set_union(catalog[i].set, catalog[j].set))) ++r.violations;
        }
    return r;
}

PropertyResult check_maximal_subset_blocks(const Group& g, const std::vector<JordanWitness>& catalog,
                                           std::size_t cap) {
    PropertyResult r{"maximal Jordan subset or its remainder is a block", 0, 0};
    for (const auto& outer : catalog) {
        std::vector<const PointSet*> inside;
        for (const auto& w : catalog)
            if (w.set.size() < outer.set.size() && subset(w.set, outer.set)) inside.push_back(&w.set);
        if (inside.empty()) continue;
        Group setstab = stabilizer(g, StabKind::Setwise, outer.set, cap);
        for (const PointSet* a : inside) {
            bool maximal = true;
            for (const PointSet* b : inside)
                if (b->size() > a->size() && subset(*a, *b)) { maximal = false; break; }
            if (!maximal) continue;
            ++r.checked;
            PointSet rest;
            std::set_difference(outer.set.begin(), outer.set.end(), a->begin(), a->end(), std::back_inserter(rest));
            if (!is_block_for(setstab.generators(), *a) && !is_block_for(setstab.generators(), rest)) ++r.violations;
        }
    }
    return r;
}

PropertyResult check_translate_comparability(const Group& g, const std::vector<JordanWitness>& catalog) {
    PropertyResult r{"some translate of one Jordan set is comparable with another", 0, 0};
    if (!is_transitive(g)) return r;
    std::vector<std::vector<PointSet>> tr;
    for (const auto& w : catalog) tr.push_back(translates(g.generators(), w.set));
    for (std::size_t i = 0; i < catalog.size(); ++i)
        for (std::size_t j = 0; j < catalog.size(); ++j) {
            ++r.checked;
            const PointSet& b = catalog[j].set;
            bool ok = false;
            for (const auto& t : tr[i])
                if (subset(t, b) || subset(b, t)) { ok = true; break; }
            if (!ok) ++r.violations;
        }
    return r;
}

namespace {

struct EntryInfo {
    bool primitive = false;
    std::size_t trans = 0;
};

constexpr std::size_t kTransCap = 4;

EntryInfo info_of(const JordanWitness& w) {
    Group h = restrict_to(w.witness_generators, w.set);
    return {is_primitive(h).primitive, transitivity_degree(h, std::min(kTransCap, w.set.size()))};
}

// A random overlap-connected family of 2 to 4 distinct catalog entries.
std::vector<std::size_t> random_family(const std::vector<JordanWitness>& catalog, std::mt19937_64& rng) {
    std::vector<std::size_t> fam{rng() % catalog.size()};
    PointSet u = catalog[fam[0]].set;
    std::size_t want = 2 + rng() % 3;
    for (std::size_t tries = 0; fam.size() < want && tries < 50; ++tries) {
        std::size_t j = rng() % catalog.size();
        if (std::find(fam.begin(), fam.end(), j) != fam.end() || disjoint(catalog[j].set, u)) continue;
        fam.push_back(j);
        u = set_union(u, catalog[j].set);
    }
    return fam;
}

Group union_group(const std::vector<JordanWitness>& catalog, const std::vector<std::size_t>& fam, PointSet& u) {
    std::vector<Perm> gens;
    u.clear();
    for (std::size_t i : fam) {
        u = set_union(u, catalog[i].set);
        for (const auto& s : catalog[i].witness_generators) gens.push_back(s);
    }
    return restrict_to(gens, u);
}

}  // namespace

PropertyResult check_connected_union_primitive(const std::vector<JordanWitness>& catalog, std::mt19937_64& rng,
                                               std::size_t samples) {
    PropertyResult r{"connected union of primitive Jordan sets is primitive", 0, 0};
    if (catalog.size() < 2) return r;
    std::map<std::size_t, EntryInfo> info;
    for (std::size_t s = 0; s < samples; ++s) {
        auto fam = random_family(catalog, rng);
        if (fam.size() < 2) continue;
        bool all_prim = true;
        for (std::size_t i : fam) {
            if (!info.count(i)) info[i] = info_of(catalog[i]);
            all_prim = all_prim && info[i].primitive;
        }
        if (!all_prim) continue;
        ++r.checked;
        PointSet u;
        if (!is_primitive(union_group(catalog, fam, u)).primitive) ++r.violations;
    }
    return r;
}

PropertyResult check_connected_union_transitivity(const std::vector<JordanWitness>& catalog, std::mt19937_64& rng,
                                                  std::size_t samples) {
    PropertyResult r{"connected union of k-transitive Jordan sets is k-transitive", 0, 0};
    if (catalog.size() < 2) return r;
    std::map<std::size_t, EntryInfo> info;
    for (std::size_t s = 0; s < samples; ++s) {
        auto fam = random_family(catalog, rng);
        if (fam.size() < 2) continue;
        std::size_t k = kTransCap;
        for (std::size_t i : fam) {
            if (!info.count(i)) info[i] = info_of(catalog[i]);
            k = std::min(k, info[i].trans);
        }
        ++r.checked;
        PointSet u;
        Group h = union_group(catalog, fam, u);
        if (transitivity_degree(h, std::min(kTransCap, u.size())) < std::min(k, u.size())) ++r.violations;
    }
    return r;
}

PropertyResult check_overlapping_primitive_pairs(const std::vector<JordanWitness>& catalog, std::size_t max_pairs) {
    PropertyResult r{"overlapping non-nested primitive Jordan pair has a 2-homogeneous union", 0, 0};
    std::map<std::size_t, EntryInfo> info;
    for (std::size_t i = 0; i < catalog.size() && r.checked < max_pairs; ++i)
        for (std::size_t j = i + 1; j < catalog.size() && r.checked < max_pairs; ++j) {
            const auto &a = catalog[i].set, &b = catalog[j].set;
            if (disjoint(a, b) || subset(a, b) || subset(b, a)) continue;
            for (std::size_t x : {i, j})
                if (!info.count(x)) info[x] = info_of(catalog[x]);
            if (!info[i].primitive || !info[j].primitive) continue;
            ++r.checked;
            PointSet u;
            if (homogeneity_degree(union_group(catalog, {i, j}, u), 2) < 2) ++r.violations;
        }
    return r;
}

PropertyResult check_translates_cover_pairs(const Group& g, const std::vector<JordanWitness>& catalog) {
    PropertyResult r{"translates of a Jordan set cover every pair (primitive G)", 0, 0};
    if (g.degree() < 2 || !is_transitive(g) || !is_primitive(g).primitive) return r;
    const std::size_t n = g.degree();
    for (const auto& w : catalog) {
        ++r.checked;
        std::vector<char> covered(n * n, 0);
        for (const auto& t : translates(g.generators(), w.set))
            for (Point a : t)
                for (Point b : t) covered[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = 1;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (!covered[a * n + b]) { ok = false; break; }
        if (!ok) ++r.violations;
    }
    return r;
}

}  // namespace permlab
