#include "permlab/wreath.hpp"

#include <set>

#include "json.hpp"

namespace permlab {

Group wreath(const Group& a, const Group& b) {
    const std::size_t gs = a.degree(), ds = b.degree();
    if (gs == 0 || ds == 0) fail(ErrorKind::TooSmall, "wreath factors need degree at least 1");
    const std::size_t n = gs * ds;
    std::vector<Perm> gens;
    for (std::size_t d = 0; d < ds; ++d)
        for (const auto& s : a.generators()) {
            std::vector<Point> img(n);
            for (std::size_t p = 0; p < n; ++p) img[p] = static_cast<Point>(p);
            for (std::size_t g = 0; g < gs; ++g)
                img[d * gs + g] = product_point(gs, s(static_cast<Point>(g)), static_cast<Point>(d));
            gens.emplace_back(std::move(img));
        }
    for (const auto& t : b.generators()) {
        std::vector<Point> img(n);
        for (std::size_t d = 0; d < ds; ++d)
            for (std::size_t g = 0; g < gs; ++g)
                img[d * gs + g] = product_point(gs, static_cast<Point>(g), t(static_cast<Point>(d)));
        gens.emplace_back(std::move(img));
    }
    return Group(n, std::move(gens));
}

BigInt wreath_order(const Group& a, const Group& b, std::size_t cap) {
    BigInt r = b.order(cap);
    for (std::size_t d = 0; d < b.degree(); ++d) r *= a.order(cap);
    return r;
}

Partition fiber_partition(std::size_t gamma_size, std::size_t delta_size) {
    std::vector<int> labels(gamma_size * delta_size);
    for (std::size_t p = 0; p < labels.size(); ++p) labels[p] = static_cast<int>(p / gamma_size);
    return Partition::from_labels(labels);
}

Group wreath_variation1(const Group& a, const Group& b_delta, const Group& b_phi, const std::vector<Point>& pi) {
    const std::size_t gs = a.degree(), ds = b_delta.degree(), fs = b_phi.degree();
    if (pi.size() != ds) fail(ErrorKind::LengthMismatch, "pi must be defined on all of Delta");
    if (b_delta.generators().size() != b_phi.generators().size())
        fail(ErrorKind::NotAMorphism, "B needs the same generator list on Delta and Phi");
    for (Point f : pi)
        if (f < 0 || static_cast<std::size_t>(f) >= fs) fail(ErrorKind::PointOutOfRange, "pi image out of range");
    for (std::size_t i = 0; i < b_delta.generators().size(); ++i)
        for (std::size_t d = 0; d < ds; ++d)
            if (pi[static_cast<std::size_t>(b_delta.generators()[i](static_cast<Point>(d)))] !=
                b_phi.generators()[i](pi[d]))
                fail(ErrorKind::NotAMorphism, "pi does not commute with the action of B");
    const std::size_t n = gs * ds;
    std::vector<Perm> gens;
    for (std::size_t f = 0; f < fs; ++f)
        for (const auto& s : a.generators()) {
            std::vector<Point> img(n);
            for (std::size_t d = 0; d < ds; ++d)
                for (std::size_t g = 0; g < gs; ++g) {
                    Point gg = pi[d] == static_cast<Point>(f) ? s(static_cast<Point>(g)) : static_cast<Point>(g);
                    img[d * gs + g] = product_point(gs, gg, static_cast<Point>(d));
                }
            gens.emplace_back(std::move(img));
        }
    for (const auto& t : b_delta.generators()) {
        std::vector<Point> img(n);
        for (std::size_t d = 0; d < ds; ++d)
            for (std::size_t g = 0; g < gs; ++g)
                img[d * gs + g] = product_point(gs, static_cast<Point>(g), t(static_cast<Point>(d)));
        gens.emplace_back(std::move(img));
    }
    return Group(n, std::move(gens));
}

Poset Poset::chain(std::size_t k) {
    Poset p;
    p.leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) p.leq[i][j] = true;
    return p;
}

Poset Poset::antichain(std::size_t k) {
    Poset p;
    p.leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) p.leq[i][i] = true;
    return p;
}

void validate_poset(const Poset& p) {
    const std::size_t k = p.size();
    for (const auto& row : p.leq)
        if (row.size() != k) fail(ErrorKind::InvalidArgument, "poset matrix is not square");
    for (std::size_t i = 0; i < k; ++i) {
        if (!p.leq[i][i]) fail(ErrorKind::InvalidArgument, "poset is not reflexive");
        for (std::size_t j = 0; j < k; ++j) {
            if (i != j && p.leq[i][j] && p.leq[j][i]) fail(ErrorKind::InvalidArgument, "poset is not antisymmetric");
            for (std::size_t l = 0; l < k; ++l)
                if (p.leq[i][j] && p.leq[j][l] && !p.leq[i][l])
                    fail(ErrorKind::InvalidArgument, "poset is not transitive");
        }
    }
}

std::vector<Point> product_coords(const std::vector<std::size_t>& sizes, Point p) {
    std::vector<Point> c(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        c[i] = p % static_cast<Point>(sizes[i]);
        p /= static_cast<Point>(sizes[i]);
    }
    return c;
}

Point product_index(const std::vector<std::size_t>& sizes, const std::vector<Point>& coords) {
    Point p = 0;
    for (std::size_t i = sizes.size(); i-- > 0;) p = p * static_cast<Point>(sizes[i]) + coords[i];
    return p;
}

Group generalized_wreath(const Poset& poset, const std::vector<Group>& components, std::size_t cap) {
    validate_poset(poset);
    const std::size_t k = poset.size();
    if (components.size() != k) fail(ErrorKind::LengthMismatch, "one component per poset element");
    if (k == 0) fail(ErrorKind::TooSmall, "empty poset");
    std::vector<std::size_t> sizes;
    std::size_t n = 1;
    for (const auto& c : components) {
        if (c.degree() == 0) fail(ErrorKind::TooSmall, "component of degree 0");
        sizes.push_back(c.degree());
        if (n > cap / c.degree()) fail(ErrorKind::CapExceeded, "product domain exceeds the cap");
        n *= c.degree();
    }
    std::vector<std::vector<Point>> coords(n);
    for (std::size_t p = 0; p < n; ++p) coords[p] = product_coords(sizes, static_cast<Point>(p));

    std::vector<Perm> gens;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::size_t> above;
        for (std::size_t j = 0; j < k; ++j)
            if (poset.less(i, j)) above.push_back(j);
        std::vector<std::size_t> up_sizes;
        std::size_t count = 1;
        for (std::size_t j : above) {
            up_sizes.push_back(sizes[j]);
            count *= sizes[j];
        }
        // one generator per (tuple of coordinates above i, generator of H_i)
        for (std::size_t t = 0; t < count; ++t) {
            std::vector<Point> tau = product_coords(up_sizes, static_cast<Point>(t));
            for (const auto& h : components[i].generators()) {
                std::vector<Point> img(n);
                for (std::size_t p = 0; p < n; ++p) {
                    bool match = true;
                    for (std::size_t a = 0; a < above.size() && match; ++a)
                        if (coords[p][above[a]] != tau[a]) match = false;
                    if (!match) {
                        img[p] = static_cast<Point>(p);
                        continue;
                    }
                    auto c = coords[p];
                    c[i] = h(c[i]);
                    img[p] = product_index(sizes, c);
                }
                gens.emplace_back(std::move(img));
            }
        }
    }
    return Group(n, std::move(gens));
}

bool HallTower::all_sections_ok() const {
    for (bool b : sections_ok)
        if (!b) return false;
    return true;
}

bool permutation_equal(const Group& x, const Group& y, std::size_t cap) {
    if (x.degree() != y.degree()) return false;
    for (const auto& s : x.generators())
        if (!y.contains(s, cap)) return false;
    for (const auto& s : y.generators())
        if (!x.contains(s, cap)) return false;
    return true;
}

namespace {

Group tower(const std::vector<Group>& chain, std::size_t from, std::size_t to) {
    Group w = chain[from];
    for (std::size_t i = from + 1; i < to; ++i) w = wreath(w, chain[i]);
    return w;
}

}  // namespace

HallTower hall_tower(const std::vector<Group>& chain, std::size_t cap) {
    if (chain.empty()) fail(ErrorKind::TooSmall, "empty chain");
    HallTower h;
    h.group = tower(chain, 0, chain.size());
    for (std::size_t k = 1; k < chain.size(); ++k) {
        Group split = wreath(tower(chain, 0, k), tower(chain, k, chain.size()));
        h.sections_ok.push_back(permutation_equal(split, h.group, cap));
    }
    return h;
}

EmbeddingReport imprimitive_embedding(const Group& g, const Partition& rho, std::size_t cap) {
    const std::size_t n = g.degree();
    if (rho.degree() != n) fail(ErrorKind::DegreeMismatch, "partition degree differs from group degree");
    if (!is_congruence(g, rho)) fail(ErrorKind::NotACongruence, "partition is not G-invariant");
    if (rho.is_discrete() || rho.is_universal())
        fail(ErrorKind::NotACongruence, "embedding needs a proper nontrivial congruence");
    if (!is_transitive(g)) fail(ErrorKind::NotTransitive, "embedding needs a transitive group");

    EmbeddingReport r;
    const auto& blocks = rho.blocks;
    const PointSet& gamma = blocks[static_cast<std::size_t>(rho.block_of[0])];
    const std::size_t gs = gamma.size(), ds = blocks.size();
    std::vector<int> label(n, -1);
    for (std::size_t i = 0; i < gs; ++i) label[static_cast<std::size_t>(gamma[i])] = static_cast<int>(i);

    Group setstab = stabilizer(g, StabKind::Setwise, gamma, cap);
    std::vector<Perm> agens;
    for (const auto& s : setstab.generators()) {
        std::vector<Point> img(gs);
        for (std::size_t i = 0; i < gs; ++i) img[i] = label[static_cast<std::size_t>(s(gamma[i]))];
        agens.emplace_back(std::move(img));
    }
    r.a = Group(gs, agens);
    r.b = action_on_sets(g, blocks);

    // t_delta: transversal element of the BFS-first point of block delta
    OrbitResult orb = orbit(g, 0);
    std::vector<Perm> t(ds, Perm(n));
    std::vector<char> got(ds, 0);
    for (Point p : orb.bfs_order) {
        auto d = static_cast<std::size_t>(rho.block_of[static_cast<std::size_t>(p)]);
        if (got[d]) continue;
        got[d] = 1;
        t[d] = orb.transversal.at(p);
    }
    std::vector<Perm> tinv;
    for (const auto& x : t) tinv.push_back(x.inverse());

    r.phi.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
        auto d = static_cast<std::size_t>(rho.block_of[w]);
        Point base = tinv[d](static_cast<Point>(w));
        r.phi[w] = product_point(gs, label[static_cast<std::size_t>(base)], static_cast<Point>(d));
    }

    // g psi = (f, g^Delta) with f(delta) = t_delta g t_(delta g)^-1 on the base block
    auto psi = [&](const Perm& x) {
        std::vector<Point> img(n);
        for (std::size_t d = 0; d < ds; ++d) {
            auto dg = static_cast<std::size_t>(rho.block_of[static_cast<std::size_t>(x(blocks[d].front()))]);
            Perm f = t[d] * x * tinv[dg];
            for (std::size_t i = 0; i < gs; ++i)
                img[d * gs + i] = product_point(gs, label[static_cast<std::size_t>(f(gamma[i]))], static_cast<Point>(dg));
        }
        return Perm(std::move(img));
    };

    r.compatible = true;
    for (const auto& s : g.generators()) {
        Perm ps = psi(s);
        r.psi_generators.push_back(ps);
        for (std::size_t w = 0; w < n; ++w)
            if (r.phi[static_cast<std::size_t>(s(static_cast<Point>(w)))] != ps(r.phi[w])) r.compatible = false;
    }

    // membership in A Wr B: fiber maps lie in A, the induced block map lies in B
    r.image_in_wreath = true;
    for (const auto& ps : r.psi_generators) {
        std::vector<Point> top(ds);
        for (std::size_t d = 0; d < ds; ++d) {
            std::vector<Point> fiber(gs);
            for (std::size_t i = 0; i < gs; ++i) {
                Point q = ps(static_cast<Point>(d * gs + i));
                fiber[i] = q % static_cast<Point>(gs);
                top[d] = q / static_cast<Point>(gs);
            }
            if (!r.a.contains(Perm(fiber), cap)) r.image_in_wreath = false;
        }
        if (!r.b.contains(Perm(top), cap)) r.image_in_wreath = false;
    }

    const Elements& e = g.elements(cap);
    std::set<Perm> images;
    for (const auto& x : e.list) images.insert(psi(x));
    r.image_order = images.size();
    r.injective = images.size() == e.size();
    r.wreath_order = wreath_order(r.a, r.b, cap);
    r.index = r.wreath_order / r.image_order;
    return r;
}

namespace {

using nlohmann::json;

json group_json(const Group& g) {
    json gens = json::array();
    for (const auto& s : g.generators()) gens.push_back(format_cycles(s));
    return {{"degree", g.degree()}, {"generators", gens}};
}

Group group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
        fail(ErrorKind::MalformedSyntax, "group needs degree and generators");
    auto n = j.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto& s : j.at("generators")) gens.push_back(parse_cycles(s.get<std::string>(), n));
    return Group(n, std::move(gens));
}

}  // namespace

std::string to_json(const WreathSpec& s) {
    json j;
    j["kind"] = s.kind;
    j["linearization"] = "coordinate 0 least significant; (gamma, delta) -> delta*|Gamma| + gamma";
    j["factors"] = json::array();
    for (const auto& f : s.factors) j["factors"].push_back(group_json(f));
    j["base_points"] = json::array();
    for (std::size_t i = 0; i < s.factors.size(); ++i) j["base_points"].push_back(1);
    json m = json::array();
    for (const auto& row : s.poset.leq) {
        json r = json::array();
        for (bool b : row) r.push_back(b ? 1 : 0);
        m.push_back(r);
    }
    j["poset"] = m;
    if (s.kind == "variation1") {
        json pi = json::array();
        for (Point p : s.pi) pi.push_back(p + 1);
        j["pi"] = pi;
        j["phi"] = group_json(Group(s.phi_size, s.phi_generators));
    }
    return j.dump(2);
}

WreathSpec wreath_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::MalformedSyntax, std::string("wreath spec: ") + e.what());
    }
    try {
        WreathSpec s;
        s.kind = j.at("kind").get<std::string>();
        for (const auto& f : j.at("factors")) s.factors.push_back(group_from_json(f));
        if (j.contains("poset"))
            for (const auto& row : j.at("poset")) {
                std::vector<bool> r;
                for (const auto& b : row) r.push_back(b.get<int>() != 0);
                s.poset.leq.push_back(r);
            }
        if (s.kind == "variation1") {
            for (const auto& p : j.at("pi")) s.pi.push_back(p.get<Point>() - 1);
            Group ph = group_from_json(j.at("phi"));
            s.phi_size = ph.degree();
            s.phi_generators = ph.generators();
        }
        return s;
    } catch (const json::exception& e) {
        fail(ErrorKind::MalformedSyntax, std::string("wreath spec: ") + e.what());
    }
}

Group build(const WreathSpec& s, std::size_t cap) {
    if (s.kind == "wreath") {
        if (s.factors.size() != 2) fail(ErrorKind::ArityMismatch, "wreath takes two factors");
        return wreath(s.factors[0], s.factors[1]);
    }
    if (s.kind == "variation1") {
        if (s.factors.size() != 2) fail(ErrorKind::ArityMismatch, "variation1 takes two factors");
        return wreath_variation1(s.factors[0], s.factors[1], Group(s.phi_size, s.phi_generators), s.pi);
    }
    if (s.kind == "generalized") return generalized_wreath(s.poset, s.factors, cap);
    if (s.kind == "hall") return hall_tower(s.factors, cap).group;
    fail(ErrorKind::InvalidArgument, "unknown wreath kind: " + s.kind);
}

}  // namespace permlab
