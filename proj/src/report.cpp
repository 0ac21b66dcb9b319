#include "permlab/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "permlab/congruence.hpp"
#include "permlab/jordan.hpp"
#include "permlab/lw.hpp"
#include "permlab/wreath.hpp"

namespace permlab {

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "text") return Format::Text;
    if (s == "dot") return Format::Dot;
    fail(ErrorKind::InvalidArgument, "unknown format '" + s + "' (json, text, dot)");
}

const std::vector<PassInfo>& analysis_passes() {
    static const std::vector<PassInfo> passes{
        {"order", "group order by breadth-first closure"},
        {"orbits", "orbits and breadth-first transversal words of point 1"},
        {"transitivity", "transitivity and homogeneity degrees up to 5"},
        {"primitivity", "primitivity by minimal blocks and by orbital-graph connectivity"},
        {"suborbits", "suborbits of point 1, their pairing, and subdegree identities"},
        {"orbitals", "non-diagonal orbital graphs: connectivity, valency, sphere sizes (DOT)"},
        {"congruences", "all congruences"},
        {"semiblocks", "semiblocks of point 1 and strong primitivity"},
        {"correspondence", "congruences against overgroups of the point stabilizer"},
        {"bergman-lenstra", "normal subgroup with finite classes and a bounded quotient stabilizer"},
        {"normals", "normal subgroups with transitivity and regularity audit"},
        {"jordan", "Jordan sets with witness stabilizer orders (DOT: inclusion diagram)"},
        {"span", "span closure of every 2-set and the closure and exchange audit"},
        {"embedding", "embedding into the wreath product over a block system"},
        {"lw", "orbit counts on k-subsets, Burnside cross-check, and the count inequality"},
        {"automorphisms", "permutations commuting with the group"},
    };
    return passes;
}

Json envelope(const std::string& verb) {
    return Json{{"schema", schema_version},
                {"tool", "permlab"},
                {"version", tool_version},
                {"caps", {{"elements", default_cap()}}},
                {"verb", verb}};
}

Json point_set(const PointSet& s) {
    Json a = Json::array();
    for (Point p : s) a.push_back(p + 1);
    return a;
}

Json relation_json(const RelationK& r) {
    Json a = Json::array();
    for (const auto& t : r.tuples()) {
        Json row = Json::array();
        for (Point p : t) row.push_back(p + 1);
        a.push_back(row);
    }
    return a;
}

namespace {

Json partition_json(const Partition& p) {
    Json a = Json::array();
    for (const auto& b : p.blocks) a.push_back(point_set(b));
    return a;
}

Json perms_json(const std::vector<Perm>& ps) {
    Json a = Json::array();
    for (const auto& p : ps) a.push_back(format_cycles(p));
    return a;
}

std::string set_label(const PointSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

// Hasse diagram of sets under inclusion, smallest at the bottom.
std::string inclusion_dot(const std::vector<PointSet>& sets, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < sets.size(); ++i) os << "  n" << i << " [label=\"" << set_label(sets[i]) << "\"];\n";
    auto inside = [&](std::size_t i, std::size_t j) {
        return i != j && sets[i].size() < sets[j].size() &&
               std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
    };
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (!inside(i, j)) continue;
            bool cover = true;
            for (std::size_t k = 0; k < sets.size() && cover; ++k)
                if (inside(i, k) && inside(k, j)) cover = false;
            if (cover) os << "  n" << i << " -> n" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

Json run_pass(const Group& g, const std::string& pass, std::vector<std::string>& dots) {
    const std::size_t n = g.degree();
    if (pass == "order") return {{"order", g.order()}};
    if (pass == "orbits") {
        Json orbs = Json::array();
        for (const auto& o : orbits(g)) orbs.push_back(point_set(o));
        auto o1 = orbit(g, 0);
        Json words = Json::object();
        for (const auto& [p, w] : o1.words) {
            Json word = Json::array();
            for (int i : w) word.push_back(i + 1);
            words[std::to_string(p + 1)] = word;
        }
        return {{"orbits", orbs}, {"transitive", is_transitive(g)}, {"words_from_1", words}};
    }
    if (pass == "transitivity") {
        std::size_t kmax = std::min<std::size_t>(n, 5);
        return {{"kmax", kmax},
                {"transitivity_degree", transitivity_degree(g, kmax)},
                {"homogeneity_degree", homogeneity_degree(g, kmax)}};
    }
    if (pass == "primitivity") {
        if (n < 2) fail(ErrorKind::TooSmall, "degree 1 excluded: primitivity needs at least 2 points");
        auto p = is_primitive(g);
        Json j{{"primitive", p.primitive},
               {"route_blocks", p.route_blocks},
               {"route_orbitals", p.route_orbitals},
               {"routes_agree", p.agree}};
        j["block_system"] = p.witness ? partition_json(*p.witness) : Json(nullptr);
        return j;
    }
    if (pass == "suborbits") {
        auto s = suborbits(g, 0);
        auto d = subdegree_check(g);
        Json subs = Json::array(), paired = Json::array();
        for (const auto& x : s.suborbits) subs.push_back(point_set(x));
        for (auto i : s.paired) paired.push_back(i);
        return {{"point", 1},
                {"suborbits", subs},
                {"paired", paired},
                {"subdegrees", d.subdegrees},
                {"paired_lengths_equal", d.paired_lengths_equal},
                {"index_identity", d.index_identity}};
    }
    if (pass == "orbitals") {
        Json list = Json::array();
        for (const auto& o : orbitals(g)) {
            if (o.diagonal()) continue;
            auto rep = orbital_graph(g, o);
            list.push_back({{"representative", {o.representative.first + 1, o.representative.second + 1}},
                            {"size", o.pairs.size()},
                            {"weakly_connected", rep.weakly_connected},
                            {"valency", rep.valency},
                            {"spheres", rep.spheres},
                            {"sphere_bound_holds", rep.sphere_bound_holds}});
            dots.push_back(rep.dot);
        }
        return {{"orbitals", list}};
    }
    if (pass == "congruences") {
        Json list = Json::array();
        for (const auto& p : all_congruences(g)) list.push_back(partition_json(p));
        return {{"congruences", list}};
    }
    if (pass == "semiblocks") {
        Json list = Json::array();
        for (const auto& s : semiblocks(g, 0)) list.push_back(point_set(s));
        return {{"point", 1}, {"semiblocks", list}, {"strongly_primitive", is_strongly_primitive(g)}};
    }
    if (pass == "correspondence") {
        auto c = congruence_subgroup_correspondence(g, 0);
        Json orders = Json::array();
        for (const auto& o : c.overgroups) orders.push_back(o.size());
        return {{"congruences", c.congruences.size()},
                {"overgroup_orders", orders},
                {"bijective", c.bijective},
                {"order_preserving", c.order_preserving}};
    }
    if (pass == "bergman-lenstra") {
        auto d = bergman_lenstra(g);
        return {{"max_subdegree", d.m},
                {"m0", d.m0},
                {"phi", point_set(d.phi)},
                {"phi_containing_1", point_set(d.phi_alpha)},
                {"witness_count", d.witness_count},
                {"n_order", d.n_elements.size()},
                {"n_is_subgroup", d.n_is_subgroup},
                {"n_normal", d.n_normal},
                {"classes", partition_json(d.rho)},
                {"quotient_stabilizer_order", d.quotient_stab_order},
                {"classes_within_m", d.classes_within_m},
                {"stabilizer_bound_holds", d.stab_bound_holds}};
    }
    if (pass == "normals") {
        auto a = normal_subgroup_audit(g);
        Json list = Json::array();
        for (const auto& x : a.normals)
            list.push_back({{"order", x.order},
                            {"transitive", x.transitive},
                            {"abelian", x.abelian},
                            {"regular", x.regular},
                            {"generators", perms_json(x.generators)}});
        return {{"normal_subgroups", list},
                {"primitive", a.primitive},
                {"transitivity_holds", a.transitivity_holds},
                {"abelian_regular_holds", a.abelian_regular_holds},
                {"subdegrees_at_most_two", a.subdegrees_at_most_two},
                {"dichotomy_holds", a.dichotomy_holds}};
    }
    if (pass == "jordan") {
        auto cat = jordan_sets(g);
        Json list = Json::array();
        std::vector<PointSet> sets;
        for (const auto& w : cat) {
            list.push_back({{"set", point_set(w.set)}, {"witness_order", w.witness_order}, {"proper", w.proper}});
            sets.push_back(w.set);
        }
        dots.push_back(inclusion_dot(sets, "jordan"));
        return {{"jordan_sets", list}, {"count", cat.size()}};
    }
    if (pass == "span") {
        SpanGeometry geo(g);
        Json table = Json::array();
        for (Point a = 0; a < static_cast<Point>(n); ++a)
            for (Point b = a + 1; b < static_cast<Point>(n); ++b)
                table.push_back({{"pair", {a + 1, b + 1}}, {"span", point_set(geo.span({a, b}))}});
        auto au = geometry_audit(geo, 3);
        return {{"span_of_pairs", table},
                {"audit",
                 {{"passes", au.passes()},
                  {"extensive", au.extensive},
                  {"idempotent", au.idempotent},
                  {"monotone", au.monotone},
                  {"exchange", au.exchange},
                  {"exchange_checked", au.exchange_checked},
                  {"independent_orbits", au.independent_orbits},
                  {"transitive_on_independent", au.transitive_on_independent}}}};
    }
    if (pass == "embedding") {
        auto p = is_primitive(g);
        if (!p.witness) return {{"imprimitive", false}};
        auto e = imprimitive_embedding(g, *p.witness);
        return {{"imprimitive", true},
                {"block_system", partition_json(*p.witness)},
                {"compatible", e.compatible},
                {"injective", e.injective},
                {"image_in_wreath", e.image_in_wreath},
                {"image_order", e.image_order},
                {"wreath_order", e.wreath_order.str()},
                {"index", e.index.str()}};
    }
    if (pass == "lw") {
        auto r = orbit_count_inequality(g, n / 2);
        Json burnside = Json::array();
        for (const auto& b : r.burnside) burnside.push_back(b ? Json(to_string(*b)) : Json(nullptr));
        return {{"orbit_counts", r.counts},
                {"burnside", burnside},
                {"inequality_holds", r.inequality_holds},
                {"burnside_agrees", r.burnside_agrees},
                {"single_orbit_propagates", r.single_orbit_propagates}};
    }
    if (pass == "automorphisms") {
        Group a = gspace_automorphisms(g, 0);
        return {{"order", a.order()}, {"generators", perms_json(a.generators())}};
    }
    fail(ErrorKind::InvalidArgument, "unknown pass '" + pass + "'");
}

void render_text(const Json& j, const std::string& indent, std::ostringstream& os) {
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const Json& v) {
        if (!v.is_array()) return !v.is_object();
        return std::all_of(v.begin(), v.end(), [](const Json& x) {
            return !x.is_object() && (!x.is_array() || std::all_of(x.begin(), x.end(), [](const Json& y) {
                                          return y.is_primitive();
                                      }));
        });
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        std::string key = j.is_object() ? it.key() : "-";
        if (flat(v)) {
            os << indent << key << ": " << scalar(v) << "\n";
        } else {
            os << indent << key << ":\n";
            render_text(v, indent + "  ", os);
        }
    }
}

}  // namespace

Report analyze(const AnalysisRequest& req) {
    if (req.passes.empty()) fail(ErrorKind::InvalidArgument, "no passes requested");
    for (const auto& p : req.passes) {
        const auto& all = analysis_passes();
        if (std::none_of(all.begin(), all.end(), [&](const PassInfo& i) { return i.name == p; }))
            fail(ErrorKind::InvalidArgument, "unknown pass '" + p + "'");
    }
    Group g;
    Json source;
    if (req.fixture) {
        if (!req.generators.empty()) fail(ErrorKind::InvalidArgument, "give either a fixture or generators, not both");
        const Fixture& f = fixture(*req.fixture);
        g = fixture_group(f);
        source = {{"fixture", f.name}};
    } else {
        if (req.degree == 0) fail(ErrorKind::InvalidArgument, "inline generators need a positive degree");
        g = Group::from_cycles(req.generators, req.degree);
        source = {{"generators", req.generators}};
    }
    Report r;
    r.json = envelope("analyze");
    Json gens = Json::array();
    for (const auto& x : g.generators()) gens.push_back(format_cycles(x));
    r.json["group"] = {{"source", source}, {"degree", g.degree()}, {"generators", gens}};
    Json passes = Json::array();
    for (const auto& p : req.passes) passes.push_back({{"pass", p}, {"result", run_pass(g, p, r.dot)}});
    r.json["passes"] = passes;
    return r;
}

Json fixture_summary(const Fixture& f) {
    return {{"name", f.name},
            {"family", f.family},
            {"degree", f.degree},
            {"order", f.order},
            {"enumerable", f.enumerable}};
}

Json fixture_details(const Fixture& f) {
    Json j = fixture_summary(f);
    j["generators"] = f.generators;
    j["provenance"] = f.provenance;
    if (f.geometry) {
        Json lines = Json::array(), subspaces = Json::array();
        for (const auto& l : f.geometry->lines) lines.push_back(point_set(l));
        for (const auto& s : proper_subspaces(*f.geometry)) subspaces.push_back(point_set(s));
        j["geometry"] = {{"kind", f.geometry->kind},
                         {"q", f.geometry->q},
                         {"coordinates", f.geometry->coordinates},
                         {"lines", lines},
                         {"proper_subspaces", subspaces}};
    }
    return j;
}

std::string render(const Report& r, Format f) {
    if (f == Format::Json) return r.json.dump(2) + "\n";
    std::ostringstream text;
    render_text(r.json, "", text);
    if (f == Format::Text) return text.str();
    std::ostringstream os;
    for (const auto& d : r.dot) os << d;
    std::istringstream lines(text.str());
    for (std::string line; std::getline(lines, line);) os << "// " << line << "\n";
    return os.str();
}

}  // namespace permlab
