// permlab: command-line front end over the analysis library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "permlab/acceptance.hpp"
#include "permlab/congruence.hpp"
#include "permlab/dense.hpp"
#include "permlab/lw.hpp"
#include "permlab/report.hpp"
#include "permlab/tree.hpp"
#include "permlab/wreath.hpp"

using namespace permlab;

namespace {

std::vector<std::string> split(const std::string& s, const std::string& seps) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (seps.find(c) != std::string::npos) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<std::size_t> split_counts(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& x : split(s, ", ")) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(x, &used);
            if (used != x.size() || v < 0) throw std::invalid_argument(x);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            fail(ErrorKind::MalformedSyntax, "expected a nonnegative integer, got '" + x + "'");
        }
    }
    return out;
}

std::vector<Rational> split_rationals(const std::string& s) {
    std::vector<Rational> out;
    for (const auto& x : split(s, ", ")) out.push_back(parse_rational(x));
    return out;
}

// Generators are separated by ';' inside one flag, or given as repeated flags.
std::vector<std::string> generator_list(const std::vector<std::string>& flags) {
    std::vector<std::string> out;
    for (const auto& f : flags)
        for (const auto& g : split(f, ";")) out.push_back(g);
    return out;
}

// Fixture name, or c_N for any cyclic group.
Group named_group(const std::string& name) {
    std::smatch m;
    static const std::regex cyclic("c_([0-9]+)");
    if (std::regex_match(name, m, cyclic)) {
        std::size_t n = std::stoul(m[1]);
        if (n == 0) fail(ErrorKind::InvalidArgument, "c_0 is not a group");
        std::vector<Point> img(n);
        for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
        return Group(n, {Perm(img)});
    }
    return fixture_group(fixture(name));
}

struct GroupFlags {
    std::string fixture;
    std::vector<std::string> gens;
    std::size_t degree = 0;
    void add(CLI::App* app) {
        app->add_option("--fixture", fixture, "built-in fixture name");
        app->add_option("--gens", gens, "generators in 1-based cycle notation, ';'-separated or repeated");
        app->add_option("--degree", degree, "degree for inline generators");
    }
    bool given() const { return !fixture.empty() || !gens.empty(); }
    Group group() const {
        if (!fixture.empty()) return named_group(fixture);
        if (degree == 0) fail(ErrorKind::InvalidArgument, "inline generators need --degree");
        return Group::from_cycles(generator_list(gens), degree);
    }
};

Json axiom_json(const AxiomReport& r) {
    Json list = Json::array();
    for (const auto& a : r.results) {
        const char* role = a.role == AxiomRole::Core ? "core" : a.role == AxiomRole::Denseness ? "denseness" : "extra";
        Json w = nullptr;
        if (a.witness) {
            w = Json::array();
            for (Point p : *a.witness) w.push_back(p + 1);
        }
        list.push_back({{"axiom", a.name}, {"role", role}, {"holds", a.holds}, {"witness", w}});
    }
    return {{"family", family_name(r.family)}, {"core_holds", r.core_holds()}, {"axioms", list}};
}

Family parse_family(const std::string& s) {
    if (s == "semilinear") return Family::Semilinear;
    if (s == "C" || s == "c") return Family::C;
    if (s == "B" || s == "b") return Family::B;
    if (s == "D" || s == "d") return Family::D;
    fail(ErrorKind::InvalidArgument, "unknown family '" + s + "' (semilinear, C, B, D)");
}

OrderKind parse_kind(const std::string& s) {
    for (OrderKind k : {OrderKind::Linear, OrderKind::Betweenness, OrderKind::Cyclic, OrderKind::Separation})
        if (s == order_kind_name(k)) return k;
    fail(ErrorKind::InvalidArgument, "unknown kind '" + s + "' (linear, betweenness, cyclic, separation)");
}

Json poset_json(const FinitePoset& p) {
    Json cover = Json::array();
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (a != b && p.le(a, b)) cover.push_back({p.labels[a], p.labels[b]});
    return {{"elements", p.labels}, {"less_than", cover}, {"positive_type", p.positive_type()}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Common {
    std::string format = "json";
    std::uint64_t seed = 1;
    void add(CLI::App* app) {
        app->add_option("--format", format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
        app->add_option("--seed", seed, "seed for sampled instances");
    }
};

std::string pass_footer() {
    std::string s = "Passes:\n";
    for (const auto& p : analysis_passes()) s += "  " + p.name + std::string(18 - std::min<std::size_t>(17, p.name.size()), ' ') + p.description + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permlab: finite permutation group and relational structure analysis"};
    app.require_subcommand(1);
    app.footer(pass_footer());
    std::size_t cap = 0;
    app.add_option("--cap", cap, "element cap for enumerations (overrides PERMLAB_CAP)");

    Common common;
    // analyze
    auto* an = app.add_subcommand("analyze", "run analysis passes on a group");
    GroupFlags an_group;
    an_group.add(an);
    std::string pass_list;
    an->add_option("--pass", pass_list, "comma-separated passes, run in the order given")->required();
    common.add(an);
    an->footer(pass_footer());

    // corpus
    auto* co = app.add_subcommand("corpus", "list or describe built-in fixtures");
    std::string co_action, co_name;
    co->add_option("action", co_action, "list or describe")->required()->check(CLI::IsMember({"list", "describe"}));
    co->add_option("name", co_name, "fixture to describe");
    common.add(co);

    // suite
    auto* su = app.add_subcommand("suite", "run the acceptance battery");
    std::string su_filter;
    bool su_all = false;
    su->add_option("--filter", su_filter, "keep criteria whose title contains this text");
    su->add_flag("--all", su_all, "run every criterion (the default when no filter is given)");
    common.add(su);

    // wreath
    auto* wr = app.add_subcommand("wreath", "build a wreath product, optionally saving its description");
    std::string wr_a, wr_b, wr_tower, wr_out, wr_load;
    wr->add_option("--a", wr_a, "fixture or c_N acting on the fibers");
    wr->add_option("--b", wr_b, "fixture or c_N acting on the fiber index");
    wr->add_option("--tower", wr_tower, "comma-separated factors of an iterated wreath product");
    wr->add_option("--out", wr_out, "write the JSON description here");
    wr->add_option("--load", wr_load, "rebuild from a saved JSON description");
    common.add(wr);

    // relations
    auto* re = app.add_subcommand("relations", "build and check order, tree and set-family relations");
    std::string re_order, re_kind = "betweenness", re_cmodel, re_words, re_check, re_family = "C", re_subset;
    std::size_t re_letters = 2, re_domain = 0;
    re->add_option("--order", re_order, "linear order as a 1-based point list, least first");
    re->add_option("--kind", re_kind, "linear, betweenness, cyclic or separation");
    re->add_option("--c-model", re_cmodel, "finite C-model 'k,s'");
    re->add_option("--words", re_words, "ascending rationals for the word model, e.g. '0,1,2'");
    re->add_option("--letters", re_letters, "ramification index s of the word model");
    re->add_option("--check", re_check, "JSON file of 1-based tuples to check");
    re->add_option("--family", re_family, "semilinear, C, B or D");
    re->add_option("--domain", re_domain, "domain size for --check");
    re->add_option("--subset", re_subset, "subset of a group's domain: classify it and derive relations");
    GroupFlags re_group;
    re_group.add(re);
    common.add(re);

    // cantor
    auto* ca = app.add_subcommand("cantor", "forth construction between enumerations of Q, and PL maps");
    std::string ca_source = "dyadic", ca_target = "standard", ca_alpha, ca_beta, ca_at;
    std::size_t ca_count = 20, ca_target_count = 4000;
    ca->add_option("--source", ca_source, "standard or dyadic")->check(CLI::IsMember({"standard", "dyadic"}));
    ca->add_option("--target", ca_target, "standard or dyadic")->check(CLI::IsMember({"standard", "dyadic"}));
    ca->add_option("--count", ca_count, "number of source terms");
    ca->add_option("--target-count", ca_target_count, "number of target terms available");
    ca->add_option("--alpha", ca_alpha, "PL breakpoints, ascending");
    ca->add_option("--beta", ca_beta, "PL images, ascending");
    ca->add_option("--at", ca_at, "points to evaluate the PL map at");
    common.add(ca);

    // lw
    auto* lw = app.add_subcommand("lw", "subset incidence ranks, orbit counts, theta products");
    std::size_t lw_n = 0, lw_k = 0, lw_kmax = 0;
    std::string lw_theta;
    bool lw_csv = false;
    lw->add_option("--n", lw_n, "domain size for the incidence matrix");
    lw->add_option("--k", lw_k, "subset size for the incidence matrix");
    lw->add_option("--theta", lw_theta, "'n,r,s,t' for the theta product");
    lw->add_option("--kmax", lw_kmax, "largest subset size for orbit counts (default n/2)");
    lw->add_flag("--csv", lw_csv, "print the matrix as CSV instead of a report");
    GroupFlags lw_group;
    lw_group.add(lw);
    common.add(lw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (const char* env = std::getenv("PERMLAB_CAP")) {
            auto v = split_counts(env);
            if (v.size() != 1) fail(ErrorKind::InvalidArgument, "PERMLAB_CAP must be one positive integer");
            set_default_cap(v[0]);
        }
        if (cap) set_default_cap(cap);
        Format format = parse_format(common.format);
        Report out;

        if (an->parsed()) {
            AnalysisRequest req;
            if (!an_group.fixture.empty()) req.fixture = an_group.fixture;
            req.generators = generator_list(an_group.gens);
            req.degree = an_group.degree;
            req.passes = split(pass_list, ", ");
            out = analyze(req);
        } else if (co->parsed()) {
            out.json = envelope("corpus");
            if (co_action == "list") {
                Json list = Json::array();
                for (const auto& f : corpus()) list.push_back(fixture_summary(f));
                out.json["fixtures"] = list;
            } else {
                if (co_name.empty()) fail(ErrorKind::InvalidArgument, "describe needs a fixture name");
                out.json["fixture"] = fixture_details(fixture(co_name));
            }
        } else if (su->parsed()) {
            out.json = envelope("suite");
            out.json["seed"] = common.seed;
            auto results = run_acceptance(common.seed, su_all ? "" : su_filter);
            if (results.empty()) std::cerr << "warning: no criteria match the filter\n";
            Json list = Json::array();
            bool all = true;
            for (const auto& c : results) {
                list.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail},
                                {"seconds", c.seconds}});
                all = all && c.pass;
            }
            out.json["criteria"] = list;
            out.json["all_pass"] = all;
        } else if (wr->parsed()) {
            WreathSpec spec;
            if (!wr_load.empty()) {
                spec = wreath_spec_from_json(read_file(wr_load));
            } else if (!wr_tower.empty()) {
                spec.kind = "hall";
                for (const auto& name : split(wr_tower, ", ")) spec.factors.push_back(named_group(name));
            } else {
                if (wr_a.empty() || wr_b.empty()) fail(ErrorKind::InvalidArgument, "give --a and --b, --tower, or --load");
                spec.kind = "wreath";
                spec.factors = {named_group(wr_a), named_group(wr_b)};
            }
            Group g = build(spec);
            std::string text = to_json(spec);
            if (!wr_out.empty()) {
                std::ofstream f(wr_out);
                if (!f) fail(ErrorKind::InvalidArgument, "cannot write " + wr_out);
                f << text << "\n";
            }
            out.json = envelope("wreath");
            Json gens = Json::array();
            for (const auto& x : g.generators()) gens.push_back(format_cycles(x));
            out.json["description"] = Json::parse(text);
            out.json["degree"] = g.degree();
            out.json["generators"] = gens;
            out.json["order"] = g.order();
            out.json["block_system"] = Json::array();
            if (spec.kind == "wreath")
                for (const auto& b : fiber_partition(spec.factors[0].degree(), spec.factors[1].degree()).blocks)
                    out.json["block_system"].push_back(point_set(b));
        } else if (re->parsed()) {
            out.json = envelope("relations");
            int modes = !re_order.empty() + !re_cmodel.empty() + !re_words.empty() + !re_check.empty() + !re_subset.empty();
            if (modes != 1) fail(ErrorKind::InvalidArgument, "choose one of --order, --c-model, --words, --check, --subset");
            if (!re_order.empty()) {
                std::vector<Point> asc;
                for (auto p : split_counts(re_order)) {
                    if (p == 0) fail(ErrorKind::PointOutOfRange, "points are 1-based");
                    asc.push_back(static_cast<Point>(p - 1));
                }
                OrderKind kind = parse_kind(re_kind);
                RelationK rel = derive_relation(linear_order(asc), kind);
                auto local = local_characterization_check(rel, kind);
                out.json["kind"] = order_kind_name(kind);
                out.json["tuples"] = relation_json(rel);
                out.json["local_check"] = {{"ok", local.ok},
                                           {"subsets_checked", local.subsets_checked},
                                           {"witness", local.witness ? point_set(*local.witness) : Json(nullptr)}};
                if (kind == OrderKind::Separation) out.json["axioms"] = axiom_json(check_axioms(rel, Family::D));
            } else if (!re_cmodel.empty()) {
                auto ks = split_counts(re_cmodel);
                if (ks.size() != 2) fail(ErrorKind::MalformedSyntax, "--c-model takes 'k,s'");
                auto m = finite_c_model(ks[0], ks[1]);
                out.json["points"] = m.functions.size();
                out.json["tuples"] = relation_json(m.c);
                out.json["axioms"] = axiom_json(check_axioms(m.c, Family::C));
                auto s = semilinear_from_c(m.c);
                out.json["semilinear"] = {{"nodes", s.lambda.size()},
                                          {"axioms", axiom_json(s.semilinear)},
                                          {"node_map_injective", s.node_map_injective},
                                          {"s_refines_r", s.s_refines_r},
                                          {"positive_type", s.positive_type}};
                out.dot.push_back(s.lambda.to_dot());
            } else if (!re_words.empty()) {
                auto m = lambda_word_model(split_rationals(re_words), re_letters);
                out.json["poset"] = poset_json(m.poset);
                out.json["ramification_ok"] = m.ramification_ok;
                out.json["axioms"] = axiom_json(check_axioms(m.poset.as_relation(), Family::Semilinear));
                auto b = betweenness_from_semilinear(m.poset);
                out.json["betweenness"] = {{"tuples", relation_json(b.relation)}, {"axioms", axiom_json(b.report)}};
                out.dot.push_back(m.poset.to_dot());
            } else if (!re_check.empty()) {
                Family fam = parse_family(re_family);
                if (re_domain == 0) fail(ErrorKind::InvalidArgument, "--check needs --domain");
                Json tuples = Json::parse(read_file(re_check));
                RelationK rel(family_arity(fam), re_domain);
                for (const auto& t : tuples) {
                    Tuple x;
                    for (const auto& p : t) {
                        long v = p.get<long>();
                        if (v < 1 || static_cast<std::size_t>(v) > re_domain)
                            fail(ErrorKind::PointOutOfRange, "tuple point outside 1.." + std::to_string(re_domain));
                        x.push_back(static_cast<Point>(v - 1));
                    }
                    if (x.size() != rel.arity()) fail(ErrorKind::ArityMismatch, "tuple length differs from the family arity");
                    rel.insert(x);
                }
                out.json["axioms"] = axiom_json(check_axioms(rel, fam));
            } else {
                if (!re_group.given()) fail(ErrorKind::InvalidArgument, "--subset needs --fixture or --gens");
                Group g = re_group.group();
                PointSet s;
                for (auto p : split_counts(re_subset)) {
                    if (p == 0 || p > g.degree()) fail(ErrorKind::PointOutOfRange, "subset point outside the domain");
                    s.push_back(static_cast<Point>(p - 1));
                }
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                auto c = classify_subset(g, s);
                out.json["classification"] = {{"stable", c.stable},
                                              {"semistable", c.semistable},
                                              {"highly_atypical", c.highly_atypical},
                                              {"separates_pairs", c.separates_pairs},
                                              {"separates_ordered_pairs", c.separates_ordered_pairs},
                                              {"idealistic", c.idealistic},
                                              {"degenerate", c.degenerate},
                                              {"translates", c.translate_count}};
                out.json["preorder"] = relation_json(preorder_from_family(g, s).relation);
                out.json["C"] = axiom_json(c_from_family(g, s).report);
                out.json["B"] = axiom_json(b_from_family(g, s).report);
                out.json["D"] = axiom_json(d_from_family(g, s).report);
            }
        } else if (ca->parsed()) {
            out.json = envelope("cantor");
            if (!ca_alpha.empty() || !ca_beta.empty()) {
                auto m = pl_automorphism(split_rationals(ca_alpha), split_rationals(ca_beta));
                Json vals = Json::array();
                for (const auto& x : split_rationals(ca_at))
                    vals.push_back({{"at", to_string(x)}, {"value", to_string(evaluate(m, x))}});
                out.json["pl"] = {{"values", vals}, {"branches_agree", branches_agree(m)}};
            } else {
                auto make = [](const std::string& kind, std::size_t count) {
                    return kind == "dyadic" ? dyadic_rationals(count) : standard_rationals(count);
                };
                auto src = make(ca_source, ca_count), tgt = make(ca_target, ca_target_count);
                auto r = cantor_forth(src, tgt);
                Json steps = Json::array();
                for (const auto& s : r.steps)
                    steps.push_back({{"source_index", s.source + 1},
                                     {"source", to_string(src[s.source])},
                                     {"target_index", s.target + 1},
                                     {"target", to_string(tgt[s.target])}});
                out.json["steps"] = steps;
                out.json["exhausted"] = r.exhausted;
                out.json["stuck_source"] = r.stuck_source ? Json(*r.stuck_source + 1) : Json(nullptr);
                out.json["order_preserving"] = r.order_preserving;
            }
        } else if (lw->parsed()) {
            out.json = envelope("lw");
            if (!lw_theta.empty()) {
                auto v = split_counts(lw_theta);
                if (v.size() != 4) fail(ErrorKind::MalformedSyntax, "--theta takes 'n,r,s,t'");
                if (lw_csv) {
                    std::cout << to_csv(build_theta(v[0], v[1], v[2]));
                    return 0;
                }
                auto t = theta_exploration(v[0], v[1], v[2], v[3]);
                out.json["theta"] = {{"rank_rs", t.rank_rs},
                                     {"rank_st", t.rank_st},
                                     {"rank_rt", t.rank_rt},
                                     {"proportional", t.proportional},
                                     {"lambda", t.lambda ? Json(to_string(*t.lambda)) : Json(nullptr)}};
            } else if (lw_group.given()) {
                Group g = lw_group.group();
                auto r = orbit_count_inequality(g, lw_kmax ? lw_kmax : g.degree() / 2);
                out.json["orbit_counts"] = r.counts;
                out.json["inequality_holds"] = r.inequality_holds;
                out.json["burnside_agrees"] = r.burnside_agrees;
            } else {
                if (lw_n == 0 || lw_k == 0) fail(ErrorKind::InvalidArgument, "give --n and --k, --theta, or a group");
                ExactMatrix m = build_r_matrix(lw_n, lw_k);
                if (lw_csv) {
                    std::cout << to_csv(m);
                    return 0;
                }
                std::size_t rk = rank(m);
                out.json["rows"] = m.rows;
                out.json["cols"] = m.cols;
                out.json["rank"] = rk;
                out.json["injective"] = rk == m.cols;
            }
        }
        std::cout << render(out, format);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == ErrorKind::CapExceeded ? 3 : 2;
    } catch (const Json::exception& e) {
        std::cerr << "error (MalformedSyntax): " << e.what() << "\n";
        return 2;
    }
}
