#include "permlab/tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

// Scan all assignments of `vars` points in lexicographic order; return the first where ok fails.
std::optional<Tuple> first_failure(std::size_t n, std::size_t vars, const std::function<bool(const Tuple&)>& ok) {
    if (n == 0) return std::nullopt;
    Tuple t(vars, 0);
    for (;;) {
        if (!ok(t)) return t;
        std::size_t j = vars;
        while (j > 0 && static_cast<std::size_t>(t[j - 1]) == n - 1) t[--j] = 0;
        if (j == 0) return std::nullopt;
        ++t[j - 1];
    }
}

AxiomResult axiom(std::string name, AxiomRole role, std::size_t n, std::size_t vars,
                  const std::function<bool(const Tuple&)>& ok) {
    AxiomResult r;
    r.name = std::move(name);
    r.role = role;
    r.witness = first_failure(n, vars, ok);
    r.holds = !r.witness;
    return r;
}

bool contains(const PointSet& s, Point p) { return std::binary_search(s.begin(), s.end(), p); }

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Semilinear: return "semilinear";
        case Family::C: return "C";
        case Family::B: return "B";
        case Family::D: return "D";
    }
    return "?";
}

std::size_t family_arity(Family f) {
    switch (f) {
        case Family::Semilinear: return 2;
        case Family::C:
        case Family::B: return 3;
        case Family::D: return 4;
    }
    return 0;
}

const AxiomResult& AxiomReport::get(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return r;
    fail(ErrorKind::InvalidArgument, "no axiom named " + name);
}

bool AxiomReport::core_holds() const {
    return std::all_of(results.begin(), results.end(),
                       [](const AxiomResult& r) { return r.role != AxiomRole::Core || r.holds; });
}

std::vector<std::string> AxiomReport::passed() const {
    std::vector<std::string> out;
    for (const auto& r : results)
        if (r.holds) out.push_back(r.name);
    return out;
}

std::vector<std::string> AxiomReport::failed() const {
    std::vector<std::string> out;
    for (const auto& r : results)
        if (!r.holds) out.push_back(r.name);
    return out;
}

AxiomReport check_axioms(const RelationK& R, Family f) {
    if (R.arity() != family_arity(f)) fail(ErrorKind::ArityMismatch, "relation arity does not match the family");
    const std::size_t n = R.domain_size();
    const Point N = static_cast<Point>(n);
    AxiomReport rep;
    rep.family = f;
    auto& out = rep.results;
    using AR = AxiomRole;

    if (f == Family::Semilinear) {
        auto le = [&](Point a, Point b) { return R.has({a, b}); };
        auto lt = [&](Point a, Point b) { return a != b && le(a, b); };
        out.push_back(axiom("reflexive", AR::Core, n, 1, [&](const Tuple& t) { return le(t[0], t[0]); }));
        out.push_back(axiom("antisymmetric", AR::Core, n, 2,
                            [&](const Tuple& t) { return !(le(t[0], t[1]) && le(t[1], t[0])) || t[0] == t[1]; }));
        out.push_back(axiom("transitive", AR::Core, n, 3, [&](const Tuple& t) {
            return !(le(t[0], t[1]) && le(t[1], t[2])) || le(t[0], t[2]);
        }));
        out.push_back(axiom("(i) upward linear", AR::Core, n, 3, [&](const Tuple& t) {
            return !(le(t[0], t[1]) && le(t[0], t[2])) || le(t[1], t[2]) || le(t[2], t[1]);
        }));
        out.push_back(axiom("(ii) common upper bound", AR::Core, n, 2, [&](const Tuple& t) {
            for (Point c = 0; c < N; ++c)
                if (le(t[0], c) && le(t[1], c)) return true;
            return false;
        }));
        out.push_back(axiom("dense (between)", AR::Denseness, n, 2, [&](const Tuple& t) {
            if (!lt(t[0], t[1])) return true;
            for (Point c = 0; c < N; ++c)
                if (lt(t[0], c) && lt(c, t[1])) return true;
            return false;
        }));
        out.push_back(axiom("dense (above)", AR::Denseness, n, 1, [&](const Tuple& t) {
            for (Point c = 0; c < N; ++c)
                if (lt(t[0], c)) return true;
            return false;
        }));
    } else if (f == Family::C) {
        auto C = [&](Point a, Point b, Point c) { return R.has({a, b, c}); };
        out.push_back(axiom("C1", AR::Core, n, 3, [&](const Tuple& t) { return !C(t[0], t[1], t[2]) || C(t[0], t[2], t[1]); }));
        out.push_back(axiom("C2", AR::Core, n, 3, [&](const Tuple& t) { return !C(t[0], t[1], t[2]) || !C(t[1], t[0], t[2]); }));
        out.push_back(axiom("C3", AR::Core, n, 4, [&](const Tuple& t) {
            return !C(t[0], t[1], t[2]) || C(t[0], t[2], t[3]) || C(t[3], t[1], t[2]);
        }));
        out.push_back(axiom("C4", AR::Core, n, 2, [&](const Tuple& t) { return t[0] == t[1] || C(t[0], t[1], t[1]); }));
        out.push_back(axiom("C5", AR::Core, n, 2, [&](const Tuple& t) {
            for (Point a = 0; a < N; ++a)
                if (C(a, t[0], t[1])) return true;
            return false;
        }));
        out.push_back(axiom("C6", AR::Core, n, 2, [&](const Tuple& t) {
            if (t[0] == t[1]) return true;
            for (Point d = 0; d < N; ++d)
                if (d != t[1] && C(t[0], t[1], d)) return true;
            return false;
        }));
        out.push_back(axiom("C7", AR::Denseness, n, 3, [&](const Tuple& t) {
            if (!C(t[0], t[1], t[2])) return true;
            for (Point d = 0; d < N; ++d)
                if (C(t[0], t[1], d) && C(d, t[1], t[2])) return true;
            return false;
        }));
    } else if (f == Family::B) {
        auto B = [&](Point a, Point b, Point c) { return R.has({a, b, c}); };
        out.push_back(axiom("B1", AR::Core, n, 3, [&](const Tuple& t) { return !B(t[0], t[1], t[2]) || B(t[0], t[2], t[1]); }));
        out.push_back(axiom("B2", AR::Core, n, 3, [&](const Tuple& t) {
            return (B(t[0], t[1], t[2]) && B(t[1], t[0], t[2])) == (t[0] == t[1]);
        }));
        out.push_back(axiom("B3", AR::Core, n, 4, [&](const Tuple& t) {
            return !B(t[0], t[1], t[2]) || B(t[0], t[1], t[3]) || B(t[0], t[2], t[3]);
        }));
        out.push_back(axiom("B4", AR::Core, n, 4, [&](const Tuple& t) {
            return !(B(t[0], t[2], t[3]) && B(t[1], t[0], t[2])) || B(t[1], t[2], t[3]);
        }));
        out.push_back(axiom("B5", AR::Core, n, 4, [&](const Tuple& t) {
            return !(B(t[0], t[2], t[3]) && B(t[1], t[2], t[3])) || B(t[0], t[1], t[2]) || B(t[1], t[0], t[2]);
        }));
        out.push_back(axiom("B6", AR::Extra, n, 3, [&](const Tuple& t) {
            if (B(t[0], t[1], t[2])) return true;
            for (Point d = 0; d < N; ++d)
                if (d != t[0] && B(d, t[0], t[1]) && B(d, t[0], t[2])) return true;
            return false;
        }));
    } else {
        auto D = [&](Point a, Point b, Point c, Point d) { return R.has({a, b, c, d}); };
        out.push_back(axiom("D1", AR::Core, n, 4, [&](const Tuple& t) {
            return !D(t[0], t[1], t[2], t[3]) ||
                   (D(t[1], t[0], t[2], t[3]) && D(t[0], t[1], t[3], t[2]) && D(t[2], t[3], t[0], t[1]));
        }));
        out.push_back(axiom("D2", AR::Core, n, 4,
                            [&](const Tuple& t) { return !D(t[0], t[1], t[2], t[3]) || !D(t[0], t[2], t[1], t[3]); }));
        out.push_back(axiom("D3", AR::Core, n, 5, [&](const Tuple& t) {
            return !D(t[0], t[1], t[2], t[3]) || D(t[0], t[4], t[2], t[3]) || D(t[0], t[1], t[2], t[4]);
        }));
        out.push_back(axiom("D3'", AR::Extra, n, 5, [&](const Tuple& t) {
            if (t[4] == t[0] || t[4] == t[1] || t[4] == t[2] || t[4] == t[3]) return true;
            return !D(t[0], t[1], t[2], t[3]) || D(t[0], t[4], t[2], t[3]) || D(t[0], t[1], t[2], t[4]);
        }));
        out.push_back(axiom("D4", AR::Core, n, 3, [&](const Tuple& t) {
            if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return true;
            for (Point d = 0; d < N; ++d)
                if (d != t[2] && D(t[0], t[1], t[2], d)) return true;
            return false;
        }));
    }
    return rep;
}

RelationK c_from_equivalence_chain(const std::vector<Partition>& chain) {
    if (chain.empty()) fail(ErrorKind::NotAChain, "empty chain");
    const std::size_t n = chain.front().degree();
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].degree() != n) fail(ErrorKind::DegreeMismatch, "chain members differ in degree");
        if (i > 0 && !chain[i - 1].refines(chain[i])) fail(ErrorKind::NotAChain, "chain member does not refine the next");
    }
    RelationK c(3, n);
    const Point N = static_cast<Point>(n);
    for (Point a = 0; a < N; ++a)
        for (Point b = 0; b < N; ++b)
            for (Point g = 0; g < N; ++g)
                for (const auto& rho : chain)
                    if (!rho.same_block(a, b) && rho.same_block(b, g)) {
                        c.insert({a, b, g});
                        break;
                    }
    return c;
}

FiniteCModel finite_c_model(std::size_t k, std::size_t s, std::size_t cap) {
    if (k < 1 || s < 2) fail(ErrorKind::OutOfRange, "need k >= 1 and s >= 2");
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) {
        n *= s;
        if (n > cap) fail(ErrorKind::CapExceeded, "function domain exceeds cap");
    }
    FiniteCModel m;
    m.levels = k;
    m.alphabet = s;
    for (std::size_t p = 0; p < n; ++p) {
        std::vector<int> f(k);
        std::size_t x = p;
        for (std::size_t pos = 0; pos < k; ++pos, x /= s) f[pos] = static_cast<int>(x % s);
        m.functions.push_back(std::move(f));
    }
    // rho_i: same values at positions i+1..k, i.e. same quotient by s^i
    std::size_t scale = 1;
    for (std::size_t i = 0; i <= k; ++i, scale *= s) {
        std::vector<int> labels(n);
        for (std::size_t p = 0; p < n; ++p) labels[p] = static_cast<int>(p / scale);
        m.chain.push_back(Partition::from_labels(labels));
    }
    m.c = c_from_equivalence_chain(m.chain);
    return m;
}

std::size_t ramification_order(const RelationK& c, Point alpha, Point beta) {
    const Point N = static_cast<Point>(c.domain_size());
    if (alpha == beta) fail(ErrorKind::InvalidArgument, "ramification order needs distinct points");
    auto R = [&](Point x, Point y) { return !c.has({x, y, alpha}) && !c.has({y, x, alpha}); };
    std::vector<Point> reps;
    for (Point g = 0; g < N; ++g) {
        if (g == alpha || !R(beta, g)) continue;
        bool found = false;
        for (Point r : reps)
            if (c.has({alpha, r, g})) found = true;
        if (!found) reps.push_back(g);
    }
    return 1 + reps.size();
}

RelationK FinitePoset::as_relation() const {
    RelationK r(2, size());
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b)
            if (le(a, b)) r.insert({static_cast<Point>(a), static_cast<Point>(b)});
    return r;
}

std::optional<std::size_t> FinitePoset::sup(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> ub;
    for (std::size_t c = 0; c < size(); ++c)
        if (le(a, c) && le(b, c)) ub.push_back(c);
    for (auto u : ub)
        if (std::all_of(ub.begin(), ub.end(), [&](std::size_t v) { return le(u, v); })) return u;
    return std::nullopt;
}

bool FinitePoset::positive_type() const {
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = a + 1; b < size(); ++b)
            if (!sup(a, b)) return false;
    return true;
}

std::string FinitePoset::to_dot() const {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n";
    for (std::size_t a = 0; a < size(); ++a) os << "  n" << a << " [label=\"" << labels[a] << "\"];\n";
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b) {
            if (a == b || !le(a, b)) continue;
            bool cover = true;
            for (std::size_t c = 0; c < size() && cover; ++c)
                if (c != a && c != b && le(a, c) && le(c, b)) cover = false;
            if (cover) os << "  n" << a << " -> n" << b << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::size_t ramification_index(const FinitePoset& p, std::size_t a, std::size_t b) {
    const std::size_t n = p.size();
    std::vector<std::size_t> sigma, below;
    for (std::size_t c = 0; c < n; ++c)
        if (p.le(a, c) && p.le(b, c)) sigma.push_back(c);
    if (sigma.empty()) return 0;
    for (std::size_t c = 0; c < n; ++c)
        if (std::all_of(sigma.begin(), sigma.end(), [&](std::size_t s) { return c != s && p.le(c, s); }))
            below.push_back(c);
    // cones: classes of "some common upper bound inside the lower part"
    std::vector<std::size_t> parent(below.size());
    for (std::size_t i = 0; i < below.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < below.size(); ++i)
        for (std::size_t j = i + 1; j < below.size(); ++j)
            for (auto g : below)
                if (p.le(below[i], g) && p.le(below[j], g)) {
                    parent[find(i)] = find(j);
                    break;
                }
    std::size_t cones = 0;
    for (std::size_t i = 0; i < below.size(); ++i)
        if (find(i) == i) ++cones;
    return cones;
}

SemilinearFromC semilinear_from_c(const RelationK& c) {
    if (c.arity() != 3) fail(ErrorKind::ArityMismatch, "C-relation is ternary");
    auto ax = check_axioms(c, Family::C);
    for (const char* name : {"C1", "C2", "C3", "C4"})
        if (!ax.holds(name)) fail(ErrorKind::AxiomsFailed, std::string("C-relation fails ") + name);
    const Point N = static_cast<Point>(c.domain_size());
    auto C = [&](Point a, Point b, Point g) { return c.has({a, b, g}); };
    std::vector<std::pair<Point, Point>> pairs;
    for (Point a = 0; a < N; ++a)
        for (Point b = a + 1; b < N; ++b) pairs.emplace_back(a, b);
    auto below = [&](const std::pair<Point, Point>& p, const std::pair<Point, Point>& q) {
        return !C(p.first, q.first, q.second) && !C(p.second, q.first, q.second);
    };
    SemilinearFromC out;
    std::vector<std::size_t> node_of(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        std::size_t found = out.node_rep.size();
        for (std::size_t r = 0; r < out.node_rep.size(); ++r)
            if (below(pairs[i], out.node_rep[r]) && below(out.node_rep[r], pairs[i])) found = r;
        if (found == out.node_rep.size()) out.node_rep.push_back(pairs[i]);
        node_of[i] = found;
    }
    const std::size_t m = out.node_rep.size();
    out.lambda.leq.assign(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a) {
        out.lambda.labels.push_back("{" + std::to_string(out.node_rep[a].first + 1) + "," +
                                    std::to_string(out.node_rep[a].second + 1) + "}");
        for (std::size_t b = 0; b < m; ++b) out.lambda.leq[a][b] = below(out.node_rep[a], out.node_rep[b]);
    }
    out.point_chain.assign(static_cast<std::size_t>(N), {});
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out.point_chain[static_cast<std::size_t>(pairs[i].first)].push_back(node_of[i]);
        out.point_chain[static_cast<std::size_t>(pairs[i].second)].push_back(node_of[i]);
    }
    for (auto& ch : out.point_chain) {
        std::sort(ch.begin(), ch.end());
        ch.erase(std::unique(ch.begin(), ch.end()), ch.end());
    }
    out.node_map_injective = std::set<std::vector<std::size_t>>(out.point_chain.begin(), out.point_chain.end()).size() ==
                             out.point_chain.size();
    out.semilinear = check_axioms(out.lambda.as_relation(), Family::Semilinear);
    out.positive_type = out.lambda.positive_type();

    for (Point al = 0; al < N; ++al) {
        auto R = [&](Point x, Point y) { return !C(x, y, al) && !C(y, x, al); };
        auto S = [&](Point x, Point y) { return C(al, x, y); };
        for (Point x = 0; x < N; ++x) {
            if (x == al) continue;
            if (!R(x, x) || !S(x, x)) out.r_s_equivalences = false;
            for (Point y = 0; y < N; ++y) {
                if (y == al) continue;
                if (R(x, y) != R(y, x) || S(x, y) != S(y, x)) out.r_s_equivalences = false;
                if (S(x, y) && !R(x, y)) out.s_refines_r = false;
                for (Point z = 0; z < N; ++z) {
                    if (z == al) continue;
                    if (R(x, y) && R(y, z) && !R(x, z)) out.r_s_equivalences = false;
                    if (S(x, y) && S(y, z) && !S(x, z)) out.r_s_equivalences = false;
                }
            }
        }
    }
    return out;
}

bool word_le(const LambdaWord& a, const LambdaWord& b) {
    const std::size_t k = a.q.size(), l = b.q.size();
    if (l > k) return false;
    for (std::size_t i = 0; i + 1 < l; ++i)
        if (a.q[i] != b.q[i] || a.u[i] != b.u[i]) return false;
    return a.q[l - 1] <= b.q[l - 1];
}

WordModel lambda_word_model(const std::vector<Rational>& rationals, std::size_t s, std::size_t cap) {
    if (s < 2) fail(ErrorKind::OutOfRange, "ramification s must be at least 2");
    if (s - 1 > 26) fail(ErrorKind::OutOfRange, "alphabet limited to 26 letters");
    if (rationals.empty()) fail(ErrorKind::LengthMismatch, "need at least one rational");
    for (std::size_t i = 1; i < rationals.size(); ++i)
        if (!(rationals[i - 1] < rationals[i])) fail(ErrorKind::NotAscending, "rationals must be strictly ascending");
    // (s^m - 1)/(s - 1) words in total
    std::size_t total = 0, layer = 1;
    for (std::size_t i = 0; i < rationals.size(); ++i) {
        total += layer;
        if (total > cap || layer > cap) fail(ErrorKind::CapExceeded, "word model exceeds cap");
        layer *= s;
    }
    WordModel m;
    std::function<void(LambdaWord&, std::size_t)> extend = [&](LambdaWord& w, std::size_t last) {
        m.words.push_back(w);
        if (m.words.size() > cap) fail(ErrorKind::CapExceeded, "word model exceeds cap");
        for (std::size_t j = last; j-- > 0;)
            for (std::size_t u = 0; u + 1 < s; ++u) {
                w.u.push_back(u);
                w.q.push_back(rationals[j]);
                extend(w, j);
                w.q.pop_back();
                w.u.pop_back();
            }
    };
    for (std::size_t i = rationals.size(); i-- > 0;) {
        LambdaWord w;
        w.q.push_back(rationals[i]);
        extend(w, i);
    }
    const std::size_t n = m.words.size();
    m.poset.leq.assign(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        const LambdaWord& w = m.words[a];
        std::string label;
        for (std::size_t i = 0; i < w.q.size(); ++i) {
            if (i) label += s == 2 ? std::string("u") : std::string(1, static_cast<char>('a' + w.u[i - 1]));
            label += to_string(w.q[i]);
        }
        m.poset.labels.push_back(label);
        for (std::size_t b = 0; b < n; ++b) m.poset.leq[a][b] = word_le(w, m.words[b]);
    }
    for (std::size_t a = 0; a < n && m.ramification_ok; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (m.poset.incomparable(a, b) && ramification_index(m.poset, a, b) != s) {
                m.ramification_ok = false;
                break;
            }
    return m;
}

DerivedRelation betweenness_from_semilinear(const FinitePoset& p) {
    const std::size_t n = p.size();
    RelationK b(3, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                bool between = (p.le(x, a) && p.le(a, y)) || (p.le(y, a) && p.le(a, x));
                auto s = p.sup(x, y);
                bool at_sup = s && *s == a;
                bool side = (p.le(x, a) && p.incomparable(a, y)) || (p.le(y, a) && p.incomparable(a, x));
                if (between || at_sup || side)
                    b.insert({static_cast<Point>(a), static_cast<Point>(x), static_cast<Point>(y)});
            }
    return {b, check_axioms(b, Family::B)};
}

DerivedRelation c_from_d_at_point(const RelationK& d, Point alpha) {
    if (d.arity() != 4) fail(ErrorKind::ArityMismatch, "D-relation is quaternary");
    const std::size_t n = d.domain_size();
    if (alpha < 0 || static_cast<std::size_t>(alpha) >= n) fail(ErrorKind::PointOutOfRange, "base point outside domain");
    std::vector<Point> rest;
    for (Point p = 0; p < static_cast<Point>(n); ++p)
        if (p != alpha) rest.push_back(p);
    const Point M = static_cast<Point>(rest.size());
    RelationK c(3, rest.size());
    for (Point b = 0; b < M; ++b)
        for (Point x = 0; x < M; ++x)
            for (Point y = 0; y < M; ++y)
                if (d.has({alpha, rest[static_cast<std::size_t>(b)], rest[static_cast<std::size_t>(x)],
                           rest[static_cast<std::size_t>(y)]}))
                    c.insert({b, x, y});
    return {c, check_axioms(c, Family::C)};
}

ChainModel c_from_maximal_chains(const FinitePoset& p, std::size_t cap) {
    const std::size_t n = p.size();
    auto covers = [&](std::size_t a, std::size_t b) {
        if (a == b || !p.le(a, b)) return false;
        for (std::size_t c = 0; c < n; ++c)
            if (c != a && c != b && p.le(a, c) && p.le(c, b)) return false;
        return true;
    };
    ChainModel m;
    std::vector<std::size_t> path;
    std::function<void(std::size_t)> climb = [&](std::size_t a) {
        path.push_back(a);
        bool top = true;
        for (std::size_t b = 0; b < n; ++b)
            if (covers(a, b)) {
                top = false;
                climb(b);
            }
        if (top) {
            auto ch = path;
            std::sort(ch.begin(), ch.end());
            m.chains.push_back(std::move(ch));
            if (m.chains.size() > cap) fail(ErrorKind::CapExceeded, "too many maximal chains");
        }
        path.pop_back();
    };
    for (std::size_t a = 0; a < n; ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < n; ++b)
            if (b != a && p.le(b, a)) minimal = false;
        if (minimal) climb(a);
    }
    std::sort(m.chains.begin(), m.chains.end());
    m.chains.erase(std::unique(m.chains.begin(), m.chains.end()), m.chains.end());
    const std::size_t k = m.chains.size();
    auto meet = [&](std::size_t a, std::size_t b) {
        std::vector<std::size_t> out;
        std::set_intersection(m.chains[a].begin(), m.chains[a].end(), m.chains[b].begin(), m.chains[b].end(),
                              std::back_inserter(out));
        return out;
    };
    RelationK c(3, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            for (std::size_t g = 0; g < k; ++g) {
                auto ab = meet(a, b);
                if (ab == meet(a, g) && ab != meet(b, g))
                    c.insert({static_cast<Point>(a), static_cast<Point>(b), static_cast<Point>(g)});
            }
    m.derived = {c, check_axioms(c, Family::C)};
    return m;
}

std::vector<PointSet> translates(const Group& g, const PointSet& sigma0) {
    std::set<PointSet> seen{sigma0};
    std::deque<PointSet> todo{sigma0};
    while (!todo.empty()) {
        PointSet s = todo.front();
        todo.pop_front();
        for (const auto& x : g.generators()) {
            PointSet t = image_of(s, x);
            if (seen.insert(t).second) todo.push_back(t);
        }
    }
    return {seen.begin(), seen.end()};
}

DerivedRelation preorder_from_family(const Group& g, const PointSet& sigma0) {
    auto fam = translates(g, sigma0);
    const Point N = static_cast<Point>(g.degree());
    RelationK r(2, g.degree());
    for (Point a = 0; a < N; ++a)
        for (Point b = 0; b < N; ++b)
            if (std::all_of(fam.begin(), fam.end(), [&](const PointSet& s) { return !contains(s, b) || contains(s, a); }))
                r.insert({a, b});
    return {r, check_axioms(r, Family::Semilinear)};
}

DerivedRelation c_from_family(const Group& g, const PointSet& sigma0) {
    auto fam = translates(g, sigma0);
    RelationK r(3, g.degree());
    const Point N = static_cast<Point>(g.degree());
    for (const auto& s : fam)
        for (Point a = 0; a < N; ++a) {
            if (contains(s, a)) continue;
            for (Point b : s)
                for (Point c : s) r.insert({a, b, c});
        }
    return {r, check_axioms(r, Family::C)};
}

DerivedRelation b_from_family(const Group& g, const PointSet& sigma0) {
    auto fam = translates(g, sigma0);
    RelationK r(3, g.degree());
    const Point N = static_cast<Point>(g.degree());
    for (Point a = 0; a < N; ++a)
        for (Point b = 0; b < N; ++b)
            for (Point c = 0; c < N; ++c)
                if (std::all_of(fam.begin(), fam.end(), [&](const PointSet& s) {
                        return !(contains(s, b) && contains(s, c)) || contains(s, a);
                    }))
                    r.insert({a, b, c});
    return {r, check_axioms(r, Family::B)};
}

DerivedRelation d_from_family(const Group& g, const PointSet& sigma0) {
    auto fam = translates(g, sigma0);
    RelationK r(4, g.degree());
    for (const auto& s1 : fam)
        for (const auto& s2 : fam) {
            PointSet both;
            std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(both));
            if (!both.empty()) continue;
            for (Point a : s1)
                for (Point b : s1)
                    for (Point c : s2)
                        for (Point d : s2) r.insert({a, b, c, d});
        }
    return {r, check_axioms(r, Family::D)};
}

SubsetClass classify_subset(const Group& g, const PointSet& sigma) {
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] < 0 || static_cast<std::size_t>(sigma[i]) >= g.degree() || (i && sigma[i - 1] >= sigma[i]))
            fail(ErrorKind::InvalidArgument, "subset must be sorted, distinct, inside the domain");
    auto fam = translates(g, sigma);
    const std::size_t n = g.degree();
    const Point N = static_cast<Point>(n);
    SubsetClass c;
    c.translate_count = fam.size();
    c.degenerate = sigma.empty() || sigma.size() == n;
    auto subset = [](const PointSet& a, const PointSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
    auto meets = [](const PointSet& a, const PointSet& b) {
        PointSet x;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(x));
        return !x.empty();
    };
    c.stable = c.semistable = true;
    bool atypical = true;
    for (const auto& t : fam) {
        if (!subset(sigma, t) && !subset(t, sigma)) c.stable = false;
        if (!meets(t, sigma)) c.semistable = false;
        if (meets(t, sigma) && !subset(t, sigma) && !subset(sigma, t)) atypical = false;
    }
    c.highly_atypical = atypical && sigma.size() > 1 && sigma.size() != n;
    c.separates_pairs = c.separates_ordered_pairs = true;
    for (Point a = 0; a < N; ++a)
        for (Point b = 0; b < N; ++b) {
            if (a == b) continue;
            bool one = false, ordered = false;
            for (const auto& t : fam) {
                bool ia = contains(t, a), ib = contains(t, b);
                if (ia != ib) one = true;
                if (ia && !ib) ordered = true;
            }
            if (!one) c.separates_pairs = false;
            if (!ordered) c.separates_ordered_pairs = false;
        }
    c.idealistic = c.separates_pairs && !c.separates_ordered_pairs;
    return c;
}

bool translates_cover_pairs(const Group& g, const PointSet& sigma) {
    auto fam = translates(g, sigma);
    const Point N = static_cast<Point>(g.degree());
    for (Point a = 0; a < N; ++a)
        for (Point b = a; b < N; ++b)
            if (std::none_of(fam.begin(), fam.end(), [&](const PointSet& s) { return contains(s, a) && contains(s, b); }))
                return false;
    return true;
}

MutationReport mutation_sensitivity(const RelationK& base, Family f, std::size_t count, std::uint64_t seed) {
    auto ref = check_axioms(base, f);
    std::vector<std::string> watched;
    for (const auto& r : ref.results)
        if (r.holds && r.role != AxiomRole::Denseness) watched.push_back(r.name);
    std::mt19937_64 rng(seed);
    const std::size_t n = base.domain_size(), k = base.arity();
    auto present = base.tuples();
    MutationReport rep;
    for (std::size_t i = 0; i < count; ++i) {
        RelationK m = base;
        Tuple t;
        if (i % 2 == 0 && !present.empty()) {
            t = present[std::uniform_int_distribution<std::size_t>(0, present.size() - 1)(rng)];
            m.erase(t);
        } else {
            bool placed = false;
            for (int attempt = 0; attempt < 10000 && !placed; ++attempt) {
                t.assign(k, 0);
                for (auto& p : t) p = static_cast<Point>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
                placed = !m.has(t);
            }
            if (!placed) continue;
            m.insert(t);
        }
        ++rep.mutations;
        auto got = check_axioms(m, f);
        bool caught = std::any_of(watched.begin(), watched.end(), [&](const std::string& w) { return !got.holds(w); });
        if (caught)
            ++rep.detected;
        else
            rep.undetected.push_back(t);
    }
    return rep;
}

}  // namespace permlab
