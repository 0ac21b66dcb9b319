#include "permlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace permlab {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::RepeatedPoint: return "RepeatedPoint";
        case ErrorKind::PointOutOfRange: return "PointOutOfRange";
        case ErrorKind::MalformedSyntax: return "MalformedSyntax";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotTransitive: return "NotTransitive";
        case ErrorKind::NotSubgroup: return "NotSubgroup";
        case ErrorKind::DiagonalOrbital: return "DiagonalOrbital";
        case ErrorKind::NotACongruence: return "NotACongruence";
        case ErrorKind::NotAMorphism: return "NotAMorphism";
        case ErrorKind::NotAscending: return "NotAscending";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotLinearOrder: return "NotLinearOrder";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::NotAChain: return "NotAChain";
        case ErrorKind::AxiomsFailed: return "AxiomsFailed";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Perm::Perm(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (Point p : img_) {
        if (p < 0 || static_cast<std::size_t>(p) >= img_.size())
            fail(ErrorKind::PointOutOfRange, "image out of range");
        if (seen[static_cast<std::size_t>(p)]++)
            fail(ErrorKind::RepeatedPoint, "images do not form a bijection");
    }
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<Point>(i)) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<Point> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        inv[static_cast<std::size_t>(img_[i])] = static_cast<Point>(i);
    return Perm(std::move(inv), Unchecked{});
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
    // FNV-1a over the image array
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
        h ^= static_cast<std::size_t>(x);
        h *= 1099511628211ull;
    }
    return h;
}

Perm compose(const Perm& f, const Perm& g) {
    if (f.degree() != g.degree())
        fail(ErrorKind::DegreeMismatch, "compose: degrees differ");
    std::vector<Point> out(f.degree());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = g.img_[static_cast<std::size_t>(f.img_[i])];
    return Perm(std::move(out), Perm::Unchecked{});
}

Perm conjugate(const Perm& f, const Perm& h) {
    if (f.degree() != h.degree())
        fail(ErrorKind::DegreeMismatch, "conjugate: degrees differ");
    // x h^-1 f h: the image of (y h) is (y f) h
    std::vector<Point> out(f.degree());
    for (std::size_t y = 0; y < out.size(); ++y)
        out[static_cast<std::size_t>(h.img_[y])] =
            h.img_[static_cast<std::size_t>(f.img_[y])];
    return Perm(std::move(out), Perm::Unchecked{});
}

Perm power(const Perm& f, long long e) {
    Perm base = e < 0 ? f.inverse() : f;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Perm acc(f.degree());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(degree, 0);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') fail(ErrorKind::MalformedSyntax, "expected '(' in cycle notation");
        ++i;
        std::vector<Point> cyc;
        for (;;) {
            skip_ws();
            if (i >= text.size()) fail(ErrorKind::MalformedSyntax, "unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                fail(ErrorKind::MalformedSyntax, "unexpected character in cycle notation");
            long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1'000'000'000) fail(ErrorKind::PointOutOfRange, "point too large");
                ++i;
            }
            if (v < 1 || static_cast<std::size_t>(v) > degree)
                fail(ErrorKind::PointOutOfRange,
                     "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            Point p = static_cast<Point>(v - 1);
            if (used[static_cast<std::size_t>(p)])
                fail(ErrorKind::RepeatedPoint, "point " + std::to_string(v) + " repeated");
            used[static_cast<std::size_t>(p)] = 1;
            cyc.push_back(p);
            if (i < text.size() && text[i] == ',') ++i;
        }
        for (std::size_t j = 0; j < cyc.size(); ++j)
            img[static_cast<std::size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
        skip_ws();
    }
    return Perm(std::move(img));
}

Cycles cycle_decomposition(const Perm& f) {
    Cycles out;
    std::vector<char> seen(f.degree(), 0);
    for (std::size_t s = 0; s < f.degree(); ++s) {
        if (seen[s] || f(static_cast<Point>(s)) == static_cast<Point>(s)) continue;
        std::vector<Point> c;
        Point p = static_cast<Point>(s);
        while (!seen[static_cast<std::size_t>(p)]) {
            seen[static_cast<std::size_t>(p)] = 1;
            c.push_back(p);
            p = f(p);
        }
        out.push_back(std::move(c));  // starts at least point since s ascends
    }
    return out;
}

Perm from_cycles(const Cycles& cycles, std::size_t degree) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
        for (Point p : c) {
            if (p < 0 || static_cast<std::size_t>(p) >= degree)
                fail(ErrorKind::PointOutOfRange, "cycle point out of range");
            if (used[static_cast<std::size_t>(p)]++)
                fail(ErrorKind::RepeatedPoint, "cycles not disjoint");
        }
        for (std::size_t j = 0; j < c.size(); ++j)
            img[static_cast<std::size_t>(c[j])] = c[(j + 1) % c.size()];
    }
    return Perm(std::move(img));
}

std::string format_cycles(const Perm& f) {
    auto cs = cycle_decomposition(f);
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j) os << ' ';
            os << c[j] + 1;
        }
        os << ')';
    }
    return os.str();
}

SupportInfo support_fix_degree(const Perm& f) {
    SupportInfo r;
    for (std::size_t i = 0; i < f.degree(); ++i) {
        if (f(static_cast<Point>(i)) != static_cast<Point>(i))
            r.support.push_back(static_cast<Point>(i));
        else
            r.fixed.push_back(static_cast<Point>(i));
    }
    r.deg = r.support.size();
    return r;
}

PointSet support(const Perm& f) { return support_fix_degree(f).support; }

CycleType cycle_type(const Perm& f) {
    CycleType t;
    std::size_t moved = 0;
    for (const auto& c : cycle_decomposition(f)) {
        ++t[c.size()];
        moved += c.size();
    }
    if (f.degree() > moved) t[1] = f.degree() - moved;
    return t;
}

std::string format_cycle_type(const CycleType& t) {
    std::ostringstream os;
    bool first = true;
    for (auto [len, mult] : t) {
        if (!first) os << ' ';
        first = false;
        os << len << '^' << mult;
    }
    return os.str();
}

namespace {

// Cycles including fixed points, ordered by length then by least point.
Cycles cycles_by_length(const Perm& f) {
    Cycles cs = cycle_decomposition(f);
    for (std::size_t i = 0; i < f.degree(); ++i)
        if (f(static_cast<Point>(i)) == static_cast<Point>(i))
            cs.push_back({static_cast<Point>(i)});
    std::stable_sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return cs;
}

}  // namespace

ConjugacyResult is_conjugate(const Perm& f, const Perm& g, std::size_t witness_degree_cap) {
    if (f.degree() != g.degree())
        fail(ErrorKind::DegreeMismatch, "is_conjugate: degrees differ");
    ConjugacyResult r;
    r.conjugate = cycle_type(f) == cycle_type(g);
    if (!r.conjugate || f.degree() > witness_degree_cap) return r;
    auto cf = cycles_by_length(f);
    auto cg = cycles_by_length(g);
    std::vector<Point> img(f.degree());
    for (std::size_t c = 0; c < cf.size(); ++c)
        for (std::size_t j = 0; j < cf[c].size(); ++j)
            img[static_cast<std::size_t>(cf[c][j])] = cg[c][j];
    r.witness = Perm(std::move(img));
    return r;
}

std::pair<Perm, Perm> involution_factorization(const Perm& f) {
    std::vector<Point> t1(f.degree()), t2(f.degree());
    std::iota(t1.begin(), t1.end(), 0);
    std::iota(t2.begin(), t2.end(), 0);
    for (const auto& c : cycle_decomposition(f)) {
        const long long m = static_cast<long long>(c.size());
        for (long long i = 0; i < m; ++i) {
            auto at = [&](long long k) { return c[static_cast<std::size_t>(((k % m) + m) % m)]; };
            t1[static_cast<std::size_t>(at(i))] = at(-i);
            t2[static_cast<std::size_t>(at(i))] = at(-i + 1);
        }
    }
    return {Perm(std::move(t1)), Perm(std::move(t2))};
}

PointSet image_of(const PointSet& s, const Perm& g) {
    PointSet out;
    out.reserve(s.size());
    for (Point p : s) out.push_back(g(p));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace permlab
