#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

using Point = int;
using PointSet = std::vector<Point>;  // sorted, duplicate free

// A bijection of {0..n-1}. Acts on the right: (w f) g = w (f g).
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t n);  // identity
    explicit Perm(std::vector<Point> images);  // validated

    static Perm identity(std::size_t n) { return Perm(n); }

    std::size_t degree() const { return img_.size(); }
    Point operator()(Point p) const { return img_[static_cast<std::size_t>(p)]; }
    Point image(Point p) const { return img_[static_cast<std::size_t>(p)]; }
    const std::vector<Point>& images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

private:
    struct Unchecked {};
    Perm(std::vector<Point> images, Unchecked) : img_(std::move(images)) {}
    friend Perm compose(const Perm&, const Perm&);
    friend Perm conjugate(const Perm&, const Perm&);
    std::vector<Point> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept;
};

// compose(f, g) sends w to (w f) g.
Perm compose(const Perm& f, const Perm& g);
inline Perm operator*(const Perm& f, const Perm& g) { return compose(f, g); }

// h^-1 f h
Perm conjugate(const Perm& f, const Perm& h);
Perm power(const Perm& f, long long e);

// Cycle notation, 1-based. "()" or "" is the identity.
Perm parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Perm& f);

using Cycles = std::vector<std::vector<Point>>;
// Canonical: each cycle starts at its least point, cycles sorted by least point.
Cycles cycle_decomposition(const Perm& f);
Perm from_cycles(const Cycles& cycles, std::size_t degree);

struct SupportInfo {
    PointSet support;
    PointSet fixed;
    std::size_t deg = 0;
};
SupportInfo support_fix_degree(const Perm& f);
PointSet support(const Perm& f);

using CycleType = std::map<std::size_t, std::size_t>;  // length -> multiplicity
CycleType cycle_type(const Perm& f);
std::string format_cycle_type(const CycleType& t);

struct ConjugacyResult {
    bool conjugate = false;
    std::optional<Perm> witness;  // h with h^-1 f h = g
};
ConjugacyResult is_conjugate(const Perm& f, const Perm& g,
                             std::size_t witness_degree_cap = 1u << 16);

std::pair<Perm, Perm> involution_factorization(const Perm& f);

// Image of a point set, sorted.
PointSet image_of(const PointSet& s, const Perm& g);

}  // namespace permlab
