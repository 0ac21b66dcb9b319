#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permlab/perm.hpp"
#include "permlab/rational.hpp"

namespace permlab {

// Element budget for every enumeration; 200000 unless overridden.
std::size_t default_cap();
void set_default_cap(std::size_t cap);

// Deterministic BFS closure: identity first, then products x*g in queue
// order with generators in their given order.
struct Elements {
    std::vector<Perm> list;
    std::unordered_map<Perm, std::uint32_t, PermHash> index;

    std::size_t size() const { return list.size(); }
    bool contains(const Perm& p) const { return index.count(p) != 0; }
    std::optional<std::size_t> find(const Perm& p) const;
};

Elements closure(std::size_t degree, const std::vector<Perm>& gens, std::size_t cap);

class Group {
public:
    Group() = default;
    Group(std::size_t degree, std::vector<Perm> gens);
    static Group from_cycles(const std::vector<std::string>& cycles, std::size_t degree);
    static Group trivial(std::size_t degree) { return Group(degree, {}); }

    std::size_t degree() const { return n_; }
    const std::vector<Perm>& generators() const { return gens_; }

    // Cached; throws CapExceeded when the closure outgrows cap.
    const Elements& elements(std::size_t cap = default_cap()) const;
    std::size_t order(std::size_t cap = default_cap()) const { return elements(cap).size(); }
    bool contains(const Perm& p, std::size_t cap = default_cap()) const;

private:
    struct Cache;
    std::size_t n_ = 0;
    std::vector<Perm> gens_;
    std::shared_ptr<Cache> cache_;
};

// A generating set chosen greedily (in list order) from a set of elements
// that is known to form a subgroup.
Group group_from_elements(std::size_t degree, const std::vector<Perm>& elems);

using Word = std::vector<int>;  // generator indices, applied left to right

struct OrbitResult {
    PointSet orbit;                  // sorted
    std::vector<Point> bfs_order;    // discovery order, root first
    std::map<Point, Word> words;     // BFS-minimal words
    std::map<Point, Perm> transversal;
};

OrbitResult orbit(const Group& g, Point alpha);
std::vector<PointSet> orbits(const Group& g);
bool is_transitive(const Group& g);
Perm evaluate_word(const Group& g, const Word& w);

const Elements& enumerate_elements(const Group& g, std::size_t cap = default_cap());

enum class StabKind { Point, Pointwise, Setwise };
Group stabilizer(const Group& g, StabKind kind, const PointSet& arg,
                 std::size_t cap = default_cap());
// Schreier generators, no enumeration.
Group point_stabilizer(const Group& g, Point alpha);
std::vector<Perm> filter_pointwise(const std::vector<Perm>& elems, const PointSet& s);

enum class InducedKind { Tuples, Subsets };
struct InducedAction {
    Group group;
    std::vector<std::vector<Point>> items;  // tuple/subset for each derived point
    std::map<std::vector<Point>, Point> index;
};
InducedAction induced_action(const Group& g, InducedKind kind, std::size_t k,
                             std::size_t cap = default_cap());
// Number of orbits on k-tuples or k-subsets, via union-find over generators.
std::size_t count_orbits(const Group& g, InducedKind kind, std::size_t k,
                         std::size_t cap = default_cap());

// Largest k <= kmax such that g is j-transitive (resp. j-homogeneous) for
// every j <= k; 0 when g is intransitive.
std::size_t transitivity_degree(const Group& g, std::size_t kmax, std::size_t cap = default_cap());
std::size_t homogeneity_degree(const Group& g, std::size_t kmax, std::size_t cap = default_cap());

struct SeparationResult {
    std::optional<Perm> witness;
    std::optional<std::size_t> bfs_index;
    bool guaranteed = false;  // every orbit larger than |Gamma||Delta|
};
SeparationResult separation_search(const Group& g, const PointSet& gamma,
                                   const PointSet& delta, std::size_t cap = default_cap());

struct CosetPart {
    std::vector<Perm> subgroup_gens;
    Perm rep;
};
struct CosetCoverInstance {
    Group group;
    std::vector<CosetPart> parts;
};
struct CosetCoverReport {
    bool covers = false;
    bool irredundant = false;
    std::vector<std::size_t> indices;
    Rational index_sum;
    bool bound_holds = true;  // index_sum >= 1 whenever covers and irredundant
};
CosetCoverReport coset_cover_audit(const CosetCoverInstance& inst, std::size_t cap = default_cap());

// All permutations commuting with g, built from the normalizer of G_alpha.
Group gspace_automorphisms(const Group& g, Point alpha, std::size_t cap = default_cap());

// BFS-least x in G with x^-1 H x = K.
std::optional<Perm> coset_spaces_isomorphic(const Group& g, const Group& h, const Group& k,
                                            std::size_t cap = default_cap());

bool is_subgroup_of(const Group& h, const Group& g, std::size_t cap = default_cap());
// Smallest normal subgroup of g containing the given elements.
Group normal_closure(const Group& g, const std::vector<Perm>& elems, std::size_t cap = default_cap());
bool is_normal(const Group& n, const Group& g, std::size_t cap = default_cap());

// Permutation group induced on a G-invariant family of point sets.
Group action_on_sets(const Group& g, const std::vector<PointSet>& sets);

}  // namespace permlab
