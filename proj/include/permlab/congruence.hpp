#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permlab/group.hpp"

namespace permlab {

// Blocks are sorted, each block sorted, ordered by least point.
struct Partition {
    std::vector<int> block_of;
    std::vector<PointSet> blocks;

    static Partition from_blocks(std::size_t n, std::vector<PointSet> blocks);
    static Partition from_labels(const std::vector<int>& labels);
    static Partition discrete(std::size_t n);
    static Partition universal(std::size_t n);

    std::size_t degree() const { return block_of.size(); }
    bool is_discrete() const { return blocks.size() == block_of.size(); }
    bool is_universal() const { return blocks.size() <= 1; }
    bool same_block(Point a, Point b) const {
        return block_of[static_cast<std::size_t>(a)] == block_of[static_cast<std::size_t>(b)];
    }
    // every block of *this lies inside a block of other
    bool refines(const Partition& other) const;
    std::size_t max_block_size() const;
    friend bool operator==(const Partition& a, const Partition& b) { return a.blocks == b.blocks; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.blocks < b.blocks; }
};

bool is_congruence(const Group& g, const Partition& p);

// Finest G-congruence with alpha ~ beta.
Partition minimal_congruence_identifying(const Group& g, Point alpha, Point beta);
// Finest G-congruence coarser than both.
Partition join(const Group& g, const Partition& a, const Partition& b);
std::vector<Partition> all_congruences(const Group& g);

struct PrimitivityReport {
    bool route_blocks = false;    // no proper minimal congruence
    bool route_orbitals = false;  // all non-diagonal orbital graphs connected
    bool agree = false;
    bool primitive = false;
    std::optional<Partition> witness;  // proper nontrivial congruence, if any
};
PrimitivityReport is_primitive(const Group& g);

struct Orbital {
    std::pair<Point, Point> representative;
    std::vector<std::pair<Point, Point>> pairs;  // sorted
    bool diagonal() const { return representative.first == representative.second; }
};
Orbital orbital_of(const Group& g, Point a, Point b);
std::vector<Orbital> orbitals(const Group& g);

struct SuborbitReport {
    Point alpha = 0;
    std::vector<PointSet> suborbits;  // {alpha} first, then by least point
    std::vector<std::size_t> paired;  // index of the paired suborbit
};
SuborbitReport suborbits(const Group& g, Point alpha);

struct SubdegreeReport {
    std::vector<std::size_t> subdegrees;  // sorted
    bool paired_lengths_equal = true;
    bool index_identity = true;  // |Gamma| = |G_a : G_ab|
};
SubdegreeReport subdegree_check(const Group& g, std::size_t cap = default_cap());

struct OrbitalGraphReport {
    std::vector<std::pair<Point, Point>> edges;
    bool weakly_connected = false;
    std::size_t valency = 0;  // v of the undirected graph on Delta u Delta*
    std::vector<std::size_t> spheres;  // |Sigma^d(alpha)| for d = 0, 1, ...
    // |Sigma^d| <= v (v-1)^(d-1) for d >= 1, which gives v (v-1)^d whenever v >= 2
    bool sphere_bound_holds = true;
    // the weaker v (v-1)^d form read literally; fails for v = 1 (a perfect matching)
    bool stated_bound_holds = true;
    std::string dot;
};
OrbitalGraphReport orbital_graph(const Group& g, const Orbital& orb);
std::string orbital_dot(std::size_t n, const std::vector<std::pair<Point, Point>>& edges,
                        const std::string& name = "orbital");

// All alpha-semiblocks: Gamma containing alpha with alpha g in Gamma => Gamma g within Gamma.
// Candidates are unions of G_alpha-orbits containing alpha; a semiblock is
// G_alpha-invariant because G_alpha fixes alpha.
std::vector<PointSet> semiblocks(const Group& g, Point alpha, std::size_t cap = default_cap());
bool is_strongly_primitive(const Group& g, std::size_t cap = default_cap());

struct CorrespondenceReport {
    std::vector<Partition> congruences;
    std::vector<std::vector<std::size_t>> overgroups;  // element indices, sorted
    bool bijective = false;
    bool order_preserving = false;
};
CorrespondenceReport congruence_subgroup_correspondence(const Group& g, Point alpha,
                                                        std::size_t cap = default_cap());

struct BLDecomposition {
    std::size_t m = 0;  // max subdegree
    std::size_t m0 = 0;
    PointSet phi;        // first minimizer in size-then-lex order
    PointSet phi_alpha;  // first minimizer containing alpha
    std::size_t witness_count = 0;
    std::vector<Perm> n_elements;
    bool n_is_subgroup = false;
    bool n_normal = false;
    Partition rho;
    std::size_t quotient_stab_order = 0;
    bool classes_within_m = false;
    bool stab_bound_holds = false;  // quotient_stab_order <= m^(|phi_alpha|-1)
};
BLDecomposition bergman_lenstra(const Group& g, Point alpha = 0, std::size_t cap = default_cap());

struct NormalSubgroupInfo {
    std::size_t order = 0;
    bool transitive = false;
    bool abelian = false;
    bool regular = false;
    std::vector<Perm> generators;
};
struct NormalAuditReport {
    std::vector<NormalSubgroupInfo> normals;  // sorted by order
    bool primitive = false;
    bool transitivity_holds = true;  // primitive => nontrivial normals transitive
    bool abelian_regular_holds = true;
    bool subdegrees_at_most_two = false;
    bool dichotomy_holds = true;  // |G_a| <= 2 or a congruence of class size <= 2 with regular quotient
};
NormalAuditReport normal_subgroup_audit(const Group& g, std::size_t cap = default_cap());

// Conjugacy classes as element index lists, in BFS order of first member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const Group& g, std::size_t cap = default_cap());

// Union of the orbitals of all (finite) suborbits, checked to be an equivalence relation.
bool finite_suborbit_relation_is_equivalence(const Group& g);

}  // namespace permlab
