#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permlab/congruence.hpp"
#include "permlab/rational.hpp"
#include "permlab/relation.hpp"

namespace permlab {

enum class Family { Semilinear, C, B, D };
const char* family_name(Family f);
std::size_t family_arity(Family f);

// Core axioms decide membership of the family. Denseness axioms need an infinite domain and
// are reported on their own line. Extra lines are optional strengthenings or alternative readings.
enum class AxiomRole { Core, Denseness, Extra };

struct AxiomResult {
    std::string name;
    AxiomRole role = AxiomRole::Core;
    bool holds = true;
    std::optional<Tuple> witness;  // least failing assignment of the quantified variables
};

struct AxiomReport {
    Family family = Family::C;
    std::vector<AxiomResult> results;
    const AxiomResult& get(const std::string& name) const;
    bool holds(const std::string& name) const { return get(name).holds; }
    bool core_holds() const;
    std::vector<std::string> passed() const;
    std::vector<std::string> failed() const;
};

// Semilinear: R is read as a reflexive order <=, axioms partial order + (i) + (ii) + density.
// C: C1-C6, C7 density. B: B1-B5, B6 extra. D: D1-D4 literal, plus D3' with epsilon ranging
// over points other than alpha, beta, gamma, delta.
AxiomReport check_axioms(const RelationK& r, Family f);

// C(a;b,c) iff for some i, a is not rho_i-related to b and b is rho_i-related to c.
RelationK c_from_equivalence_chain(const std::vector<Partition>& chain);

struct FiniteCModel {
    std::size_t levels = 0, alphabet = 0;
    std::vector<std::vector<int>> functions;  // point p -> values at positions 1..k
    std::vector<Partition> chain;             // rho_0 (equality) .. rho_k (universal)
    RelationK c;
};
// Functions {1..k} -> alphabet; rho_i is agreement on the positions above i.
FiniteCModel finite_c_model(std::size_t k, std::size_t s, std::size_t cap = 4096);

// 1 + number of S_alpha classes inside R_alpha(beta).
std::size_t ramification_order(const RelationK& c, Point alpha, Point beta);

struct FinitePoset {
    std::vector<std::string> labels;
    std::vector<std::vector<char>> leq;
    std::size_t size() const { return labels.size(); }
    bool le(std::size_t a, std::size_t b) const { return leq[a][b] != 0; }
    bool incomparable(std::size_t a, std::size_t b) const { return !le(a, b) && !le(b, a); }
    RelationK as_relation() const;
    std::optional<std::size_t> sup(std::size_t a, std::size_t b) const;
    bool positive_type() const;  // every pair has a least upper bound
    std::string to_dot() const;  // Hasse diagram, least elements at the bottom
};

// Cones below the set of common upper bounds of two incomparable elements.
std::size_t ramification_index(const FinitePoset& p, std::size_t a, std::size_t b);

struct SemilinearFromC {
    FinitePoset lambda;                          // 2-subsets modulo equivalence
    std::vector<std::pair<Point, Point>> node_rep;
    std::vector<std::vector<std::size_t>> point_chain;  // alpha -> nodes of its pairs
    bool node_map_injective = true;
    AxiomReport semilinear;
    bool r_s_equivalences = true;  // R_alpha and S_alpha are equivalence relations
    bool s_refines_r = true;
    bool positive_type = true;
};
SemilinearFromC semilinear_from_c(const RelationK& c);

struct LambdaWord {
    std::vector<Rational> q;        // strictly decreasing
    std::vector<std::size_t> u;     // letters between consecutive rationals
};
struct WordModel {
    std::vector<LambdaWord> words;
    FinitePoset poset;
    bool ramification_ok = true;  // every ramification point has index s
};
// Words q1 u1 q2 ... qk over the given rationals with an alphabet of s-1 letters.
WordModel lambda_word_model(const std::vector<Rational>& rationals, std::size_t s, std::size_t cap = 5000);
bool word_le(const LambdaWord& a, const LambdaWord& b);

struct DerivedRelation {
    RelationK relation;
    AxiomReport report;
};
// B(a;b,c): b<=a<=c or c<=a<=b, or a = sup(b,c), or b<=a incomparable to c (or symmetrically).
DerivedRelation betweenness_from_semilinear(const FinitePoset& p);
// C(b;c,d) iff D(alpha,b;c,d), on the remaining points renumbered in increasing order.
DerivedRelation c_from_d_at_point(const RelationK& d, Point alpha);
struct ChainModel {
    std::vector<std::vector<std::size_t>> chains;  // maximal chains, as sorted node lists
    DerivedRelation derived;
};
// Points are maximal chains; C(a;b,c) iff a n b = a n c != b n c.
ChainModel c_from_maximal_chains(const FinitePoset& p, std::size_t cap = 4096);

// Relations from the family of translates of sigma0.
DerivedRelation preorder_from_family(const Group& g, const PointSet& sigma0);  // a<=b iff every translate holding b holds a
DerivedRelation c_from_family(const Group& g, const PointSet& sigma0);  // some translate holds b,c but not a
DerivedRelation b_from_family(const Group& g, const PointSet& sigma0);  // every translate holding b,c holds a
DerivedRelation d_from_family(const Group& g, const PointSet& sigma0);  // disjoint translates hold {a,b} and {c,d}
std::vector<PointSet> translates(const Group& g, const PointSet& sigma0);

struct SubsetClass {
    bool stable = false;       // each translate contains or is contained in sigma
    bool semistable = false;   // each translate meets sigma
    bool highly_atypical = false;
    bool separates_pairs = false;
    bool separates_ordered_pairs = false;
    bool idealistic = false;
    bool degenerate = false;   // sigma empty or everything
    std::size_t translate_count = 0;
};
SubsetClass classify_subset(const Group& g, const PointSet& sigma);
// For highly atypical sigma under a primitive group: every pair lies in some translate.
bool translates_cover_pairs(const Group& g, const PointSet& sigma);

struct MutationReport {
    std::size_t mutations = 0;
    std::size_t detected = 0;  // some axiom true of the original fails on the mutant
    std::vector<Tuple> undetected;
};
// Flip one tuple per mutation (delete a present tuple or insert an absent one, alternately).
MutationReport mutation_sensitivity(const RelationK& base, Family f, std::size_t count, std::uint64_t seed);

}  // namespace permlab
