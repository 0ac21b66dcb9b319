#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "permlab/congruence.hpp"

namespace permlab {

struct JordanWitness {
    PointSet set;
    std::size_t witness_order = 0;        // |G_(Omega - Gamma)|
    std::vector<Perm> witness_generators;  // generate G_(Omega - Gamma), acting on Omega
    bool proper = false;
};

// Group generated by gens, relabeled onto the points of gamma (gens must preserve gamma).
Group restrict_to(const std::vector<Perm>& gens, const PointSet& gamma);

std::optional<JordanWitness> is_jordan(const Group& g, const PointSet& gamma, std::size_t cap = default_cap());

// All Jordan sets, sorted by size then lexicographically. Degree above max_degree needs a
// size filter (min_size) to keep the complement scan bounded.
std::vector<JordanWitness> jordan_sets(const Group& g, std::size_t cap = default_cap(),
                                       std::size_t max_degree = 14);

// Unions of the overlap-connected components of the Jordan sets disjoint from delta0.
// With a seed, only the component union containing it (empty if none).
std::vector<PointSet> maximal_jordan_avoiding(const std::vector<JordanWitness>& catalog, const PointSet& delta0,
                                              std::optional<Point> seed = std::nullopt);

// Finite reading: span(Gamma) = Omega minus the union of all Jordan sets avoiding Gamma.
class SpanGeometry {
public:
    SpanGeometry(const Group& g, std::vector<JordanWitness> catalog);
    explicit SpanGeometry(const Group& g, std::size_t cap = default_cap());
    const PointSet& span(const PointSet& gamma);
    const std::vector<JordanWitness>& catalog() const { return catalog_; }
    const Group& group() const { return g_; }

private:
    Group g_;
    std::vector<JordanWitness> catalog_;
    std::map<PointSet, PointSet> memo_;
};

struct GeometryAudit {
    bool extensive = true;   // Gamma within span(Gamma)
    bool idempotent = true;
    bool monotone = true;
    bool empty_span_empty = true;
    bool singletons_closed = true;  // only asserted for 2-transitive G
    bool exchange = true;
    std::size_t exchange_checked = 0;
    // orbit count of G on ordered independent k-tuples, k = 1..size_cap; 0 when none exist
    std::vector<std::size_t> independent_orbits;
    bool transitive_on_independent = true;
    bool passes() const;
};
GeometryAudit geometry_audit(SpanGeometry& geo, std::size_t size_cap = 3);

// Property suites over a Jordan catalog; each reports instances checked and violations.
struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t violations = 0;
};
PropertyResult check_translation_closed(const Group& g, const std::vector<JordanWitness>& catalog);
PropertyResult check_overlap_unions(const std::vector<JordanWitness>& catalog);
PropertyResult check_maximal_subset_blocks(const Group& g, const std::vector<JordanWitness>& catalog,
                                           std::size_t cap = default_cap());
PropertyResult check_translate_comparability(const Group& g, const std::vector<JordanWitness>& catalog);
PropertyResult check_connected_union_primitive(const std::vector<JordanWitness>& catalog, std::mt19937_64& rng,
                                               std::size_t samples);
PropertyResult check_connected_union_transitivity(const std::vector<JordanWitness>& catalog, std::mt19937_64& rng,
                                                  std::size_t samples);
PropertyResult check_overlapping_primitive_pairs(const std::vector<JordanWitness>& catalog, std::size_t max_pairs = 2000);
PropertyResult check_translates_cover_pairs(const Group& g, const std::vector<JordanWitness>& catalog);

// B is a block for the group generated by gens iff every translate equals B or misses it.
bool is_block_for(const std::vector<Perm>& gens, const PointSet& b);

}  // namespace permlab
